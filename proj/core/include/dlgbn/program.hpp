#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dlgbn/errors.hpp"
#include "dlgbn/signed_graph.hpp"
#include "dlgbn/trivalue.hpp"

namespace dlgbn {

struct Term {
    enum class Kind { Constant, Variable };
    Kind kind = Kind::Constant;
    std::string name;
    auto operator<=>(const Term&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;
    bool is_ground() const;
    auto operator<=>(const Atom&) const = default;
};

struct Rule {
    Atom head;
    std::vector<Atom> pos_body;
    std::vector<Atom> neg_body;
    bool is_fact() const { return pos_body.empty() && neg_body.empty(); }
};

// Parsed program, rules in source order.
struct Program {
    std::vector<Rule> rules;
};

struct GroundAtom {
    std::string predicate;
    std::vector<std::string> args;
    std::string text() const;  // p(a,b) or p
    auto operator<=>(const GroundAtom&) const = default;
};

using AtomId = std::uint32_t;

struct GroundRule {
    AtomId head = 0;
    std::vector<AtomId> pos_body;  // sorted, unique
    std::vector<AtomId> neg_body;  // sorted, unique
    auto operator<=>(const GroundRule&) const = default;
};

// Variable-free program over a fixed Herbrand base. The base is sorted by
// (predicate, argument tuple) and may contain atoms no surviving rule
// mentions (the least-fixpoint transformation preserves the base).
class GroundProgram {
public:
    GroundProgram() = default;
    GroundProgram(std::vector<GroundAtom> herbrand_base, std::vector<std::string> universe,
                  std::vector<GroundRule> rules);

    const std::vector<GroundAtom>& herbrand_base() const { return atoms_; }
    const std::vector<std::string>& herbrand_universe() const { return universe_; }
    const std::vector<GroundRule>& rules() const { return rules_; }
    std::size_t atom_count() const { return atoms_.size(); }
    const GroundAtom& atom(AtomId id) const { return atoms_[id]; }
    std::string atom_name(AtomId id) const { return atoms_[id].text(); }
    std::vector<std::string> atom_names() const;

    bool uni_rule() const;   // each atom heads at most one rule
    bool negative() const;   // every positive body is empty

    friend bool operator==(const GroundProgram& a, const GroundProgram& b) {
        return a.atoms_ == b.atoms_ && a.rules_ == b.rules_;
    }

private:
    std::vector<GroundAtom> atoms_;
    std::vector<std::string> universe_;
    std::vector<GroundRule> rules_;

    void check_invariants() const;
};

Program parse(std::string_view text);

struct GroundResult {
    GroundProgram program;
    std::vector<std::string> warnings;  // unsafe-rule notices
};

GroundResult ground(const Program& p);

// parse + ground in one step; warnings dropped.
GroundProgram parse_ground(std::string_view text);

SignedDigraph atom_dependency_graph(const GroundProgram& g);

// No cycle of only positive arcs in the atom dependency graph.
bool is_tight(const GroundProgram& g);

// Canonical pretty print: rules sorted, "h :- a, not b." / "h." syntax.
std::string pretty_print(const GroundProgram& g);

std::string atom_names_of(const GroundProgram& g, State s);  // "{p, q}" or "∅"

}  // namespace dlgbn
