#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dlgbn/dnf.hpp"
#include "dlgbn/errors.hpp"
#include "dlgbn/program.hpp"
#include "dlgbn/signed_graph.hpp"
#include "dlgbn/transition_graph.hpp"

namespace dlgbn {

// Sub-spaces are three-valued maps over the network's variable order.
using Subspace = Interp3;

class BooleanNetwork {
public:
    BooleanNetwork() = default;
    BooleanNetwork(std::vector<std::string> variables, std::vector<DnfFormula> functions);

    std::size_t size() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const DnfFormula& function(std::uint32_t v) const { return functions_[v]; }
    const std::vector<DnfFormula>& functions() const { return functions_; }

    // every update function constant or a single conjunction of literals
    bool is_and_not() const;

    friend bool operator==(const BooleanNetwork& a, const BooleanNetwork& b) {
        return a.variables_ == b.variables_ && a.functions_ == b.functions_;
    }

private:
    std::vector<std::string> variables_;
    std::vector<DnfFormula> functions_;
};

// var(f) = HB, f_v = disjunction of the body formulas of the rules headed by
// v, False when no rule heads v. Clauses are kept verbatim.
BooleanNetwork encode(const GroundProgram& g);

// Semantic arcs found by brute force over the assignments of the variables a
// function mentions.
SignedDigraph influence_graph(const BooleanNetwork& f, const Caps& caps = {});

// One arc per literal occurrence.
SignedDigraph syntactic_influence_graph(const BooleanNetwork& f);

// Removes variables whose function is a constant, substituting their values
// into the remaining functions under three-valued simplification.
BooleanNetwork percolate_one_step(const BooleanNetwork& f);

struct PercolationResult {
    BooleanNetwork residual;
    std::vector<std::string> original_variables;
    Interp3 fixed;  // over the original order; Unknown where not percolated
};

PercolationResult percolate(const BooleanNetwork& f);

TransitionGraph sync_stg(const BooleanNetwork& f, const Caps& caps = {});
TransitionGraph async_stg(const BooleanNetwork& f, const Caps& caps = {});

std::vector<State> fixed_points(const BooleanNetwork& f, const Caps& caps = {});

// Exhaustive 3^n scans in canonical order.
std::vector<Subspace> trap_spaces(const BooleanNetwork& f, const Caps& caps = {});
std::vector<Subspace> complete_trap_spaces(const BooleanNetwork& f, const Caps& caps = {});
std::vector<Subspace> minimal_trap_spaces(const BooleanNetwork& f, const Caps& caps = {});

bool is_trap_space(const BooleanNetwork& f, const Subspace& m);
bool is_complete_trap_space(const BooleanNetwork& f, const Subspace& m);

// Whether the recursive three-valued evaluation agrees with the restriction
// evaluation on every sub-space of the function's dependencies. False for
// functions whose clauses only cancel jointly (e.g. a ∨ (b∧¬a)); always true
// for purely negative bodies and for single clauses without repeated
// variables. Conservatively false above 12 dependencies.
bool kleene_exact(const DnfFormula& f, std::size_t var_count);
bool kleene_exact(const BooleanNetwork& f);

std::string subspaces_to_json(const BooleanNetwork& f, const std::vector<Subspace>& spaces);

}  // namespace dlgbn
