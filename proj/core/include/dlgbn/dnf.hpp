#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dlgbn/trivalue.hpp"

namespace dlgbn {

struct Literal {
    std::uint32_t var = 0;
    bool positive = true;
    // positive literal of a variable sorts before its negative one
    auto operator<=>(const Literal& o) const {
        if (auto c = var <=> o.var; c != 0) return c;
        return (positive ? 0 : 1) <=> (o.positive ? 0 : 1);
    }
    bool operator==(const Literal&) const = default;
};

// Conjunction of literals; empty means ⊤. A clause may contain both
// polarities of one variable (it then never evaluates above Unknown).
struct DnfClause {
    std::vector<Literal> literals;  // sorted, unique
    auto operator<=>(const DnfClause&) const = default;
};

// Disjunction of clauses kept verbatim apart from ordering: no Boolean
// simplification, so syntactic occurrences survive for the syntactic
// influence graph. The only normalization is {⊤} -> True and {} -> False.
class DnfFormula {
public:
    enum class Kind { False, True, Clauses };

    DnfFormula() = default;  // False
    static DnfFormula constant(bool value);
    static DnfFormula from_clauses(std::vector<DnfClause> clauses);

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ != Kind::Clauses; }
    bool constant_value() const { return kind_ == Kind::True; }
    const std::vector<DnfClause>& clauses() const { return clauses_; }

    // constant, or a single conjunction of literals
    bool is_and_not() const { return is_constant() || clauses_.size() == 1; }

    // Variables occurring in some literal, ascending.
    std::vector<std::uint32_t> variables() const;

    Tri eval3(const Interp3& m) const;
    bool eval2(State s) const;

    // Value of the formula over the cell of m: the constant the restriction
    // takes on every completion, Unknown when it varies. Strictly more
    // defined than eval3 (a tautology over free variables evaluates to True
    // here but to Unknown under the recursive rules).
    Tri eval_restricted(const Interp3& m) const;

    // Names indexed by variable id; "|" for or, "&" for and, "!" for not.
    std::string to_string(const std::vector<std::string>& names) const;

    auto operator<=>(const DnfFormula&) const = default;

private:
    Kind kind_ = Kind::False;
    std::vector<DnfClause> clauses_;
};

}  // namespace dlgbn
