#include "dlgbn/dnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlgbn {

DnfFormula DnfFormula::constant(bool value) {
    DnfFormula f;
    f.kind_ = value ? Kind::True : Kind::False;
    return f;
}

DnfFormula DnfFormula::from_clauses(std::vector<DnfClause> clauses) {
    for (DnfClause& c : clauses) {
        std::sort(c.literals.begin(), c.literals.end());
        c.literals.erase(std::unique(c.literals.begin(), c.literals.end()), c.literals.end());
    }
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    DnfFormula f;
    if (clauses.empty()) {
        f.kind_ = Kind::False;
    } else if (clauses.size() == 1 && clauses[0].literals.empty()) {
        f.kind_ = Kind::True;
    } else {
        f.kind_ = Kind::Clauses;
        f.clauses_ = std::move(clauses);
    }
    return f;
}

std::vector<std::uint32_t> DnfFormula::variables() const {
    std::vector<std::uint32_t> vars;
    for (const DnfClause& c : clauses_)
        for (const Literal& l : c.literals) vars.push_back(l.var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Tri DnfFormula::eval3(const Interp3& m) const {
    if (kind_ == Kind::False) return Tri::False;
    if (kind_ == Kind::True) return Tri::True;
    Tri acc = Tri::False;
    for (const DnfClause& c : clauses_) {
        Tri clause = Tri::True;
        for (const Literal& l : c.literals) {
            Tri v = m[l.var];
            clause = tri_and(clause, l.positive ? v : tri_not(v));
            if (clause == Tri::False) break;
        }
        acc = tri_or(acc, clause);
        if (acc == Tri::True) return acc;
    }
    return acc;
}

bool DnfFormula::eval2(State s) const {
    if (kind_ == Kind::False) return false;
    if (kind_ == Kind::True) return true;
    for (const DnfClause& c : clauses_) {
        bool clause = true;
        for (const Literal& l : c.literals) {
            bool v = (s >> l.var) & 1u;
            if ((l.positive ? v : !v) == false) {
                clause = false;
                break;
            }
        }
        if (clause) return true;
    }
    return false;
}

Tri DnfFormula::eval_restricted(const Interp3& m) const {
    if (kind_ == Kind::False) return Tri::False;
    if (kind_ == Kind::True) return Tri::True;
    std::vector<std::uint32_t> free_vars;
    for (std::uint32_t v : variables())
        if (m[v] == Tri::Unknown) free_vars.push_back(v);
    if (free_vars.size() > 26)
        throw std::length_error("restriction scan over too many free variables");
    State base = 0;
    for (std::uint32_t v : variables())
        if (m[v] == Tri::True) base |= State{1} << v;
    bool seen0 = false, seen1 = false;
    for (State a = 0; a < (State{1} << free_vars.size()); ++a) {
        State s = base;
        for (std::size_t j = 0; j < free_vars.size(); ++j)
            if (a >> j & 1u) s |= State{1} << free_vars[j];
        (eval2(s) ? seen1 : seen0) = true;
        if (seen0 && seen1) return Tri::Unknown;
    }
    return seen1 ? Tri::True : Tri::False;
}

std::string DnfFormula::to_string(const std::vector<std::string>& names) const {
    if (kind_ == Kind::False) return "0";
    if (kind_ == Kind::True) return "1";
    std::string out;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        if (i) out += " | ";
        const DnfClause& c = clauses_[i];
        if (c.literals.empty()) {
            out += "1";
            continue;
        }
        bool paren = clauses_.size() > 1 && c.literals.size() > 1;
        if (paren) out += "(";
        for (std::size_t j = 0; j < c.literals.size(); ++j) {
            if (j) out += " & ";
            if (!c.literals[j].positive) out += "!";
            out += names[c.literals[j].var];
        }
        if (paren) out += ")";
    }
    return out;
}

}  // namespace dlgbn
