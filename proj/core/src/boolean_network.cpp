#include "dlgbn/boolean_network.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace dlgbn {

BooleanNetwork::BooleanNetwork(std::vector<std::string> variables,
                               std::vector<DnfFormula> functions)
    : variables_(std::move(variables)), functions_(std::move(functions)) {
    if (variables_.size() != functions_.size())
        throw std::logic_error("one update function per variable required");
    for (const DnfFormula& f : functions_)
        for (std::uint32_t v : f.variables())
            if (v >= variables_.size())
                throw std::logic_error("update function mentions an unknown variable");
}

bool BooleanNetwork::is_and_not() const {
    return std::all_of(functions_.begin(), functions_.end(),
                       [](const DnfFormula& f) { return f.is_and_not(); });
}

BooleanNetwork encode(const GroundProgram& g) {
    std::size_t n = g.atom_count();
    std::vector<std::vector<DnfClause>> clauses(n);
    for (const GroundRule& r : g.rules()) {
        DnfClause c;
        for (AtomId a : r.pos_body) c.literals.push_back({a, true});
        for (AtomId a : r.neg_body) c.literals.push_back({a, false});
        clauses[r.head].push_back(std::move(c));
    }
    std::vector<DnfFormula> fns;
    fns.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (clauses[v].empty())
            fns.push_back(DnfFormula::constant(false));
        else
            fns.push_back(DnfFormula::from_clauses(std::move(clauses[v])));
    }
    return BooleanNetwork(g.atom_names(), std::move(fns));
}

SignedDigraph influence_graph(const BooleanNetwork& f, const Caps& caps) {
    SignedDigraph ig(f.variables());
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        const DnfFormula& fv = f.function(v);
        std::vector<std::uint32_t> deps = fv.variables();
        if (deps.size() > static_cast<std::size_t>(caps.max_ig_deps))
            throw CapExceeded("function of " + f.variables()[v] + " depends on " +
                              std::to_string(deps.size()) + " variables, limit is " +
                              std::to_string(caps.max_ig_deps));
        for (std::size_t ui = 0; ui < deps.size(); ++ui) {
            std::uint32_t u = deps[ui];
            bool pos = false, neg = false;
            // all assignments of the other dependencies
            std::uint64_t rest = std::uint64_t{1} << (deps.size() - 1);
            for (std::uint64_t a = 0; a < rest && !(pos && neg); ++a) {
                State x = 0;
                std::size_t bit = 0;
                for (std::size_t di = 0; di < deps.size(); ++di) {
                    if (di == ui) continue;
                    if (a >> bit & 1u) x |= State{1} << deps[di];
                    ++bit;
                }
                bool at0 = fv.eval2(x);
                bool at1 = fv.eval2(x | (State{1} << u));
                if (!at0 && at1) pos = true;
                if (at0 && !at1) neg = true;
            }
            if (pos) ig.add_arc(u, v, Sign::Positive);
            if (neg) ig.add_arc(u, v, Sign::Negative);
        }
    }
    return ig;
}

SignedDigraph syntactic_influence_graph(const BooleanNetwork& f) {
    SignedDigraph syng(f.variables());
    for (std::uint32_t v = 0; v < f.size(); ++v)
        for (const DnfClause& c : f.function(v).clauses())
            for (const Literal& l : c.literals)
                syng.add_arc(l.var, v, l.positive ? Sign::Positive : Sign::Negative);
    return syng;
}

namespace {

// Substitutes known constant values into a formula under the three-valued
// simplification rules: a true literal drops from its clause, a false literal
// kills its clause, a clause emptied by drops makes the whole formula true.
DnfFormula substitute_constants(const DnfFormula& f, const std::map<std::uint32_t, bool>& values,
                                const std::vector<std::uint32_t>& remap) {
    if (f.is_constant()) return f;
    std::vector<DnfClause> kept;
    for (const DnfClause& c : f.clauses()) {
        DnfClause out;
        bool killed = false;
        bool dropped = false;
        for (const Literal& l : c.literals) {
            auto it = values.find(l.var);
            if (it == values.end()) {
                out.literals.push_back({remap[l.var], l.positive});
                continue;
            }
            bool lit_value = l.positive ? it->second : !it->second;
            if (lit_value) {
                dropped = true;  // literal disappears
            } else {
                killed = true;
                break;
            }
        }
        if (killed) continue;
        if (out.literals.empty() && dropped) return DnfFormula::constant(true);
        kept.push_back(std::move(out));
    }
    if (kept.empty()) return DnfFormula::constant(false);
    return DnfFormula::from_clauses(std::move(kept));
}

}  // namespace

BooleanNetwork percolate_one_step(const BooleanNetwork& f) {
    std::map<std::uint32_t, bool> constants;
    for (std::uint32_t v = 0; v < f.size(); ++v)
        if (f.function(v).is_constant()) constants[v] = f.function(v).constant_value();
    if (constants.empty()) return f;

    std::vector<std::string> vars;
    std::vector<std::uint32_t> remap(f.size(), 0);
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        if (!constants.count(v)) {
            remap[v] = static_cast<std::uint32_t>(vars.size());
            vars.push_back(f.variables()[v]);
        }
    }
    std::vector<DnfFormula> fns;
    for (std::uint32_t v = 0; v < f.size(); ++v)
        if (!constants.count(v)) fns.push_back(substitute_constants(f.function(v), constants, remap));
    return BooleanNetwork(std::move(vars), std::move(fns));
}

PercolationResult percolate(const BooleanNetwork& f) {
    PercolationResult out;
    out.original_variables = f.variables();
    out.fixed = Interp3(f.size(), Tri::Unknown);
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < f.size(); ++i) pos[f.variables()[i]] = i;

    BooleanNetwork cur = f;
    while (cur.size() > 0) {
        bool any_constant = false;
        for (std::uint32_t v = 0; v < cur.size(); ++v) {
            if (cur.function(v).is_constant()) {
                any_constant = true;
                out.fixed[pos.at(cur.variables()[v])] = tri_of(cur.function(v).constant_value());
            }
        }
        if (!any_constant) break;
        cur = percolate_one_step(cur);
    }
    out.residual = std::move(cur);
    return out;
}

TransitionGraph sync_stg(const BooleanNetwork& f, const Caps& caps) {
    caps.require_2v(f.size(), "synchronous state transition graph");
    TransitionGraph tg;
    tg.variables = f.variables();
    tg.functional = true;
    std::size_t states = std::size_t{1} << f.size();
    tg.successor.resize(states);
    for (State s = 0; s < states; ++s) {
        State t = 0;
        for (std::uint32_t v = 0; v < f.size(); ++v)
            if (f.function(v).eval2(s)) t |= State{1} << v;
        tg.successor[s] = t;
    }
    return tg;
}

TransitionGraph async_stg(const BooleanNetwork& f, const Caps& caps) {
    caps.require_2v(f.size(), "asynchronous state transition graph");
    TransitionGraph tg;
    tg.variables = f.variables();
    tg.functional = false;
    std::size_t states = std::size_t{1} << f.size();
    tg.out_arcs.resize(states);
    for (State s = 0; s < states; ++s) {
        for (std::uint32_t v = 0; v < f.size(); ++v) {
            bool now = s >> v & 1u;
            if (f.function(v).eval2(s) != now) tg.out_arcs[s].push_back(s ^ (State{1} << v));
        }
        std::sort(tg.out_arcs[s].begin(), tg.out_arcs[s].end());
    }
    return tg;
}

std::vector<State> fixed_points(const BooleanNetwork& f, const Caps& caps) {
    caps.require_2v(f.size(), "fixed point scan");
    std::vector<State> out;
    std::size_t states = std::size_t{1} << f.size();
    for (State s = 0; s < states; ++s) {
        bool fixed = true;
        for (std::uint32_t v = 0; v < f.size() && fixed; ++v)
            fixed = f.function(v).eval2(s) == bool(s >> v & 1u);
        if (fixed) out.push_back(s);
    }
    return out;
}

bool is_trap_space(const BooleanNetwork& f, const Subspace& m) {
    // restriction evaluation; the recursive rules are too weak when a
    // function is constant on the cell without being syntactically constant
    for (std::uint32_t v = 0; v < f.size(); ++v)
        if (!leq_s(f.function(v).eval_restricted(m), m[v])) return false;
    return true;
}

bool is_complete_trap_space(const BooleanNetwork& f, const Subspace& m) {
    for (std::uint32_t v = 0; v < f.size(); ++v)
        if (f.function(v).eval3(m) != m[v]) return false;
    return true;
}

bool kleene_exact(const DnfFormula& f, std::size_t var_count) {
    if (f.is_constant()) return true;
    std::vector<std::uint32_t> deps = f.variables();
    if (deps.size() > 12) return false;
    // walk all 3^d assignments of the dependencies, other variables pinned
    std::vector<int> digit(deps.size(), 0);
    Interp3 m(var_count, Tri::False);
    while (true) {
        for (std::size_t i = 0; i < deps.size(); ++i) m[deps[i]] = static_cast<Tri>(digit[i]);
        if (f.eval3(m) != f.eval_restricted(m)) return false;
        std::size_t i = 0;
        for (; i < deps.size(); ++i) {
            if (++digit[i] <= 2) break;
            digit[i] = 0;
        }
        if (i == deps.size()) return true;
    }
}

bool kleene_exact(const BooleanNetwork& f) {
    for (const DnfFormula& fn : f.functions())
        if (!kleene_exact(fn, f.size())) return false;
    return true;
}

namespace {

// Enumerates all 3^n sub-spaces in canonical (value string) order: the first
// variable is the most significant digit, the last one ticks fastest.
template <typename Pred>
std::vector<Subspace> scan_subspaces(const BooleanNetwork& f, const Caps& caps, const char* what,
                                     Pred&& keep) {
    caps.require_3v(f.size(), what);
    std::size_t n = f.size();
    std::vector<Subspace> out;
    Subspace m(n, Tri::False);
    while (true) {
        if (keep(m)) out.push_back(m);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (m[i] != Tri::Unknown) {
                m[i] = static_cast<Tri>(static_cast<int>(m[i]) + 1);
                break;
            }
            m[i] = Tri::False;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

}  // namespace

std::vector<Subspace> trap_spaces(const BooleanNetwork& f, const Caps& caps) {
    return scan_subspaces(f, caps, "trap space scan",
                          [&](const Subspace& m) { return is_trap_space(f, m); });
}

std::vector<Subspace> complete_trap_spaces(const BooleanNetwork& f, const Caps& caps) {
    return scan_subspaces(f, caps, "complete trap space scan",
                          [&](const Subspace& m) { return is_complete_trap_space(f, m); });
}

std::vector<Subspace> minimal_trap_spaces(const BooleanNetwork& f, const Caps& caps) {
    return keep_s_minimal(trap_spaces(f, caps));
}

std::string subspaces_to_json(const BooleanNetwork& f, const std::vector<Subspace>& spaces) {
    nlohmann::json j;
    j["variables"] = f.variables();
    auto arr = nlohmann::json::array();
    for (const Subspace& m : spaces) arr.push_back(m.subspace_string());
    j["subspaces"] = arr;
    return j.dump(2) + "\n";
}

}  // namespace dlgbn
