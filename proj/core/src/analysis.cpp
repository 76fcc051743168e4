#include "dlgbn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dlgbn/boolean_network.hpp"
#include "dlgbn/dynamics.hpp"
#include "dlgbn/semantics.hpp"
#include "json.hpp"

namespace dlgbn {

namespace {

std::uint64_t pow_sat(std::uint64_t base, std::uint64_t exp) {
    constexpr std::uint64_t kSat = std::uint64_t(1) << 62;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > kSat / base) return kSat;
        out *= base;
    }
    return out;
}

// actual <= 3^(rules/3), checked as actual^3 <= 3^rules without rounding.
bool within_cube_root_bound(std::uint64_t actual, std::uint64_t rules) {
    if (actual <= 1) return true;
    unsigned __int128 cube = static_cast<unsigned __int128>(actual) * actual * actual;
    unsigned __int128 pw = 1;
    for (std::uint64_t i = 0; i < rules; ++i) {
        pw *= 3;
        if (pw >= cube) return true;
    }
    return pw >= cube;
}

// Everything the theorem registry and the bound checks need, computed once.
struct Instance {
    const GroundProgram& g;
    Caps caps;

    SignedDigraph adg;
    std::vector<Cycle> cycles;
    bool tight = false;
    bool uni_rule = false;
    bool negative = false;
    bool odd_cycle = false;
    bool even_cycle = false;

    BooleanNetwork f;
    SignedDigraph syng;
    SignedDigraph ig;
    bool no_dup_literals = false;  // no function repeats a variable in a clause
    bool kleene_ok = false;        // recursive evaluation is exact for every function

    std::vector<State> supported, stable, bn_fixed;
    std::vector<Interp3> supported_partial, stable_partial, regular;
    std::vector<Interp3> bn_traps, bn_complete, bn_minimal;

    TransitionGraph tgst, tgsp, sstg, astg;
    std::vector<std::vector<State>> stable_classes, supported_classes;
    std::vector<Interp3> st_traps, su_traps;

    GroundProgram lfp;
    SignedDigraph lfp_adg;

    explicit Instance(const GroundProgram& prog, const Caps& c) : g(prog), caps(c) {
        adg = atom_dependency_graph(g);
        cycles = enumerate_simple_cycles(adg, caps.max_cycles);
        tight = is_tight(g);
        uni_rule = g.uni_rule();
        negative = g.negative();
        for (const Cycle& cy : cycles) (cy.is_even() ? even_cycle : odd_cycle) = true;

        f = encode(g);
        syng = syntactic_influence_graph(f);
        ig = influence_graph(f, caps);
        no_dup_literals = true;
        for (const DnfFormula& fn : f.functions()) {
            for (const DnfClause& cl : fn.clauses())
                for (std::size_t i = 0; i + 1 < cl.literals.size(); ++i)
                    if (cl.literals[i].var == cl.literals[i + 1].var) no_dup_literals = false;
        }

        kleene_ok = kleene_exact(f);

        supported = supported_models(g, caps);
        stable = stable_models(g, caps);
        supported_partial = supported_partial_models(g, caps);
        stable_partial = stable_partial_models(g, caps);
        regular = keep_s_minimal(stable_partial);

        bn_fixed = fixed_points(f, caps);
        bn_traps = trap_spaces(f, caps);
        bn_complete = complete_trap_spaces(f, caps);
        bn_minimal = keep_s_minimal(bn_traps);

        tgst = stable_tg(g, caps);
        tgsp = supported_tg(g, caps);
        sstg = sync_stg(f, caps);
        astg = async_stg(f, caps);
        stable_classes = strict_classes(tgst);
        supported_classes = strict_classes(tgsp);
        st_traps = stable_trap_spaces(g, caps);
        su_traps = supported_trap_spaces(g, caps);

        lfp = lfp_transform(g);
        lfp_adg = atom_dependency_graph(lfp);
    }

    std::size_t n() const { return g.atom_count(); }

    std::vector<Interp3> stable_as_interps() const { return states_to_interps(stable, n()); }
    std::vector<Interp3> supported_as_interps() const { return states_to_interps(supported, n()); }

    // some f_v is constant as a function, syntactically constant or not
    bool has_constant_function() const {
        Interp3 all_u(n(), Tri::Unknown);
        for (const DnfFormula& fn : f.functions())
            if (fn.eval_restricted(all_u) != Tri::Unknown) return true;
        return false;
    }

    bool every_odd_cycle_internally_delocalized() const {
        for (const Cycle& c : cycles) {
            if (c.is_even()) continue;
            auto triples = delocalizing_triples(adg, c);
            if (std::none_of(triples.begin(), triples.end(),
                             [](const DelocalizingTriple& t) { return t.internal; }))
                return false;
        }
        return true;
    }

    bool every_even_cycle_delocalized() const {
        for (const Cycle& c : cycles) {
            if (!c.is_even()) continue;
            if (delocalizing_triples(adg, c).empty()) return false;
        }
        return true;
    }

    std::vector<Cycle> triple_free_even_cycles() const {
        std::vector<Cycle> out;
        for (const Cycle& c : cycles)
            if (c.is_even() && delocalizing_triples(adg, c).empty()) out.push_back(c);
        return out;
    }
};

std::string list_counts(const Instance& in) {
    std::ostringstream os;
    os << "supported=" << in.supported.size() << " supported_partial=" << in.supported_partial.size()
       << " stable=" << in.stable.size() << " stable_partial=" << in.stable_partial.size()
       << " regular=" << in.regular.size();
    return os.str();
}

bool subset_of(const std::vector<Interp3>& a, const std::vector<Interp3>& b) {
    for (const Interp3& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

using Hypothesis = std::function<bool(const Instance&)>;
// empty string = pass, otherwise the counterexample payload
using Conclusion = std::function<std::string(const Instance&)>;

struct TheoremEntry {
    std::string id;
    Hypothesis applies;
    Conclusion check;
};

const std::vector<TheoremEntry>& theorem_registry() {
    static const std::vector<TheoremEntry> entries = [] {
        std::vector<TheoremEntry> r;
        auto always = [](const Instance&) { return true; };

        r.push_back({"encode/ig-subgraph-of-adg", always, [](const Instance& in) {
                         return in.ig.subgraph_of(in.adg) ? "" : "influence graph has an arc outside the dependency graph";
                     }});
        r.push_back({"encode/syng-equals-adg", always, [](const Instance& in) {
                         return in.syng == in.adg ? "" : "syntactic influence graph differs from the dependency graph";
                     }});
        r.push_back({"encode/supported-models-are-fixed-points", always, [](const Instance& in) {
                         return in.supported == in.bn_fixed ? "" : "supported models differ from the fixed points";
                     }});
        r.push_back({"encode/supported-partial-models-are-complete-trap-spaces", always,
                     [](const Instance& in) {
                         return in.supported_partial == in.bn_complete
                                    ? ""
                                    : "supported partial models differ from the complete trap spaces";
                     }});
        r.push_back({"encode/complete-trap-spaces-are-trap-spaces", always,
                     [](const Instance& in) {
                         for (const Interp3& m : in.bn_complete)
                             if (std::find(in.bn_traps.begin(), in.bn_traps.end(), m) ==
                                 in.bn_traps.end())
                                 return "complete trap space " + m.subspace_string() +
                                        " is not a trap space";
                         return std::string();
                     }});
        // The next two need the recursive evaluation to be exact: a function
        // whose clauses cancel only jointly (a ∨ (b∧¬a)) admits trap spaces
        // with no complete trap space below them.
        auto exact_eval = [](const Instance& in) { return in.kleene_ok; };
        r.push_back({"encode/min-complete-trap-spaces-are-min-trap-spaces", exact_eval,
                     [](const Instance& in) {
                         return keep_s_minimal(in.bn_complete) == in.bn_minimal
                                    ? ""
                                    : "minimal complete trap spaces differ from minimal trap spaces";
                     }});
        r.push_back({"encode/trap-space-has-complete-below", exact_eval, [](const Instance& in) {
                         for (const Interp3& m : in.bn_traps) {
                             bool found = false;
                             for (const Interp3& c : in.bn_complete)
                                 if (c.leq_s(m)) {
                                     found = true;
                                     break;
                                 }
                             if (!found)
                                 return "trap space " + m.subspace_string() +
                                        " has no complete trap space below it";
                         }
                         return std::string();
                     }});
        r.push_back({"encode/percolation-preserves-complete-trap-spaces", always,
                     [](const Instance& in) {
                         PercolationResult p = percolate(in.f);
                         std::vector<Interp3> rebuilt;
                         Caps local = in.caps;
                         for (const Interp3& m : complete_trap_spaces(p.residual, local)) {
                             Interp3 full = p.fixed;
                             for (std::size_t i = 0; i < p.residual.size(); ++i) {
                                 auto it = std::find(p.original_variables.begin(),
                                                     p.original_variables.end(),
                                                     p.residual.variables()[i]);
                                 full[static_cast<std::size_t>(
                                     it - p.original_variables.begin())] = m[i];
                             }
                             rebuilt.push_back(full);
                         }
                         std::sort(rebuilt.begin(), rebuilt.end());
                         return rebuilt == in.bn_complete
                                    ? ""
                                    : "complete trap spaces changed across percolation";
                     }});
        r.push_back({"encode/supported-tg-is-sync-stg", always, [](const Instance& in) {
                         return in.tgsp.successor == in.sstg.successor
                                    ? ""
                                    : "supported transition graph differs from the synchronous one";
                     }});
        r.push_back({"uni-rule/encoded-bn-is-and-not",
                     [](const Instance& in) { return in.uni_rule; },
                     [](const Instance& in) {
                         return in.f.is_and_not() ? "" : "encoded network is not AND-NOT";
                     }});
        r.push_back({"uni-rule/ig-equals-adg", [](const Instance& in) { return in.uni_rule; },
                     [](const Instance& in) {
                         return in.ig == in.adg ? "" : "influence graph differs from the dependency graph";
                     }});

        r.push_back({"no-odd-cycle/regular-models-two-valued",
                     [](const Instance& in) { return !in.odd_cycle; },
                     [](const Instance& in) {
                         for (const Interp3& m : in.regular)
                             if (!m.is_two_valued())
                                 return "regular model " + m.value_string() + " is partial";
                         return std::string();
                     }});
        r.push_back({"no-odd-cycle/regular-equals-stable",
                     [](const Instance& in) { return !in.odd_cycle; },
                     [](const Instance& in) {
                         return in.regular == in.stable_as_interps()
                                    ? ""
                                    : "regular and stable model sets differ: " + list_counts(in);
                     }});
        r.push_back({"no-odd-cycle/stable-model-exists",
                     [](const Instance& in) { return !in.odd_cycle; },
                     [](const Instance& in) {
                         return in.stable.empty() ? "no stable model" : "";
                     }});
        r.push_back({"no-odd-cycle/lfp-preserves-odd-cycle-freeness",
                     [](const Instance& in) { return !in.odd_cycle; },
                     [](const Instance& in) {
                         return has_odd_cycle(in.lfp_adg, in.caps.max_cycles)
                                    ? "least fixpoint introduced an odd cycle"
                                    : "";
                     }});
        // A semantically constant update function (a tautological or
        // contradictory rule disjunction) erases its influence-graph arcs,
        // which breaks the complementary-fixed-point construction; the
        // usual hypotheses miss this, see {a. ; a :- not c. ; b :- a. ;
        // c :- not b.}.
        r.push_back({"scc-no-odd-cycle/two-complementary-stable-models",
                     [](const Instance& in) {
                         return in.tight && !in.odd_cycle && !in.adg.arcs().empty() &&
                                is_strongly_connected(in.adg) && !in.has_constant_function();
                     },
                     [](const Instance& in) {
                         auto bip = positive_negative_bipartition(in.adg);
                         if (!bip) return std::string("bipartition failed");
                         State a = 0;
                         for (std::uint32_t v : bip->positive) a |= State{1} << v;
                         State b = static_cast<State>(((std::uint64_t{1} << in.n()) - 1) & ~a);
                         if (!std::binary_search(in.stable.begin(), in.stable.end(), a))
                             return std::string("positive class is not a stable model");
                         if (!std::binary_search(in.stable.begin(), in.stable.end(), b))
                             return std::string("negative class is not a stable model");
                         return std::string();
                     }});
        r.push_back({"no-even-cycle/unique-supported-partial-model",
                     [](const Instance& in) { return !in.even_cycle; },
                     [](const Instance& in) {
                         return in.supported_partial.size() == 1
                                    ? ""
                                    : "found " + std::to_string(in.supported_partial.size()) +
                                          " supported partial models";
                     }});
        r.push_back({"no-even-cycle/unique-stable-partial-model",
                     [](const Instance& in) { return !in.even_cycle; },
                     [](const Instance& in) {
                         return in.stable_partial.size() == 1
                                    ? ""
                                    : "found " + std::to_string(in.stable_partial.size()) +
                                          " stable partial models";
                     }});
        r.push_back({"no-even-cycle/unique-regular-model",
                     [](const Instance& in) { return !in.even_cycle; },
                     [](const Instance& in) {
                         return in.regular.size() == 1
                                    ? ""
                                    : "found " + std::to_string(in.regular.size()) + " regular models";
                     }});
        r.push_back({"no-even-cycle/at-most-one-stable-model",
                     [](const Instance& in) { return !in.even_cycle; },
                     [](const Instance& in) {
                         return in.stable.size() <= 1
                                    ? ""
                                    : "found " + std::to_string(in.stable.size()) + " stable models";
                     }});
        r.push_back({"no-even-cycle/unique-complete-trap-space",
                     [](const Instance& in) {
                         return !has_even_cycle(in.syng, in.caps.max_cycles);
                     },
                     [](const Instance& in) {
                         return in.bn_complete.size() == 1
                                    ? ""
                                    : "found " + std::to_string(in.bn_complete.size()) +
                                          " complete trap spaces";
                     }});
        r.push_back({"no-odd-cycle-ig/async-no-cyclic-attractor",
                     [](const Instance& in) { return !has_odd_cycle(in.ig, in.caps.max_cycles); },
                     [](const Instance& in) {
                         for (const auto& att : attractors(in.astg))
                             if (!is_fixed_point(in.astg, att))
                                 return std::string("asynchronous dynamics has a cyclic attractor");
                         return std::string();
                     }});

        r.push_back({"tight/stable-equals-supported",
                     [](const Instance& in) { return in.tight; },
                     [](const Instance& in) {
                         return in.stable == in.supported ? ""
                                                          : "stable and supported model sets differ";
                     }});
        r.push_back({"tight/stable-partial-equals-supported-partial",
                     [](const Instance& in) { return in.tight; },
                     [](const Instance& in) {
                         return in.stable_partial == in.supported_partial
                                    ? ""
                                    : "stable partial and supported partial model sets differ";
                     }});
        r.push_back({"negative/stable-partial-equals-supported-partial",
                     [](const Instance& in) { return in.negative; },
                     [](const Instance& in) {
                         return in.stable_partial == in.supported_partial
                                    ? ""
                                    : "stable partial and supported partial model sets differ";
                     }});
        r.push_back({"negative/stable-tg-equals-supported-tg",
                     [](const Instance& in) { return in.negative; },
                     [](const Instance& in) {
                         return in.tgst.successor == in.tgsp.successor
                                    ? ""
                                    : "stable and supported transition graphs differ";
                     }});
        r.push_back({"negative/stable-trap-spaces-equal-supported-trap-spaces",
                     [](const Instance& in) { return in.negative; },
                     [](const Instance& in) {
                         return in.st_traps == in.su_traps
                                    ? ""
                                    : "stable and supported trap space sets differ";
                     }});

        r.push_back({"lfp/is-negative-same-base", always, [](const Instance& in) {
                         if (!in.lfp.negative()) return std::string("least fixpoint is not negative");
                         if (in.lfp.herbrand_base() != in.g.herbrand_base())
                             return std::string("least fixpoint changed the herbrand base");
                         return std::string();
                     }});
        r.push_back({"lfp/preserves-stable-family", always, [](const Instance& in) {
                         Caps c = in.caps;
                         if (stable_partial_models(in.lfp, c) != in.stable_partial)
                             return std::string("stable partial models changed under the least fixpoint");
                         if (stable_models(in.lfp, c) != in.stable)
                             return std::string("stable models changed under the least fixpoint");
                         if (regular_models(in.lfp, c) != in.regular)
                             return std::string("regular models changed under the least fixpoint");
                         return std::string();
                     }});
        r.push_back({"lfp/same-stable-tg", always, [](const Instance& in) {
                         Caps c = in.caps;
                         return stable_tg(in.lfp, c).successor == in.tgst.successor
                                    ? ""
                                    : "stable transition graph changed under the least fixpoint";
                     }});
        r.push_back({"lfp/same-stable-trap-spaces", always, [](const Instance& in) {
                         Caps c = in.caps;
                         return stable_trap_spaces(in.lfp, c) == in.st_traps
                                    ? ""
                                    : "stable trap spaces changed under the least fixpoint";
                     }});

        r.push_back({"trap/regular-models-are-min-stable-trap-spaces", always,
                     [](const Instance& in) {
                         return keep_s_minimal(in.st_traps) == in.regular
                                    ? ""
                                    : "minimal stable trap spaces differ from the regular models";
                     }});
        r.push_back({"trap/min-supported-partial-are-min-supported-trap-spaces",
                     [](const Instance& in) { return in.kleene_ok; },
                     [](const Instance& in) {
                         return keep_s_minimal(in.su_traps) == keep_s_minimal(in.supported_partial)
                                    ? ""
                                    : "minimal supported trap spaces differ from minimal supported partial models";
                     }});
        r.push_back({"trap/stable-partial-models-are-stable-trap-spaces", always,
                     [](const Instance& in) {
                         return subset_of(in.stable_partial, in.st_traps)
                                    ? ""
                                    : "a stable partial model is not a stable trap space";
                     }});
        r.push_back({"trap/supported-partial-models-are-supported-trap-spaces", always,
                     [](const Instance& in) {
                         return subset_of(in.supported_partial, in.su_traps)
                                    ? ""
                                    : "a supported partial model is not a supported trap space";
                     }});
        r.push_back({"trap/supported-trap-spaces-are-bn-trap-spaces", always,
                     [](const Instance& in) {
                         return in.su_traps == in.bn_traps
                                    ? ""
                                    : "supported trap spaces differ from the network trap spaces";
                     }});
        r.push_back({"trap/every-trap-space-covers-a-strict-class", always,
                     [](const Instance& in) {
                         auto covers_class = [](const Interp3& m,
                                                const std::vector<std::vector<State>>& classes) {
                             for (const auto& cls : classes) {
                                 bool all = true;
                                 for (State s : cls)
                                     if (!m.cell_contains(s)) {
                                         all = false;
                                         break;
                                     }
                                 if (all) return true;
                             }
                             return false;
                         };
                         for (const Interp3& m : in.st_traps)
                             if (!covers_class(m, in.stable_classes))
                                 return "stable trap space " + m.subspace_string() +
                                        " covers no strict stable class";
                         for (const Interp3& m : in.su_traps)
                             if (!covers_class(m, in.supported_classes))
                                 return "supported trap space " + m.subspace_string() +
                                        " covers no strict supported class";
                         return std::string();
                     }});
        r.push_back({"trap/min-trap-spaces-pairwise-inconsistent", always,
                     [](const Instance& in) {
                         auto check = [](const std::vector<Interp3>& traps) {
                             std::vector<Interp3> mins = keep_s_minimal(traps);
                             for (std::size_t i = 0; i < mins.size(); ++i)
                                 for (std::size_t j = i + 1; j < mins.size(); ++j)
                                     if (mins[i].consistent_with(mins[j])) return false;
                             return true;
                         };
                         if (!check(in.st_traps))
                             return std::string("two minimal stable trap spaces are consistent");
                         if (!check(in.su_traps))
                             return std::string("two minimal supported trap spaces are consistent");
                         return std::string();
                     }});
        r.push_back({"trap/regular-count-at-most-strict-stable-classes", always,
                     [](const Instance& in) {
                         return in.regular.size() <= in.stable_classes.size()
                                    ? ""
                                    : "more regular models than strict stable classes";
                     }});
        r.push_back({"trap/all-unknown-is-trap-space", always, [](const Instance& in) {
                         Interp3 all_u(in.n(), Tri::Unknown);
                         if (std::find(in.st_traps.begin(), in.st_traps.end(), all_u) ==
                             in.st_traps.end())
                             return std::string("all-unknown is not a stable trap space");
                         if (std::find(in.su_traps.begin(), in.su_traps.end(), all_u) ==
                             in.su_traps.end())
                             return std::string("all-unknown is not a supported trap space");
                         return std::string();
                     }});
        r.push_back({"trap/two-valued-trap-spaces-are-models", always, [](const Instance& in) {
                         auto two_valued = [](const std::vector<Interp3>& traps) {
                             std::vector<State> out;
                             for (const Interp3& m : traps)
                                 if (m.is_two_valued()) out.push_back(m.to_state());
                             std::sort(out.begin(), out.end());
                             return out;
                         };
                         if (two_valued(in.st_traps) != in.stable)
                             return std::string("two-valued stable trap spaces differ from stable models");
                         if (two_valued(in.su_traps) != in.supported)
                             return std::string(
                                 "two-valued supported trap spaces differ from supported models");
                         return std::string();
                     }});
        r.push_back({"trap/min-trap-sets-are-strict-classes", always, [](const Instance& in) {
                         auto as_sets = [](std::vector<std::vector<State>> xs) {
                             for (auto& x : xs) std::sort(x.begin(), x.end());
                             std::sort(xs.begin(), xs.end());
                             return xs;
                         };
                         if (as_sets(in.stable_classes) != attractors(in.tgst))
                             return std::string("strict stable classes differ from the minimal trap sets");
                         if (as_sets(in.supported_classes) != attractors(in.tgsp))
                             return std::string(
                                 "strict supported classes differ from the minimal trap sets");
                         for (const auto& cls : in.stable_classes)
                             if (!is_trap_set(in.tgst, cls))
                                 return std::string("a strict stable class is not a trap set");
                         return std::string();
                     }});
        r.push_back({"classes/size-one-classes-are-models", always, [](const Instance& in) {
                         auto singletons = [](const std::vector<std::vector<State>>& classes) {
                             std::vector<State> out;
                             for (const auto& cls : classes)
                                 if (cls.size() == 1) out.push_back(cls[0]);
                             std::sort(out.begin(), out.end());
                             return out;
                         };
                         if (singletons(in.stable_classes) != in.stable)
                             return std::string("size-1 stable classes differ from stable models");
                         if (singletons(in.supported_classes) != in.supported)
                             return std::string("size-1 supported classes differ from supported models");
                         return std::string();
                     }});
        r.push_back({"classes/strict-class-exists", always, [](const Instance& in) {
                         if (in.n() == 0) return std::string();
                         if (in.stable_classes.empty()) return std::string("no strict stable class");
                         if (in.supported_classes.empty())
                             return std::string("no strict supported class");
                         return std::string();
                     }});
        r.push_back({"classes/strict-supported-classes-are-sync-attractors", always,
                     [](const Instance& in) {
                         auto as_sets = [](std::vector<std::vector<State>> xs) {
                             for (auto& x : xs) std::sort(x.begin(), x.end());
                             std::sort(xs.begin(), xs.end());
                             return xs;
                         };
                         return as_sets(in.supported_classes) == attractors(in.sstg)
                                    ? ""
                                    : "strict supported classes differ from the synchronous attractors";
                     }});
        r.push_back({"bn/minimal-trap-space-contains-attractor", always, [](const Instance& in) {
                         auto contains_attractor = [&](const Interp3& m,
                                                       const std::vector<std::vector<State>>& atts) {
                             for (const auto& att : atts) {
                                 bool all = true;
                                 for (State s : att)
                                     if (!m.cell_contains(s)) {
                                         all = false;
                                         break;
                                     }
                                 if (all) return true;
                             }
                             return false;
                         };
                         auto sync_atts = attractors(in.sstg);
                         auto async_atts = attractors(in.astg);
                         for (const Interp3& m : in.bn_minimal) {
                             if (!contains_attractor(m, sync_atts))
                                 return "minimal trap space " + m.subspace_string() +
                                        " holds no synchronous attractor";
                             if (!contains_attractor(m, async_atts))
                                 return "minimal trap space " + m.subspace_string() +
                                        " holds no asynchronous attractor";
                         }
                         if (in.bn_minimal.size() > async_atts.size())
                             return std::string("more minimal trap spaces than asynchronous attractors");
                         return std::string();
                     }});
        r.push_back({"regular/exists", always, [](const Instance& in) {
                         if (in.n() == 0) return std::string();
                         return in.regular.empty() ? std::string("no regular model") : std::string();
                     }});
        r.push_back({"chain/subsumption", always, [](const Instance& in) {
                         std::vector<Interp3> stable_i = in.stable_as_interps();
                         if (!subset_of(stable_i, in.regular))
                             return std::string("a stable model is not regular");
                         if (!subset_of(in.regular, in.stable_partial))
                             return std::string("a regular model is not stable partial");
                         if (!subset_of(in.stable_partial, in.supported_partial))
                             return std::string("a stable partial model is not supported partial");
                         for (State s : in.stable)
                             if (!std::binary_search(in.supported.begin(), in.supported.end(), s))
                                 return std::string("a stable model is not supported");
                         return std::string();
                     }});
        r.push_back({"lemma/scc-parity-implies-sign-definite",
                     [](const Instance& in) {
                         return is_strongly_connected(in.adg) && (!in.odd_cycle || !in.even_cycle);
                     },
                     [](const Instance& in) {
                         return is_sign_definite(in.adg) ? "" : "graph is not sign-definite";
                     }});

        auto uni_hyp = [](const Instance& in) { return in.uni_rule && in.no_dup_literals; };
        r.push_back({"uni-rule/tight-odd-delocalized-stable-exists",
                     [uni_hyp](const Instance& in) {
                         return uni_hyp(in) && in.tight &&
                                in.every_odd_cycle_internally_delocalized();
                     },
                     [](const Instance& in) {
                         return in.stable.empty() ? "no stable model" : "";
                     }});
        r.push_back({"uni-rule/tight-odd-delocalized-regular-two-valued",
                     [uni_hyp](const Instance& in) {
                         return uni_hyp(in) && in.tight &&
                                in.every_odd_cycle_internally_delocalized();
                     },
                     [](const Instance& in) {
                         for (const Interp3& m : in.regular)
                             if (!m.is_two_valued())
                                 return "regular model " + m.value_string() + " is partial";
                         return std::string();
                     }});
        r.push_back({"uni-rule/even-delocalized-at-most-one-stable",
                     [uni_hyp](const Instance& in) {
                         return uni_hyp(in) && in.every_even_cycle_delocalized();
                     },
                     [](const Instance& in) {
                         return in.stable.size() <= 1
                                    ? ""
                                    : "found " + std::to_string(in.stable.size()) + " stable models";
                     }});
        r.push_back({"uni-rule/tight-even-delocalized-unique-regular",
                     [uni_hyp](const Instance& in) {
                         return uni_hyp(in) && in.tight && in.every_even_cycle_delocalized();
                     },
                     [](const Instance& in) {
                         return in.regular.size() == 1
                                    ? ""
                                    : "found " + std::to_string(in.regular.size()) + " regular models";
                     }});
        return r;
    }();
    return entries;
}

std::vector<BoundCheck> compute_bounds(const Instance& in, const FvsResult& even_fvs,
                                       const std::optional<std::vector<std::uint32_t>>& dtf_fvs) {
    std::vector<BoundCheck> out;
    auto add = [&](std::string id, long double bound, std::uint64_t actual, bool holds) {
        out.push_back({std::move(id), bound, actual, holds});
    };
    std::uint64_t u = even_fvs.vertices.size();
    std::uint64_t n = in.n();
    std::uint64_t p3u = pow_sat(3, u);
    std::uint64_t p2u = pow_sat(2, u);

    add("supported-partial<=3^|U|", static_cast<long double>(p3u), in.supported_partial.size(),
        in.supported_partial.size() <= p3u);
    add("stable-partial<=3^|U|", static_cast<long double>(p3u), in.stable_partial.size(),
        in.stable_partial.size() <= p3u);
    add("regular<=3^|U|", static_cast<long double>(p3u), in.regular.size(),
        in.regular.size() <= p3u);
    add("stable<=3^|U|", static_cast<long double>(p3u), in.stable.size(),
        in.stable.size() <= p3u);
    add("regular<=2^|HB|", std::pow(2.0L, static_cast<long double>(n)), in.regular.size(),
        in.regular.size() <= pow_sat(2, n));
    add("stable<=2^|U|", static_cast<long double>(p2u), in.stable.size(),
        in.stable.size() <= p2u);
    if (in.tight)
        add("regular<=2^|U| (tight)", static_cast<long double>(p2u), in.regular.size(),
            in.regular.size() <= p2u);
    if (dtf_fvs) {
        std::uint64_t p2u2 = pow_sat(2, dtf_fvs->size());
        add("stable<=2^|U'| (uni-rule)", static_cast<long double>(p2u2), in.stable.size(),
            in.stable.size() <= p2u2);
        if (in.tight)
            add("regular<=2^|U'| (uni-rule tight)", static_cast<long double>(p2u2),
                in.regular.size(), in.regular.size() <= p2u2);
    }
    std::uint64_t rules = in.g.rules().size();
    add("stable<=3^(rules/3)", std::pow(3.0L, static_cast<long double>(rules) / 3.0L),
        in.stable.size(), within_cube_root_bound(in.stable.size(), rules));
    std::uint64_t even_count =
        std::count_if(in.cycles.begin(), in.cycles.end(), [](const Cycle& c) { return c.is_even(); });
    std::uint64_t p2k = pow_sat(2, even_count);
    add("stable<=2^(even cycles)", static_cast<long double>(p2k), in.stable.size(),
        in.stable.size() <= p2k);
    return out;
}

}  // namespace

bool AnalysisReport::all_bounds_hold() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.holds; });
}

AnalysisReport analyze(const GroundProgram& g, const Caps& caps) {
    Instance in(g, caps);
    AnalysisReport rep;
    rep.tight = in.tight;
    rep.uni_rule = in.uni_rule;
    rep.negative = in.negative;
    rep.has_odd_cycle = in.odd_cycle;
    rep.has_even_cycle = in.even_cycle;
    rep.cycle_count = in.cycles.size();
    rep.even_cycle_count =
        std::count_if(in.cycles.begin(), in.cycles.end(), [](const Cycle& c) { return c.is_even(); });
    rep.odd_cycle_count = rep.cycle_count - rep.even_cycle_count;

    FvsResult even_fvs = even_feedback_vertex_set(in.adg, FvsMode::Exact, caps.max_cycles);
    rep.even_fvs = even_fvs.vertices;
    rep.even_fvs_exact = even_fvs.exact;

    std::optional<std::vector<std::uint32_t>> dtf;
    if (in.uni_rule) {
        FvsResult dtf_fvs =
            feedback_vertex_set_for(in.adg, in.triple_free_even_cycles(), FvsMode::Exact);
        dtf = dtf_fvs.vertices;
        rep.triple_free_even_fvs = dtf;
    }

    rep.counts.supported = in.supported.size();
    rep.counts.supported_partial = in.supported_partial.size();
    rep.counts.stable = in.stable.size();
    rep.counts.stable_partial = in.stable_partial.size();
    rep.counts.regular = in.regular.size();
    rep.bounds = compute_bounds(in, even_fvs, dtf);
    return rep;
}

std::vector<TheoremResult> verify_theorems(const GroundProgram& g, const Caps& caps) {
    Instance in(g, caps);
    std::vector<TheoremResult> out;
    for (const TheoremEntry& entry : theorem_registry()) {
        TheoremResult res;
        res.id = entry.id;
        res.applicable = entry.applies(in);
        if (res.applicable) {
            res.witness = entry.check(in);
            res.pass = res.witness.empty();
        }
        out.push_back(std::move(res));
    }
    // bound checks ride along as theorem-style verdicts
    FvsResult even_fvs = even_feedback_vertex_set(in.adg, FvsMode::Exact, caps.max_cycles);
    std::optional<std::vector<std::uint32_t>> dtf;
    if (in.uni_rule)
        dtf = feedback_vertex_set_for(in.adg, in.triple_free_even_cycles(), FvsMode::Exact).vertices;
    for (const BoundCheck& b : compute_bounds(in, even_fvs, dtf)) {
        TheoremResult res;
        res.id = "bound/" + b.id;
        res.applicable = true;
        res.pass = b.holds;
        if (!b.holds)
            res.witness = "actual " + std::to_string(b.actual) + " exceeds bound " +
                          std::to_string(static_cast<double>(b.bound));
        out.push_back(std::move(res));
    }
    return out;
}

namespace {

nlohmann::json counts_json(const ModelCounts& c) {
    return {{"supported", c.supported},
            {"supported_partial", c.supported_partial},
            {"stable", c.stable},
            {"stable_partial", c.stable_partial},
            {"regular", c.regular}};
}

nlohmann::json bounds_json(const GroundProgram& g, const std::vector<BoundCheck>& bounds) {
    (void)g;
    auto arr = nlohmann::json::array();
    for (const BoundCheck& b : bounds)
        arr.push_back({{"id", b.id},
                       {"bound", static_cast<double>(b.bound)},
                       {"actual", b.actual},
                       {"holds", b.holds}});
    return arr;
}

}  // namespace

std::string to_json(const GroundProgram& g, const AnalysisReport& r) {
    nlohmann::json j;
    j["program"] = pretty_print(g);
    j["graph"] = {{"tight", r.tight},
                  {"uni_rule", r.uni_rule},
                  {"negative", r.negative},
                  {"has_odd_cycle", r.has_odd_cycle},
                  {"has_even_cycle", r.has_even_cycle},
                  {"cycles", r.cycle_count},
                  {"even_cycles", r.even_cycle_count},
                  {"odd_cycles", r.odd_cycle_count}};
    auto fvs_names = nlohmann::json::array();
    for (std::uint32_t v : r.even_fvs) fvs_names.push_back(g.atom(v).text());
    j["even_fvs"] = {{"vertices", fvs_names}, {"exact", r.even_fvs_exact}};
    if (r.triple_free_even_fvs) {
        auto dtf = nlohmann::json::array();
        for (std::uint32_t v : *r.triple_free_even_fvs) dtf.push_back(g.atom(v).text());
        j["triple_free_even_fvs"] = dtf;
    }
    j["counts"] = counts_json(r.counts);
    j["bounds"] = bounds_json(g, r.bounds);
    j["all_bounds_hold"] = r.all_bounds_hold();
    return j.dump(2) + "\n";
}

std::string verification_to_json(const GroundProgram& g, const std::vector<TheoremResult>& results,
                                 const AnalysisReport& report) {
    nlohmann::json j;
    j["program"] = pretty_print(g);
    auto hyps = nlohmann::json::array();
    auto verdicts = nlohmann::json::array();
    for (const TheoremResult& r : results) {
        if (r.applicable) hyps.push_back(r.id);
        verdicts.push_back({{"id", r.id},
                            {"applicable", r.applicable},
                            {"pass", r.pass},
                            {"witness", r.witness}});
    }
    j["hypotheses"] = hyps;
    j["verdicts"] = verdicts;
    j["bounds"] = bounds_json(g, report.bounds);
    j["counts"] = counts_json(report.counts);
    return j.dump(2) + "\n";
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }
    double unit() { return (eng_() >> 11) * (1.0 / 9007199254740992.0); }

private:
    std::mt19937_64 eng_;
};

}  // namespace

GroundProgram generate_program(const GeneratorConfig& cfg, std::uint64_t seed) {
    if (cfg.atoms < 1 || cfg.atoms > 26) throw ConfigError("atom count must be in [1, 26]");
    if (cfg.min_rules < 0 || cfg.max_rules < cfg.min_rules)
        throw ConfigError("rule count range is empty");
    if (cfg.positive_literal_prob < 0 || cfg.negative_literal_prob < 0 ||
        cfg.positive_literal_prob + cfg.negative_literal_prob <= 0)
        throw ConfigError("literal probabilities must be non-negative and not both zero");

    Rng rng(seed);
    std::vector<std::string> names;
    for (int i = 0; i < cfg.atoms; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));

    int max_rules = cfg.max_rules;
    if (cfg.uni_rule) max_rules = std::min(max_rules, cfg.atoms);
    int min_rules = std::min(cfg.min_rules, max_rules);
    int rule_count = min_rules + static_cast<int>(rng.below(max_rules - min_rules + 1));

    std::vector<int> heads;
    if (cfg.uni_rule) {
        std::vector<int> pool(cfg.atoms);
        for (int i = 0; i < cfg.atoms; ++i) pool[i] = i;
        for (int i = cfg.atoms - 1; i > 0; --i)
            std::swap(pool[i], pool[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        heads.assign(pool.begin(), pool.begin() + rule_count);
    } else {
        for (int i = 0; i < rule_count; ++i) heads.push_back(static_cast<int>(rng.below(cfg.atoms)));
    }

    double p_pos = cfg.positive_literal_prob /
                   (cfg.positive_literal_prob + cfg.negative_literal_prob);

    struct RawRule {
        int head;
        std::set<int> pos, neg;
    };
    std::vector<RawRule> raw;
    for (int head : heads) {
        RawRule r{head, {}, {}};
        int body = 0;
        while (rng.unit() > 0.4 && body < cfg.atoms) ++body;  // geometric, mean 1.5
        for (int k = 0; k < body; ++k) {
            bool positive = rng.unit() < p_pos;
            if (positive && cfg.tight_only && head == 0) positive = false;  // no lower atom exists
            if (!positive && cfg.negative_literal_prob == 0) continue;
            int atom;
            if (positive && cfg.tight_only)
                atom = static_cast<int>(rng.below(head));  // below the head keeps positive arcs acyclic
            else
                atom = static_cast<int>(rng.below(cfg.atoms));
            if (r.pos.count(atom) || r.neg.count(atom)) continue;  // no duplicate or opposite literal
            (positive ? r.pos : r.neg).insert(atom);
        }
        raw.push_back(std::move(r));
    }

    // Herbrand base: atoms that occur somewhere.
    std::set<int> used;
    for (const RawRule& r : raw) {
        used.insert(r.head);
        used.insert(r.pos.begin(), r.pos.end());
        used.insert(r.neg.begin(), r.neg.end());
    }
    std::vector<GroundAtom> base;
    std::vector<int> remap(cfg.atoms, -1);
    for (int a : used) {
        remap[a] = static_cast<int>(base.size());
        base.push_back({names[a], {}});
    }
    std::vector<GroundRule> rules;
    for (const RawRule& r : raw) {
        GroundRule gr;
        gr.head = static_cast<AtomId>(remap[r.head]);
        for (int a : r.pos) gr.pos_body.push_back(static_cast<AtomId>(remap[a]));
        for (int a : r.neg) gr.neg_body.push_back(static_cast<AtomId>(remap[a]));
        rules.push_back(std::move(gr));
    }
    return GroundProgram(std::move(base), {}, std::move(rules));
}

ConjectureReport probe_conjectures(const GeneratorConfig& config, std::uint64_t trials,
                                   std::uint64_t seed) {
    ConjectureReport rep;
    rep.config = config;
    rep.trials = trials;
    rep.seed = seed;
    rep.conjectures = {
        {"uni-rule-odd-delocalized-stable-exists",
         "a uni-rule program whose odd cycles all have internal delocalizing triples has a stable model",
         0,
         {}},
        {"uni-rule-odd-delocalized-regular-are-stable",
         "under the same hypothesis every regular model is a stable model",
         0,
         {}},
        {"regular<=2^|U|",
         "the number of regular models is at most 2^|U| for an even feedback vertex set U",
         0,
         {}},
        {"uni-rule-regular<=2^|U'|",
         "for uni-rule programs, 2^|U'| bounds the regular models, U' hitting only even cycles "
         "without a delocalizing triple",
         0,
         {}},
    };
    Caps caps;

    GeneratorConfig uni_cfg = config;
    uni_cfg.uni_rule = true;
    GeneratorConfig gen_cfg = config;

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + t;

        // uni-rule conjectures
        {
            GroundProgram g = generate_program(uni_cfg, trial_seed);
            Instance in(g, caps);
            bool odd_hyp = in.uni_rule && in.no_dup_literals &&
                           in.every_odd_cycle_internally_delocalized();
            if (odd_hyp) {
                ++rep.conjectures[0].applicable;
                if (in.stable.empty())
                    rep.conjectures[0].counterexamples.push_back(pretty_print(g));
                ++rep.conjectures[1].applicable;
                bool all_two_valued = std::all_of(in.regular.begin(), in.regular.end(),
                                                  [](const Interp3& m) { return m.is_two_valued(); });
                if (!all_two_valued) rep.conjectures[1].counterexamples.push_back(pretty_print(g));
            }
            if (in.uni_rule && in.no_dup_literals) {
                ++rep.conjectures[3].applicable;
                FvsResult dtf =
                    feedback_vertex_set_for(in.adg, in.triple_free_even_cycles(), FvsMode::Exact);
                if (in.regular.size() > pow_sat(2, dtf.vertices.size()))
                    rep.conjectures[3].counterexamples.push_back(pretty_print(g));
            }
        }

        // general-program conjecture and the class-semantics side search
        {
            GroundProgram g = generate_program(gen_cfg, trial_seed);
            Instance in(g, caps);
            ++rep.conjectures[2].applicable;
            FvsResult u = even_feedback_vertex_set(in.adg, FvsMode::Exact, caps.max_cycles);
            if (in.regular.size() > pow_sat(2, u.vertices.size()))
                rep.conjectures[2].counterexamples.push_back(pretty_print(g));

            for (const auto& cls : in.stable_classes) {
                // a supported class maps onto itself under the one-step operator
                std::set<State> image;
                for (State s : cls) image.insert(in.tgsp.successor[s]);
                std::set<State> self(cls.begin(), cls.end());
                if (image != self) {
                    ++rep.stable_class_not_supported_class_hits;
                    if (rep.stable_class_not_supported_class_example.empty())
                        rep.stable_class_not_supported_class_example = pretty_print(g);
                    break;
                }
            }
        }
    }
    return rep;
}

std::string to_json(const ConjectureReport& r) {
    nlohmann::json j;
    j["config"] = {{"atoms", r.config.atoms},
                   {"min_rules", r.config.min_rules},
                   {"max_rules", r.config.max_rules},
                   {"positive_literal_prob", r.config.positive_literal_prob},
                   {"negative_literal_prob", r.config.negative_literal_prob},
                   {"uni_rule", r.config.uni_rule},
                   {"tight_only", r.config.tight_only}};
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    auto arr = nlohmann::json::array();
    for (const ConjectureOutcome& c : r.conjectures) {
        arr.push_back({{"id", c.id},
                       {"statement", c.statement},
                       {"applicable", c.applicable},
                       {"counterexample_count", c.counterexamples.size()},
                       {"counterexamples", c.counterexamples},
                       {"refuted", !c.counterexamples.empty()},
                       {"note", "absence of counterexamples does not establish the conjecture"}});
    }
    j["conjectures"] = arr;
    j["strict_stable_class_not_supported_class"] = {
        {"hits", r.stable_class_not_supported_class_hits},
        {"example", r.stable_class_not_supported_class_example}};
    return j.dump(2) + "\n";
}

}  // namespace dlgbn
