#include "dlgbn/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dlgbn {

Completion completion(const GroundProgram& g) {
    std::size_t n = g.atom_count();
    std::vector<std::vector<DnfClause>> clauses(n);
    for (const GroundRule& r : g.rules()) {
        DnfClause c;
        for (AtomId a : r.pos_body) c.literals.push_back({a, true});
        for (AtomId a : r.neg_body) c.literals.push_back({a, false});
        clauses[r.head].push_back(std::move(c));
    }
    Completion comp;
    comp.rhs.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (clauses[v].empty())
            comp.rhs.push_back(DnfFormula::constant(false));
        else
            comp.rhs.push_back(DnfFormula::from_clauses(std::move(clauses[v])));
    }
    return comp;
}

Tri eval_body3(const GroundProgram&, const GroundRule& r, const Interp3& i) {
    Tri acc = Tri::True;
    for (AtomId a : r.pos_body) acc = tri_and(acc, i[a]);
    for (AtomId a : r.neg_body) acc = tri_and(acc, tri_not(i[a]));
    return acc;
}

Reduct reduct3(const GroundProgram& g, const Interp3& i) {
    Reduct out;
    out.atom_count = g.atom_count();
    for (const GroundRule& r : g.rules()) {
        bool removed = false;
        ReductRule rr;
        rr.head = r.head;
        rr.pos_body = r.pos_body;
        for (AtomId b : r.neg_body) {
            if (i[b] == Tri::True) {
                removed = true;  // rule deleted
                break;
            }
            if (i[b] == Tri::Unknown) rr.sentinel = true;
            // False negative literals are erased
        }
        if (!removed) out.rules.push_back(std::move(rr));
    }
    return out;
}

std::string pretty_print(const GroundProgram& g, const Reduct& r) {
    std::ostringstream os;
    for (const ReductRule& rr : r.rules) {
        os << g.atom(rr.head).text();
        if (!rr.pos_body.empty() || rr.sentinel) {
            os << " :- ";
            bool first = true;
            for (AtomId a : rr.pos_body) {
                if (!first) os << ", ";
                os << g.atom(a).text();
                first = false;
            }
            if (rr.sentinel) {
                if (!first) os << ", ";
                os << "u";
            }
        }
        os << ".\n";
    }
    return os.str();
}

Interp3 least_model3(const Reduct& r) {
    Interp3 i(r.atom_count, Tri::False);
    bool changed = true;
    std::size_t rounds = 0;
    while (changed) {
        changed = false;
        if (++rounds > 2 * r.atom_count + 2)
            throw std::logic_error("least model iteration failed to settle");
        for (const ReductRule& rr : r.rules) {
            Tri body = rr.sentinel ? Tri::Unknown : Tri::True;
            for (AtomId a : rr.pos_body) body = tri_and(body, i[a]);
            if (truth_rank(body) > truth_rank(i[rr.head])) {
                i[rr.head] = body;
                changed = true;
            }
        }
    }
    return i;
}

bool is_supported_partial_model(const GroundProgram& g, const Completion& c, const Interp3& i) {
    for (std::size_t v = 0; v < g.atom_count(); ++v)
        if (c.rhs[v].eval3(i) != i[v]) return false;
    return true;
}

bool is_stable_partial_model(const GroundProgram& g, const Interp3& i) {
    return least_model3(reduct3(g, i)) == i;
}

namespace {

template <typename Pred>
std::vector<Interp3> scan_interpretations(const GroundProgram& g, const Caps& caps,
                                          const char* what, Pred&& keep) {
    caps.require_3v(g.atom_count(), what);
    std::size_t n = g.atom_count();
    std::vector<Interp3> out;
    Interp3 m(n, Tri::False);
    while (true) {
        if (keep(m)) out.push_back(m);
        std::size_t i = n;
        bool done = n == 0;
        while (i > 0) {
            --i;
            if (m[i] != Tri::Unknown) {
                m[i] = static_cast<Tri>(static_cast<int>(m[i]) + 1);
                break;
            }
            m[i] = Tri::False;
            if (i == 0) done = true;
        }
        if (done) return out;
    }
}

}  // namespace

std::vector<Interp3> supported_partial_models(const GroundProgram& g, const Caps& caps) {
    Completion c = completion(g);
    return scan_interpretations(g, caps, "supported partial model scan", [&](const Interp3& i) {
        return is_supported_partial_model(g, c, i);
    });
}

std::vector<State> supported_models(const GroundProgram& g, const Caps& caps) {
    caps.require_2v(g.atom_count(), "supported model scan");
    Completion c = completion(g);
    std::vector<State> out;
    std::size_t states = std::size_t{1} << g.atom_count();
    for (State s = 0; s < states; ++s) {
        bool ok = true;
        for (std::size_t v = 0; v < g.atom_count() && ok; ++v)
            ok = c.rhs[v].eval2(s) == bool(s >> v & 1u);
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<Interp3> stable_partial_models(const GroundProgram& g, const Caps& caps) {
    return scan_interpretations(g, caps, "stable partial model scan",
                                [&](const Interp3& i) { return is_stable_partial_model(g, i); });
}

std::vector<State> stable_models(const GroundProgram& g, const Caps& caps) {
    caps.require_2v(g.atom_count(), "stable model scan");
    std::vector<State> out;
    std::size_t states = std::size_t{1} << g.atom_count();
    for (State s = 0; s < states; ++s) {
        Interp3 i = Interp3::from_state(s, g.atom_count());
        Interp3 least = least_model3(reduct3(g, i));
        if (least == i) out.push_back(s);
    }
    return out;
}

std::vector<Interp3> regular_models(const GroundProgram& g, const Caps& caps) {
    return keep_s_minimal(stable_partial_models(g, caps));
}

Interp3 well_founded_model(const GroundProgram& g, const Caps& caps) {
    // the knowledge-least stable partial model: every other one refines it
    std::vector<Interp3> spm = stable_partial_models(g, caps);
    for (const Interp3& i : spm) {
        bool greatest = true;
        for (const Interp3& j : spm)
            if (!j.leq_s(i)) {
                greatest = false;
                break;
            }
        if (greatest) return i;
    }
    throw std::logic_error("no knowledge-least stable partial model found");
}

GroundProgram lfp_transform(const GroundProgram& g) {
    std::size_t n = g.atom_count();
    if (n > 64) throw CapExceeded("least fixpoint transformation limited to 64 atoms");
    using Mask = std::uint64_t;

    // negative rules as (head, negative-body mask)
    std::vector<std::set<Mask>> stage(n);
    auto grow = [&](std::vector<std::set<Mask>>& next) {
        bool changed = false;
        for (const GroundRule& r : g.rules()) {
            // fold positive body atoms through their currently derived bodies
            std::set<Mask> partial;
            Mask base = 0;
            for (AtomId b : r.neg_body) base |= Mask{1} << b;
            partial.insert(base);
            bool dead = false;
            for (AtomId q : r.pos_body) {
                std::set<Mask> expanded;
                for (Mask body : partial)
                    for (Mask sub : stage[q]) expanded.insert(body | sub);
                partial = std::move(expanded);
                if (partial.empty()) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            for (Mask body : partial) changed |= next[r.head].insert(body).second;
        }
        return changed;
    };

    while (true) {
        std::vector<std::set<Mask>> next = stage;
        if (!grow(next)) break;
        stage = std::move(next);
    }

    std::vector<GroundRule> rules;
    for (AtomId h = 0; h < n; ++h) {
        for (Mask body : stage[h]) {
            GroundRule r;
            r.head = h;
            for (std::size_t b = 0; b < n; ++b)
                if (body >> b & 1u) r.neg_body.push_back(static_cast<AtomId>(b));
            rules.push_back(std::move(r));
        }
    }
    return GroundProgram(g.herbrand_base(), g.herbrand_universe(), std::move(rules));
}

std::string model_table_line(const GroundProgram& g, const Interp3& i) {
    std::string out = "{";
    for (std::size_t v = 0; v < g.atom_count(); ++v) {
        if (v) out += ", ";
        out += g.atom(static_cast<AtomId>(v)).text();
        out += " = ";
        switch (i[v]) {
            case Tri::False: out += "F"; break;
            case Tri::True: out += "T"; break;
            case Tri::Unknown: out += "U"; break;
        }
    }
    return out + "}";
}

std::string models_to_json(const GroundProgram& g, const std::string& semantics,
                           const std::vector<Interp3>& models, bool derived) {
    nlohmann::json j;
    j["semantics"] = semantics;
    if (derived) j["flag"] = "derived";
    j["count"] = models.size();
    auto arr = nlohmann::json::array();
    for (const Interp3& i : models) {
        nlohmann::json m;
        for (std::size_t v = 0; v < g.atom_count(); ++v) {
            const char* s = i[v] == Tri::True ? "true" : i[v] == Tri::False ? "false" : "undefined";
            m[g.atom(static_cast<AtomId>(v)).text()] = s;
        }
        arr.push_back(m);
    }
    j["models"] = arr;
    return j.dump(2) + "\n";
}

Interp3 state_to_interp(State s, std::size_t n) { return Interp3::from_state(s, n); }

std::vector<Interp3> states_to_interps(const std::vector<State>& states, std::size_t n) {
    std::vector<Interp3> out;
    out.reserve(states.size());
    for (State s : states) out.push_back(Interp3::from_state(s, n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dlgbn
