#include "dlgbn/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dlgbn {

State f_op(const GroundProgram& g, State i) {
    Interp3 two = Interp3::from_state(i, g.atom_count());
    Interp3 least = least_model3(reduct3(g, two));
    return least.to_state();
}

State t_op(const GroundProgram& g, const Completion& c, State i) {
    State out = 0;
    for (std::size_t v = 0; v < g.atom_count(); ++v)
        if (c.rhs[v].eval2(i)) out |= State{1} << v;
    return out;
}

State t_op(const GroundProgram& g, State i) { return t_op(g, completion(g), i); }

TransitionGraph stable_tg(const GroundProgram& g, const Caps& caps) {
    caps.require_2v(g.atom_count(), "stable transition graph");
    TransitionGraph tg;
    tg.variables = g.atom_names();
    tg.functional = true;
    std::size_t states = std::size_t{1} << g.atom_count();
    tg.successor.resize(states);
    for (State s = 0; s < states; ++s) tg.successor[s] = f_op(g, s);
    return tg;
}

TransitionGraph supported_tg(const GroundProgram& g, const Caps& caps) {
    caps.require_2v(g.atom_count(), "supported transition graph");
    Completion c = completion(g);
    TransitionGraph tg;
    tg.variables = g.atom_names();
    tg.functional = true;
    std::size_t states = std::size_t{1} << g.atom_count();
    tg.successor.resize(states);
    for (State s = 0; s < states; ++s) tg.successor[s] = t_op(g, c, s);
    return tg;
}

std::vector<std::vector<State>> strict_classes(const TransitionGraph& tg) {
    return functional_cycles(tg);
}

bool is_supported_trap_space(const Completion& c, const Interp3& i) {
    // pointwise right-hand-side test under restriction evaluation
    for (std::size_t v = 0; v < c.rhs.size(); ++v)
        if (!leq_s(c.rhs[v].eval_restricted(i), i[v])) return false;
    return true;
}

namespace {

// Closure of the cell under a functional successor map.
bool cell_closed(const TransitionGraph& tg, const Interp3& i) {
    State known = 0, tvals = 0;
    for (std::size_t v = 0; v < i.size(); ++v) {
        if (i[v] != Tri::Unknown) known |= State{1} << v;
        if (i[v] == Tri::True) tvals |= State{1} << v;
    }
    for (State s : i.cell_states())
        if ((tg.successor[s] & known) != tvals) return false;
    return true;
}

template <typename Pred>
std::vector<Interp3> scan3(std::size_t n, Pred&& keep) {
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

std::vector<Interp3> stable_trap_spaces(const GroundProgram& g, const Caps& caps) {
    caps.require_3v(g.atom_count(), "stable trap space scan");
    TransitionGraph tg = stable_tg(g, caps);
    return scan3(g.atom_count(), [&](const Interp3& i) { return cell_closed(tg, i); });
}

std::vector<Interp3> supported_trap_spaces(const GroundProgram& g, const Caps& caps) {
    caps.require_3v(g.atom_count(), "supported trap space scan");
    Completion c = completion(g);
    return scan3(g.atom_count(), [&](const Interp3& i) { return is_supported_trap_space(c, i); });
}

std::vector<Interp3> trap_spaces_of_kind(const GroundProgram& g, TrapKind kind, const Caps& caps) {
    return kind == TrapKind::Stable ? stable_trap_spaces(g, caps) : supported_trap_spaces(g, caps);
}

Interp3 minimal_cover(const GroundProgram& g, const std::vector<State>& s, TrapKind kind,
                      const Caps& caps) {
    if (s.empty()) throw std::logic_error("minimal cover of an empty state set");
    Interp3 cover(g.atom_count(), Tri::Unknown);
    for (const Interp3& i : trap_spaces_of_kind(g, kind, caps)) {
        bool contains_all = std::all_of(s.begin(), s.end(),
                                        [&](State st) { return i.cell_contains(st); });
        if (!contains_all) continue;
        auto merged = cover.overlap(i);
        if (!merged) throw std::logic_error("covering trap spaces must be mutually consistent");
        cover = std::move(*merged);
    }
    return cover;
}

std::string tg_to_dot(const GroundProgram& g, const TransitionGraph& tg, const std::string& name) {
    std::vector<bool> boxed(tg.num_states(), false);
    for (const auto& cls : strict_classes(tg))
        for (State s : cls) boxed[s] = true;
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (State s = 0; s < tg.num_states(); ++s) {
        os << "  \"" << atom_names_of(g, s) << "\"";
        if (boxed[s]) os << " [shape=box]";
        os << ";\n";
    }
    for (State s = 0; s < tg.num_states(); ++s)
        os << "  \"" << atom_names_of(g, s) << "\" -> \"" << atom_names_of(g, tg.successor[s])
           << "\";\n";
    os << "}\n";
    return os.str();
}

std::string classes_to_json(const GroundProgram& g,
                            const std::vector<std::vector<State>>& classes) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& cls : classes) {
        nlohmann::json jc;
        jc["period"] = cls.size();
        auto states = nlohmann::json::array();
        for (State s : cls) {
            auto atoms = nlohmann::json::array();
            for (std::size_t v = 0; v < g.atom_count(); ++v)
                if (s >> v & 1u) atoms.push_back(g.atom(static_cast<AtomId>(v)).text());
            states.push_back(atoms);
        }
        jc["states"] = states;
        j.push_back(jc);
    }
    nlohmann::json root;
    root["classes"] = j;
    return root.dump(2) + "\n";
}

}  // namespace dlgbn
