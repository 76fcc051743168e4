#include "dlgbn/transition_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dlgbn {

std::vector<State> TransitionGraph::successors(State s) const {
    if (functional) return {successor[s]};
    return out_arcs[s];
}

namespace {

// Iterative Tarjan; components are emitted in reverse topological order.
std::vector<std::vector<State>> strongly_connected_components(const TransitionGraph& tg) {
    std::size_t n = tg.num_states();
    std::vector<std::int32_t> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::vector<State>> sccs;
    std::int32_t next_index = 0;

    struct Frame {
        State v;
        std::size_t child = 0;
    };
    std::vector<Frame> call;
    for (State s0 = 0; s0 < n; ++s0) {
        if (index[s0] != -1) continue;
        call.push_back({s0, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            State v = f.v;
            if (f.child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            std::vector<State> succ = tg.successors(v);
            if (f.child < succ.size()) {
                State w = succ[f.child++];
                if (index[w] == -1) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<State> comp;
                    while (true) {
                        State w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    sccs.push_back(std::move(comp));
                }
                call.pop_back();
                if (!call.empty()) {
                    State parent = call.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    return sccs;
}

}  // namespace

std::vector<std::vector<State>> attractors(const TransitionGraph& tg) {
    std::vector<std::vector<State>> sccs = strongly_connected_components(tg);
    std::vector<std::vector<State>> terminal;
    for (auto& comp : sccs) {
        bool leaves = false;
        for (State s : comp) {
            for (State t : tg.successors(s)) {
                if (!std::binary_search(comp.begin(), comp.end(), t)) {
                    leaves = true;
                    break;
                }
            }
            if (leaves) break;
        }
        if (!leaves) terminal.push_back(std::move(comp));
    }
    std::sort(terminal.begin(), terminal.end());
    return terminal;
}

bool is_fixed_point(const TransitionGraph& tg, const std::vector<State>& attractor) {
    if (attractor.size() != 1) return false;
    State s = attractor[0];
    if (tg.functional) return tg.successor[s] == s;
    return tg.out_arcs[s].empty();
}

bool is_trap_set(const TransitionGraph& tg, const std::vector<State>& states) {
    if (states.empty()) return false;
    std::vector<State> sorted(states);
    std::sort(sorted.begin(), sorted.end());
    for (State s : sorted)
        for (State t : tg.successors(s))
            if (!std::binary_search(sorted.begin(), sorted.end(), t)) return false;
    return true;
}

std::vector<std::vector<State>> functional_cycles(const TransitionGraph& tg) {
    if (!tg.functional) throw std::logic_error("cycles of a non-functional transition graph");
    std::size_t n = tg.num_states();
    // 0 unvisited, 1 in current walk, 2 settled
    std::vector<std::uint8_t> color(n, 0);
    std::vector<std::vector<State>> cycles;
    std::vector<State> walk;
    for (State s0 = 0; s0 < n; ++s0) {
        if (color[s0]) continue;
        walk.clear();
        State v = s0;
        while (color[v] == 0) {
            color[v] = 1;
            walk.push_back(v);
            v = tg.successor[v];
        }
        if (color[v] == 1) {
            auto it = std::find(walk.begin(), walk.end(), v);
            std::vector<State> cyc(it, walk.end());
            auto min_it = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), min_it, cyc.end());
            cycles.push_back(std::move(cyc));
        }
        for (State w : walk) color[w] = 2;
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::string state_bits(State s, std::size_t n) {
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) out[i] = '1';
    return out;
}

std::string to_dot(const TransitionGraph& tg, StgNodeStyle style, const std::string& name) {
    std::size_t n = tg.variables.size();
    std::vector<bool> in_attractor(tg.num_states(), false);
    for (const auto& att : attractors(tg))
        for (State s : att) in_attractor[s] = true;

    auto label = [&](State s) {
        if (style == StgNodeStyle::Bits) return state_bits(s, n);
        std::string out;
        for (std::size_t i = 0; i < n; ++i) {
            if (s >> i & 1u) {
                if (!out.empty()) out += ", ";
                out += tg.variables[i];
            }
        }
        return out.empty() ? std::string("∅") : "{" + out + "}";
    };

    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (State s = 0; s < tg.num_states(); ++s) {
        os << "  \"" << label(s) << "\"";
        if (in_attractor[s]) os << " [shape=box]";
        os << ";\n";
    }
    for (State s = 0; s < tg.num_states(); ++s)
        for (State t : tg.successors(s))
            os << "  \"" << label(s) << "\" -> \"" << label(t) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dlgbn
