#include "dlgbn/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dlgbn {

void Caps::require_2v(std::size_t atoms, const char* what) const {
    // 30 is the absolute ceiling of the 32-bit state representation
    std::size_t limit = std::min<std::size_t>(max_atoms_2v, 30);
    if (atoms > limit)
        throw CapExceeded(std::string(what) + " needs a 2^" + std::to_string(atoms) +
                          " scan, limit is 2^" + std::to_string(limit));
}

void Caps::require_3v(std::size_t atoms, const char* what) const {
    std::size_t limit = std::min<std::size_t>(max_atoms_3v, 19);
    if (atoms > limit)
        throw CapExceeded(std::string(what) + " needs a 3^" + std::to_string(atoms) +
                          " scan, limit is 3^" + std::to_string(limit));
}

void SignedDigraph::add_arc(std::uint32_t u, std::uint32_t v, Sign s) {
    if (u >= labels_.size() || v >= labels_.size())
        throw std::logic_error("arc endpoint outside the vertex set");
    SignedArc arc{u, v, s};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc);
    if (it == arcs_.end() || *it != arc) arcs_.insert(it, arc);
}

bool SignedDigraph::has_arc(std::uint32_t u, std::uint32_t v, Sign s) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), SignedArc{u, v, s});
}

bool SignedDigraph::subgraph_of(const SignedDigraph& h) const {
    if (labels_ != h.labels_) return false;
    return std::includes(h.arcs_.begin(), h.arcs_.end(), arcs_.begin(), arcs_.end());
}

std::size_t Cycle::negative_count() const {
    return std::count_if(arcs.begin(), arcs.end(),
                         [](const SignedArc& a) { return a.sign == Sign::Negative; });
}

std::vector<std::uint32_t> Cycle::vertices() const {
    std::vector<std::uint32_t> vs;
    vs.reserve(arcs.size());
    for (const SignedArc& a : arcs) vs.push_back(a.source);
    return vs;
}

bool Cycle::contains_vertex(std::uint32_t v) const {
    return std::any_of(arcs.begin(), arcs.end(),
                       [v](const SignedArc& a) { return a.source == v; });
}

bool Cycle::contains_arc(const SignedArc& a) const {
    return std::find(arcs.begin(), arcs.end(), a) != arcs.end();
}

namespace {

// Elementary-circuit search with blocked sets on the vertex graph; each
// vertex circuit is expanded over the sign choices of steps that carry
// parallel arcs.
class CycleSearch {
public:
    CycleSearch(const SignedDigraph& g, std::uint64_t cap,
                const std::function<bool(const Cycle&)>& visit)
        : g_(g), cap_(cap), visit_(visit), n_(g.vertex_count()) {
        adj_.assign(n_, {});
        for (const SignedArc& a : g.arcs()) {
            if (a.source == a.target) continue;  // handled separately
            if (adj_[a.source].empty() || adj_[a.source].back() != a.target)
                adj_[a.source].push_back(a.target);
        }
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }

    bool run() {
        // self-loops first, in vertex order, one visit per vertex
        std::uint32_t last_self = UINT32_MAX;
        for (const SignedArc& a : g_.arcs()) {
            if (a.source != a.target || a.source == last_self) continue;
            last_self = a.source;
            if (!emit_vertex_path({a.source}, true)) return false;
        }
        blocked_.assign(n_, false);
        block_map_.assign(n_, {});
        for (std::uint32_t s = 0; s < n_; ++s) {
            root_ = s;
            std::fill(blocked_.begin(), blocked_.end(), false);
            for (auto& b : block_map_) b.clear();
            path_.clear();
            circuit(s);
            if (!go_on_) return false;
        }
        return true;
    }

private:
    bool circuit(std::uint32_t v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (std::uint32_t w : adj_[v]) {
            if (w < root_) continue;  // only the subgraph on vertices >= root
            if (w == root_) {
                if (!emit_vertex_path(path_, false)) {
                    go_on_ = false;
                    break;
                }
                found = true;
            } else if (!blocked_[w]) {
                bool sub = circuit(w);
                if (!go_on_) break;
                found = found || sub;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (std::uint32_t w : adj_[v]) {
                if (w < root_) continue;
                auto& lst = block_map_[w];
                if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
            }
        }
        path_.pop_back();
        return go_on_ ? found : false;
    }

    void unblock(std::uint32_t v) {
        blocked_[v] = false;
        auto lst = std::move(block_map_[v]);
        block_map_[v].clear();
        for (std::uint32_t w : lst)
            if (blocked_[w]) unblock(w);
    }

    // Expands the vertex circuit over all sign choices; returns false to stop.
    bool emit_vertex_path(const std::vector<std::uint32_t>& vs, bool self_loop) {
        std::size_t k = vs.size();
        std::vector<std::vector<Sign>> options(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t u = vs[i], v = self_loop ? vs[i] : vs[(i + 1) % k];
            if (g_.has_arc(u, v, Sign::Positive)) options[i].push_back(Sign::Positive);
            if (g_.has_arc(u, v, Sign::Negative)) options[i].push_back(Sign::Negative);
        }
        if (self_loop) {
            // one cycle per sign of the self-arc
            for (Sign s : options[0]) {
                Cycle c;
                c.arcs.push_back({vs[0], vs[0], s});
                if (!deliver(c)) return false;
            }
            return true;
        }
        std::vector<std::size_t> pick(k, 0);
        while (true) {
            Cycle c;
            c.arcs.reserve(k);
            for (std::size_t i = 0; i < k; ++i)
                c.arcs.push_back({vs[i], vs[(i + 1) % k], options[i][pick[i]]});
            if (!deliver(c)) return false;
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (++pick[i] < options[i].size()) break;
                pick[i] = 0;
            }
            if (i == k) break;
        }
        return true;
    }

    bool deliver(const Cycle& c) {
        if (++emitted_ > cap_)
            throw CapExceeded("more than " + std::to_string(cap_) + " simple cycles");
        return visit_(c);
    }

    const SignedDigraph& g_;
    std::uint64_t cap_;
    const std::function<bool(const Cycle&)>& visit_;
    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<bool> blocked_;
    std::vector<std::vector<std::uint32_t>> block_map_;
    std::vector<std::uint32_t> path_;
    std::uint32_t root_ = 0;
    std::uint64_t emitted_ = 0;
    bool go_on_ = true;
};

}  // namespace

void for_each_simple_cycle(const SignedDigraph& g, std::uint64_t cap,
                           const std::function<bool(const Cycle&)>& visit) {
    CycleSearch search(g, cap, visit);
    search.run();
}

std::vector<Cycle> enumerate_simple_cycles(const SignedDigraph& g, std::uint64_t cap) {
    std::vector<Cycle> out;
    for_each_simple_cycle(g, cap, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool has_cycle_of_parity(const SignedDigraph& g, bool even, std::uint64_t cap) {
    bool found = false;
    for_each_simple_cycle(g, cap, [&](const Cycle& c) {
        if (c.is_even() == even) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace

bool has_odd_cycle(const SignedDigraph& g, std::uint64_t cap) {
    return has_cycle_of_parity(g, false, cap);
}

bool has_even_cycle(const SignedDigraph& g, std::uint64_t cap) {
    return has_cycle_of_parity(g, true, cap);
}

namespace {

constexpr std::size_t kExactFvsMaxCycles = 10'000;
constexpr std::size_t kExactFvsMaxVertices = 24;

bool covers(const std::vector<std::uint32_t>& chosen,
            const std::vector<std::uint32_t>& cycle_vertices) {
    for (std::uint32_t v : cycle_vertices)
        if (std::binary_search(chosen.begin(), chosen.end(), v)) return true;
    return false;
}

bool hitting_set_search(const std::vector<std::vector<std::uint32_t>>& constraints,
                        std::size_t budget, std::vector<std::uint32_t>& chosen) {
    const std::vector<std::uint32_t>* open = nullptr;
    for (const auto& c : constraints) {
        if (!covers(chosen, c)) {
            open = &c;
            break;
        }
    }
    if (!open) return true;
    if (budget == 0) return false;
    for (std::uint32_t v : *open) {
        auto it = std::lower_bound(chosen.begin(), chosen.end(), v);
        chosen.insert(it, v);
        if (hitting_set_search(constraints, budget - 1, chosen)) return true;
        chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), v));
    }
    return false;
}

FvsResult greedy_hitting_set(std::size_t vertex_count,
                             std::vector<std::vector<std::uint32_t>> constraints) {
    FvsResult out;
    while (true) {
        constraints.erase(std::remove_if(constraints.begin(), constraints.end(),
                                         [&](const auto& c) { return covers(out.vertices, c); }),
                          constraints.end());
        if (constraints.empty()) break;
        std::vector<std::size_t> hits(vertex_count, 0);
        for (const auto& c : constraints)
            for (std::uint32_t v : c) ++hits[v];
        std::uint32_t best = 0;
        for (std::uint32_t v = 1; v < vertex_count; ++v)
            if (hits[v] > hits[best]) best = v;
        auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), best);
        out.vertices.insert(it, best);
    }
    out.exact = false;
    return out;
}

FvsResult parity_fvs(const SignedDigraph& g, bool even, FvsMode mode, std::uint64_t cap) {
    std::vector<std::vector<std::uint32_t>> constraints;
    std::uint64_t parity_cycles = 0;
    for_each_simple_cycle(g, cap, [&](const Cycle& c) {
        if (c.is_even() == even) {
            ++parity_cycles;
            std::vector<std::uint32_t> vs = c.vertices();
            std::sort(vs.begin(), vs.end());
            constraints.push_back(std::move(vs));
        }
        return true;
    });
    std::sort(constraints.begin(), constraints.end());
    constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
    // subsumed constraints never change the optimum
    std::vector<std::vector<std::uint32_t>> kept;
    for (const auto& c : constraints) {
        bool subsumed = false;
        for (const auto& d : constraints) {
            if (&c != &d && d.size() <= c.size() && d != c &&
                std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                subsumed = true;
                break;
            }
        }
        if (!subsumed) kept.push_back(c);
    }

    if (mode == FvsMode::Exact && parity_cycles <= kExactFvsMaxCycles &&
        g.vertex_count() <= kExactFvsMaxVertices) {
        for (std::size_t budget = 0; budget <= g.vertex_count(); ++budget) {
            std::vector<std::uint32_t> chosen;
            if (hitting_set_search(kept, budget, chosen)) return {std::move(chosen), true};
        }
    }
    return greedy_hitting_set(g.vertex_count(), std::move(kept));
}

}  // namespace

FvsResult feedback_vertex_set_for(const SignedDigraph& g, const std::vector<Cycle>& targets,
                                  FvsMode mode) {
    std::vector<std::vector<std::uint32_t>> constraints;
    for (const Cycle& c : targets) {
        std::vector<std::uint32_t> vs = c.vertices();
        std::sort(vs.begin(), vs.end());
        constraints.push_back(std::move(vs));
    }
    std::sort(constraints.begin(), constraints.end());
    constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
    if (mode == FvsMode::Exact && constraints.size() <= kExactFvsMaxCycles &&
        g.vertex_count() <= kExactFvsMaxVertices) {
        for (std::size_t budget = 0; budget <= g.vertex_count(); ++budget) {
            std::vector<std::uint32_t> chosen;
            if (hitting_set_search(constraints, budget, chosen)) return {std::move(chosen), true};
        }
    }
    return greedy_hitting_set(g.vertex_count(), std::move(constraints));
}

FvsResult even_feedback_vertex_set(const SignedDigraph& g, FvsMode mode, std::uint64_t cap) {
    return parity_fvs(g, true, mode, cap);
}

FvsResult odd_feedback_vertex_set(const SignedDigraph& g, FvsMode mode, std::uint64_t cap) {
    return parity_fvs(g, false, mode, cap);
}

std::vector<DelocalizingTriple> delocalizing_triples(const SignedDigraph& g, const Cycle& c) {
    std::vector<std::uint32_t> on_cycle = c.vertices();
    std::sort(on_cycle.begin(), on_cycle.end());
    std::vector<DelocalizingTriple> out;
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        for (std::uint32_t v1 : on_cycle) {
            SignedArc pos{u, v1, Sign::Positive};
            if (!g.has_arc(u, v1, Sign::Positive) || c.contains_arc(pos)) continue;
            for (std::uint32_t v2 : on_cycle) {
                if (v1 == v2) continue;
                SignedArc neg{u, v2, Sign::Negative};
                if (!g.has_arc(u, v2, Sign::Negative) || c.contains_arc(neg)) continue;
                out.push_back({u, v1, v2, std::binary_search(on_cycle.begin(), on_cycle.end(), u)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_sign_definite(const SignedDigraph& g) {
    for (const SignedArc& a : g.arcs()) {
        if (a.sign != Sign::Positive || a.source == a.target) continue;
        if (g.has_arc(a.source, a.target, Sign::Negative)) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<std::uint32_t>> unsigned_adjacency(const SignedDigraph& g, bool reversed) {
    std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
    for (const SignedArc& a : g.arcs())
        (reversed ? adj[a.target] : adj[a.source]).push_back(reversed ? a.source : a.target);
    return adj;
}

void reach(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t s,
           std::vector<bool>& seen) {
    std::vector<std::uint32_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
}

}  // namespace

bool is_strongly_connected(const SignedDigraph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<bool> fwd(g.vertex_count(), false), bwd(g.vertex_count(), false);
    reach(unsigned_adjacency(g, false), 0, fwd);
    reach(unsigned_adjacency(g, true), 0, bwd);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

std::size_t min_in_degree(const SignedDigraph& g) {
    if (g.vertex_count() == 0) return 0;
    std::vector<std::size_t> in(g.vertex_count(), 0);
    for (const SignedArc& a : g.arcs()) ++in[a.target];
    return *std::min_element(in.begin(), in.end());
}

std::optional<Bipartition> positive_negative_bipartition(const SignedDigraph& g) {
    if (g.vertex_count() == 0 || g.arcs().empty()) return std::nullopt;
    // undirected parity constraints; conflicts signal an odd cycle
    std::vector<int> side(g.vertex_count(), -1);
    side[0] = 0;
    std::vector<std::uint32_t> queue{0};
    std::vector<std::vector<std::pair<std::uint32_t, Sign>>> nbr(g.vertex_count());
    for (const SignedArc& a : g.arcs()) {
        nbr[a.source].push_back({a.target, a.sign});
        nbr[a.target].push_back({a.source, a.sign});
    }
    while (!queue.empty()) {
        std::uint32_t v = queue.back();
        queue.pop_back();
        for (auto [w, s] : nbr[v]) {
            int want = s == Sign::Positive ? side[v] : 1 - side[v];
            if (side[w] == -1) {
                side[w] = want;
                queue.push_back(w);
            } else if (side[w] != want) {
                return std::nullopt;
            }
        }
    }
    for (int s : side)
        if (s == -1) return std::nullopt;  // not connected: precondition violated
    Bipartition b;
    // the canonically least vertex (index 0) belongs to S-
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        (side[v] == side[0] ? b.negative : b.positive).push_back(v);
    return b;
}

std::string to_dot(const SignedDigraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.label(v) << "\";\n";
    for (const SignedArc& a : g.arcs())
        os << "  \"" << g.label(a.source) << "\" -> \"" << g.label(a.target) << "\" [label=\""
           << sign_char(a.sign) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string cycles_to_json(const SignedDigraph& g, const std::vector<Cycle>& cycles) {
    nlohmann::json j;
    j["vertices"] = g.labels();
    auto arcs = nlohmann::json::array();
    for (const SignedArc& a : g.arcs())
        arcs.push_back({{"source", g.label(a.source)},
                        {"target", g.label(a.target)},
                        {"sign", std::string(1, sign_char(a.sign))}});
    j["arcs"] = arcs;
    auto cyc = nlohmann::json::array();
    for (const Cycle& c : cycles) {
        nlohmann::json jc;
        auto vs = nlohmann::json::array();
        auto signs = nlohmann::json::array();
        for (const SignedArc& a : c.arcs) {
            vs.push_back(g.label(a.source));
            signs.push_back(std::string(1, sign_char(a.sign)));
        }
        jc["vertices"] = vs;
        jc["signs"] = signs;
        jc["parity"] = c.is_even() ? "even" : "odd";
        cyc.push_back(jc);
    }
    j["cycles"] = cyc;
    return j.dump(2) + "\n";
}

}  // namespace dlgbn
