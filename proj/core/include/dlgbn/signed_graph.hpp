#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dlgbn/errors.hpp"

namespace dlgbn {

enum class Sign : std::uint8_t { Positive = 0, Negative = 1 };

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

struct SignedArc {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    Sign sign = Sign::Positive;
    auto operator<=>(const SignedArc&) const = default;
};

// Signed directed multigraph: parallel arcs only with distinct signs,
// self-arcs allowed. Vertex order is the canonical order of whatever the
// vertices stand for (atoms, variables).
class SignedDigraph {
public:
    SignedDigraph() = default;
    explicit SignedDigraph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::uint32_t v) const { return labels_[v]; }

    void add_arc(std::uint32_t u, std::uint32_t v, Sign s);
    bool has_arc(std::uint32_t u, std::uint32_t v, Sign s) const;
    const std::vector<SignedArc>& arcs() const { return arcs_; }  // sorted, unique

    friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
        return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
    }
    // true iff every arc of this graph is an arc of h over the same vertices
    bool subgraph_of(const SignedDigraph& h) const;

private:
    std::vector<std::string> labels_;
    std::vector<SignedArc> arcs_;
};

// Simple cycle as an arc sequence, rotated to start at its least vertex.
// Parallel arcs of different signs yield distinct cycles.
struct Cycle {
    std::vector<SignedArc> arcs;

    std::size_t negative_count() const;
    bool is_even() const { return negative_count() % 2 == 0; }
    std::vector<std::uint32_t> vertices() const;  // in cycle order
    bool contains_vertex(std::uint32_t v) const;
    bool contains_arc(const SignedArc& a) const;

    auto operator<=>(const Cycle&) const = default;
};

// Visits simple cycles in deterministic order; stops early when the visitor
// returns false. Throws CapExceeded past `cap` emitted cycles.
void for_each_simple_cycle(const SignedDigraph& g, std::uint64_t cap,
                           const std::function<bool(const Cycle&)>& visit);

std::vector<Cycle> enumerate_simple_cycles(const SignedDigraph& g, std::uint64_t cap = 1'000'000);

bool has_odd_cycle(const SignedDigraph& g, std::uint64_t cap = 1'000'000);
bool has_even_cycle(const SignedDigraph& g, std::uint64_t cap = 1'000'000);

enum class FvsMode { Exact, Greedy };

struct FvsResult {
    std::vector<std::uint32_t> vertices;  // ascending
    bool exact = false;                   // true when minimum cardinality is guaranteed
};

// Vertex set intersecting every even (resp. odd) simple cycle. Exact mode is
// honored only while the instance is small (cycle count <= 10^4, |V| <= 24);
// otherwise a verified greedy cover is returned.
FvsResult even_feedback_vertex_set(const SignedDigraph& g, FvsMode mode = FvsMode::Exact,
                                   std::uint64_t cap = 1'000'000);
FvsResult odd_feedback_vertex_set(const SignedDigraph& g, FvsMode mode = FvsMode::Exact,
                                  std::uint64_t cap = 1'000'000);

// Generic hitting-set entry point used by both parities and by the
// triple-free variant in the analysis layer.
FvsResult feedback_vertex_set_for(const SignedDigraph& g, const std::vector<Cycle>& targets,
                                  FvsMode mode);

struct DelocalizingTriple {
    std::uint32_t u = 0;
    std::uint32_t v1 = 0;
    std::uint32_t v2 = 0;
    bool internal = false;  // u lies on the cycle
    auto operator<=>(const DelocalizingTriple&) const = default;
};

// All (u, v1, v2) with v1 != v2 on c, arcs (u,v1,+) and (u,v2,-) in g but
// outside the cycle's arc set.
std::vector<DelocalizingTriple> delocalizing_triples(const SignedDigraph& g, const Cycle& c);

bool is_sign_definite(const SignedDigraph& g);
bool is_strongly_connected(const SignedDigraph& g);
std::size_t min_in_degree(const SignedDigraph& g);

struct Bipartition {
    std::vector<std::uint32_t> positive;  // S+
    std::vector<std::uint32_t> negative;  // S-, contains the least vertex
};

// Parity-propagating 2-coloring: positive arcs stay inside a class, negative
// arcs cross. Returns nullopt when propagation detects an odd cycle or the
// preconditions (strong connectivity, >= 1 arc) fail.
std::optional<Bipartition> positive_negative_bipartition(const SignedDigraph& g);

std::string to_dot(const SignedDigraph& g, const std::string& name = "g");
std::string cycles_to_json(const SignedDigraph& g, const std::vector<Cycle>& cycles);

}  // namespace dlgbn
