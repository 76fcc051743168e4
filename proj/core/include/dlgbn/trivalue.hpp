#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dlgbn {

// Three-valued domain. The numeric values double as the digit encoding used
// for canonical ordering of interpretations (0 < 1 < 2).
enum class Tri : std::uint8_t { False = 0, True = 1, Unknown = 2 };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

// Truth order: False < Unknown < True.
inline int truth_rank(Tri v) {
    switch (v) {
        case Tri::False: return 0;
        case Tri::Unknown: return 1;
        case Tri::True: return 2;
    }
    return 0;
}

inline bool leq_t(Tri a, Tri b) { return truth_rank(a) <= truth_rank(b); }

// Knowledge order: False < Unknown, True < Unknown, nothing else.
inline bool leq_s(Tri a, Tri b) { return a == b || b == Tri::Unknown; }

inline Tri tri_not(Tri v) {
    if (v == Tri::Unknown) return Tri::Unknown;
    return v == Tri::True ? Tri::False : Tri::True;
}

inline Tri tri_and(Tri a, Tri b) { return truth_rank(a) <= truth_rank(b) ? a : b; }
inline Tri tri_or(Tri a, Tri b) { return truth_rank(a) >= truth_rank(b) ? a : b; }

// Two-valued interpretation / Boolean-network state: bit i holds the value of
// the i-th variable in the canonical order.
using State = std::uint32_t;

// Total three-valued map over a fixed variable order. Serves both as a
// three-valued interpretation of a ground program and as a sub-space of a
// Boolean network.
class Interp3 {
public:
    Interp3() = default;
    explicit Interp3(std::size_t n, Tri fill = Tri::Unknown) : vals_(n, fill) {}
    static Interp3 from_state(State s, std::size_t n);

    std::size_t size() const { return vals_.size(); }
    Tri operator[](std::size_t i) const { return vals_[i]; }
    Tri& operator[](std::size_t i) { return vals_[i]; }

    bool is_two_valued() const;
    State to_state() const;  // requires is_two_valued()

    bool leq_s(const Interp3& other) const;
    bool leq_t(const Interp3& other) const;
    bool consistent_with(const Interp3& other) const;
    // Pointwise knowledge-order minimum; nullopt when the cells are disjoint.
    std::optional<Interp3> overlap(const Interp3& other) const;

    // Cell [I]: the set of two-valued completions.
    unsigned unknown_count() const;
    bool cell_contains(State s) const;
    std::vector<State> cell_states() const;  // ascending

    // Digits 0/1/2 for F/T/U; total order key for deterministic listings.
    std::string value_string() const;
    // 0/1/⋆ rendering in variable order.
    std::string subspace_string() const;

    friend bool operator==(const Interp3& a, const Interp3& b) { return a.vals_ == b.vals_; }
    friend bool operator<(const Interp3& a, const Interp3& b) { return a.vals_ < b.vals_; }

private:
    std::vector<Tri> vals_;
};

// Keeps only the <=s-minimal elements, preserving canonical order.
std::vector<Interp3> keep_s_minimal(const std::vector<Interp3>& xs);

}  // namespace dlgbn
