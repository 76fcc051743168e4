#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlgbn/trivalue.hpp"

namespace dlgbn {

// Dynamics over all 2^n two-valued interpretations. Functional graphs
// (stable, supported, synchronous) store exactly one successor per state;
// the asynchronous variant stores one arc per flipping variable, so a state
// with no flips has no outgoing arc.
struct TransitionGraph {
    std::vector<std::string> variables;  // canonical order
    bool functional = true;
    std::vector<State> successor;             // functional variants
    std::vector<std::vector<State>> out_arcs;  // asynchronous variant, sorted

    std::size_t num_states() const {
        return functional ? successor.size() : out_arcs.size();
    }
    std::vector<State> successors(State s) const;

    friend bool operator==(const TransitionGraph& a, const TransitionGraph& b) {
        return a.variables == b.variables && a.functional == b.functional &&
               a.successor == b.successor && a.out_arcs == b.out_arcs;
    }
};

// Terminal strongly connected components, each sorted ascending; the list is
// ordered by least state.
std::vector<std::vector<State>> attractors(const TransitionGraph& tg);

bool is_fixed_point(const TransitionGraph& tg, const std::vector<State>& attractor);

// No arc leaves the (non-empty) set.
bool is_trap_set(const TransitionGraph& tg, const std::vector<State>& states);

// Cycles of a functional graph in traversal order, each rotated to start at
// its least state; the size of a cycle is its period.
std::vector<std::vector<State>> functional_cycles(const TransitionGraph& tg);

std::string state_bits(State s, std::size_t n);  // "010" in variable order

enum class StgNodeStyle { Bits, AtomSet };

// DOT rendering; attractor states are drawn as boxes.
std::string to_dot(const TransitionGraph& tg, StgNodeStyle style, const std::string& name = "stg");

}  // namespace dlgbn
