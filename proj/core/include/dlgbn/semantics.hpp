#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlgbn/dnf.hpp"
#include "dlgbn/errors.hpp"
#include "dlgbn/program.hpp"
#include "dlgbn/trivalue.hpp"

namespace dlgbn {

// Per-atom equivalences p <-> rhs(p): the right-hand side is the disjunction
// of the body formulas of the rules headed by p, False when none.
struct Completion {
    std::vector<DnfFormula> rhs;  // indexed by AtomId
};

Completion completion(const GroundProgram& g);

Tri eval_body3(const GroundProgram& g, const GroundRule& r, const Interp3& i);

// Positive program obtained from g relative to an interpretation: rules with
// a True negative atom removed, False negative literals erased, Unknown ones
// replaced by a sentinel pinned to Unknown.
struct ReductRule {
    AtomId head = 0;
    std::vector<AtomId> pos_body;
    bool sentinel = false;  // body carries the always-Unknown atom u
};

struct Reduct {
    std::size_t atom_count = 0;
    std::vector<ReductRule> rules;
};

Reduct reduct3(const GroundProgram& g, const Interp3& i);
std::string pretty_print(const GroundProgram& g, const Reduct& r);

// <=t-least three-valued model of the (positive) reduct by monotone
// iteration from all-False; values only rise F -> U -> T.
Interp3 least_model3(const Reduct& r);

std::vector<Interp3> supported_partial_models(const GroundProgram& g, const Caps& caps = {});
std::vector<State> supported_models(const GroundProgram& g, const Caps& caps = {});
std::vector<Interp3> stable_partial_models(const GroundProgram& g, const Caps& caps = {});
std::vector<State> stable_models(const GroundProgram& g, const Caps& caps = {});
// <=s-minimal stable partial models.
std::vector<Interp3> regular_models(const GroundProgram& g, const Caps& caps = {});

bool is_stable_partial_model(const GroundProgram& g, const Interp3& i);
bool is_supported_partial_model(const GroundProgram& g, const Completion& c, const Interp3& i);

// Knowledge-least (<=s-greatest) element of the stable partial models;
// derived, not a dedicated algorithm.
Interp3 well_founded_model(const GroundProgram& g, const Caps& caps = {});

// Exhaustive positive-body substitution to the fixpoint; the result is a
// negative program over the same Herbrand base.
GroundProgram lfp_transform(const GroundProgram& g);

// Rendering helpers shared by the CLI and tests.
std::string model_table_line(const GroundProgram& g, const Interp3& i);   // "{p = T, q = F}"
std::string models_to_json(const GroundProgram& g, const std::string& semantics,
                           const std::vector<Interp3>& models, bool derived = false);

Interp3 state_to_interp(State s, std::size_t n);
std::vector<Interp3> states_to_interps(const std::vector<State>& states, std::size_t n);

}  // namespace dlgbn
