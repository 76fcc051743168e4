#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlgbn/errors.hpp"
#include "dlgbn/program.hpp"
#include "dlgbn/semantics.hpp"
#include "dlgbn/transition_graph.hpp"
#include "dlgbn/trivalue.hpp"

namespace dlgbn {

// One-step operators on two-valued interpretations: f_op applies the
// stable-semantics step (least model of the reduct), t_op the
// completion-semantics step (pointwise evaluation of the right-hand sides).
State f_op(const GroundProgram& g, State i);
State t_op(const GroundProgram& g, const Completion& c, State i);
State t_op(const GroundProgram& g, State i);

TransitionGraph stable_tg(const GroundProgram& g, const Caps& caps = {});
TransitionGraph supported_tg(const GroundProgram& g, const Caps& caps = {});

// Strict classes are the simple cycles of the functional transition graph;
// size-1 classes are exactly the models of the corresponding semantics.
std::vector<std::vector<State>> strict_classes(const TransitionGraph& tg);

enum class TrapKind { Stable, Supported };

// Three-valued interpretations whose cell is closed under the respective
// operator. The stable kind walks the stable transition graph; the supported
// kind uses the pointwise right-hand-side test.
std::vector<Interp3> stable_trap_spaces(const GroundProgram& g, const Caps& caps = {});
std::vector<Interp3> supported_trap_spaces(const GroundProgram& g, const Caps& caps = {});
std::vector<Interp3> trap_spaces_of_kind(const GroundProgram& g, TrapKind kind,
                                         const Caps& caps = {});

bool is_supported_trap_space(const Completion& c, const Interp3& i);

// Unique <=s-minimal trap space of the kind whose cell covers every state in
// s: the overlap of all enumerated covering trap spaces.
Interp3 minimal_cover(const GroundProgram& g, const std::vector<State>& s, TrapKind kind,
                      const Caps& caps = {});

// DOT with atom-set state labels; strict-class states are drawn as boxes.
std::string tg_to_dot(const GroundProgram& g, const TransitionGraph& tg,
                      const std::string& name = "tg");

std::string classes_to_json(const GroundProgram& g,
                            const std::vector<std::vector<State>>& classes);

}  // namespace dlgbn
