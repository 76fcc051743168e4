#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlgbn/errors.hpp"
#include "dlgbn/program.hpp"
#include "dlgbn/signed_graph.hpp"

namespace dlgbn {

struct ModelCounts {
    std::uint64_t supported = 0;
    std::uint64_t supported_partial = 0;
    std::uint64_t stable = 0;
    std::uint64_t stable_partial = 0;
    std::uint64_t regular = 0;
};

struct BoundCheck {
    std::string id;           // e.g. "stable<=2^|U|"
    long double bound = 0;    // numeric bound value
    std::uint64_t actual = 0;
    bool holds = false;
};

struct AnalysisReport {
    bool tight = false;
    bool uni_rule = false;
    bool negative = false;
    bool has_odd_cycle = false;
    bool has_even_cycle = false;
    std::uint64_t cycle_count = 0;
    std::uint64_t even_cycle_count = 0;
    std::uint64_t odd_cycle_count = 0;
    std::vector<std::uint32_t> even_fvs;  // vertex ids in the atom order
    bool even_fvs_exact = false;
    // Only for uni-rule programs: hits every even cycle lacking a
    // delocalizing triple.
    std::optional<std::vector<std::uint32_t>> triple_free_even_fvs;
    ModelCounts counts;
    std::vector<BoundCheck> bounds;
    bool all_bounds_hold() const;
};

AnalysisReport analyze(const GroundProgram& g, const Caps& caps = {});
std::string to_json(const GroundProgram& g, const AnalysisReport& r);

struct TheoremResult {
    std::string id;
    bool applicable = false;
    bool pass = true;          // vacuously true when not applicable
    std::string witness;       // counterexample payload on failure
};

// Runs every registered result whose hypotheses hold on g and checks its
// conclusion by exact enumeration.
std::vector<TheoremResult> verify_theorems(const GroundProgram& g, const Caps& caps = {});
std::string verification_to_json(const GroundProgram& g, const std::vector<TheoremResult>& results,
                                 const AnalysisReport& report);

struct GeneratorConfig {
    int atoms = 5;
    int min_rules = 1;
    int max_rules = 8;
    double positive_literal_prob = 0.5;  // relative weight of positive body literals
    double negative_literal_prob = 0.5;
    bool uni_rule = false;
    bool tight_only = false;
};

// Reproducible from (config, seed). Tightness is enforced by allowing
// positive literals only below the head in the atom order.
GroundProgram generate_program(const GeneratorConfig& config, std::uint64_t seed);

struct ConjectureOutcome {
    std::string id;
    std::string statement;
    std::uint64_t applicable = 0;
    std::vector<std::string> counterexamples;  // pretty-printed programs
};

struct ConjectureReport {
    GeneratorConfig config;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<ConjectureOutcome> conjectures;
    // Side search: a strict stable class that is not a supported class.
    std::uint64_t stable_class_not_supported_class_hits = 0;
    std::string stable_class_not_supported_class_example;
};

// Never asserts conjecture truth; reports counterexample candidates only.
ConjectureReport probe_conjectures(const GeneratorConfig& config, std::uint64_t trials,
                                   std::uint64_t seed);
std::string to_json(const ConjectureReport& r);

}  // namespace dlgbn
