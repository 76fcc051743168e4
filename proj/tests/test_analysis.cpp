#include <random>
#include <sstream>

#include "dlgbn/analysis.hpp"
#include "dlgbn/dynamics.hpp"
#include "dlgbn/semantics.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace dlgbn;

namespace {

const BoundCheck& bound_of(const AnalysisReport& rep, std::string_view id) {
    for (const BoundCheck& b : rep.bounds)
        if (b.id == id) return b;
    throw std::logic_error("no such bound: " + std::string(id));
}

const TheoremResult& verdict_of(const std::vector<TheoremResult>& rs, std::string_view id) {
    for (const TheoremResult& r : rs)
        if (r.id == id) return r;
    throw std::logic_error("no such verdict: " + std::string(id));
}

}  // namespace

TEST_CASE("analysis of the running example reaches its bounds") {
    AnalysisReport rep = analyze(fixtures::example21());
    CHECK(rep.tight);
    CHECK_FALSE(rep.has_odd_cycle);
    CHECK(rep.has_even_cycle);
    CHECK(rep.even_fvs.size() == 1);
    CHECK(rep.even_fvs_exact);

    const BoundCheck& supp3 = bound_of(rep, "supported-partial<=3^|U|");
    CHECK(supp3.bound == 3);
    CHECK(supp3.actual == 3);  // the bound is reached
    const BoundCheck& reg2 = bound_of(rep, "regular<=2^|U| (tight)");
    CHECK(reg2.bound == 2);
    CHECK(reg2.actual == 2);  // reached as well
    const BoundCheck& reg8 = bound_of(rep, "regular<=2^|HB|");
    CHECK(reg8.bound == 8);
    CHECK(rep.all_bounds_hold());
}

TEST_CASE("analysis of p5 beats the literature bounds") {
    AnalysisReport rep = analyze(fixtures::p5());
    CHECK_FALSE(rep.tight);
    CHECK(rep.even_cycle_count == 2);
    REQUIRE(rep.even_fvs.size() == 1);

    CHECK(bound_of(rep, "stable<=2^|U|").bound == 2);
    CHECK(bound_of(rep, "stable<=2^|U|").actual == 2);  // reached
    CHECK(bound_of(rep, "stable<=3^(rules/3)").bound == doctest::Approx(3.0));
    CHECK(bound_of(rep, "stable<=2^(even cycles)").bound == 4);
    CHECK(rep.all_bounds_hold());
}

TEST_CASE("analysis of p6 uses the delocalizing-triple refinement") {
    AnalysisReport rep = analyze(fixtures::p6());
    CHECK(rep.uni_rule);
    CHECK(rep.tight);
    REQUIRE(rep.triple_free_even_fvs.has_value());
    CHECK(rep.triple_free_even_fvs->empty());  // the only even cycle is delocalized

    CHECK(bound_of(rep, "stable<=2^|U'| (uni-rule)").bound == 1);
    CHECK(bound_of(rep, "stable<=2^|U'| (uni-rule)").actual == 0);
    CHECK(bound_of(rep, "regular<=2^|U'| (uni-rule tight)").bound == 1);
    CHECK(bound_of(rep, "regular<=2^|U'| (uni-rule tight)").actual == 1);
    CHECK(rep.all_bounds_hold());
}

TEST_CASE("theorem verification on p3 finds the complementary stable models") {
    GroundProgram g = fixtures::p3();
    auto results = verify_theorems(g);
    const TheoremResult& two = verdict_of(results, "scc-no-odd-cycle/two-complementary-stable-models");
    CHECK(two.applicable);
    CHECK(two.pass);

    auto bip = positive_negative_bipartition(atom_dependency_graph(g));
    REQUIRE(bip.has_value());
    State a = 0;
    for (std::uint32_t v : bip->positive) a |= State{1} << v;
    CHECK(a == helpers::state_of(g, {"b"}));
    CHECK(states_to_interps(stable_models(g), 3) == helpers::interps({"010", "101"}));
}

TEST_CASE("a tautological head disarms the two-stable-models hypothesis") {
    // tight, strongly connected dependency graph, no odd cycle -- yet a
    // single stable model, because f_a = 1 | !c is constant and the
    // influence graph loses every arc into a
    GroundProgram g = parse_ground("a.\na :- not c.\nb :- a.\nc :- not b.\n");
    CHECK(is_tight(g));
    SignedDigraph adg = atom_dependency_graph(g);
    CHECK(is_strongly_connected(adg));
    CHECK_FALSE(has_odd_cycle(adg));
    CHECK(stable_models(g).size() == 1);

    auto results = verify_theorems(g);
    const TheoremResult& two = verdict_of(results, "scc-no-odd-cycle/two-complementary-stable-models");
    CHECK_FALSE(two.applicable);  // the constant update function is excluded
    for (const TheoremResult& r : results) {
        CAPTURE(r.id);
        CHECK(r.pass);
    }
}

TEST_CASE("theorem verification on p4 exercises the even-cycle uniqueness route") {
    auto results = verify_theorems(fixtures::p4());
    const TheoremResult& uniq = verdict_of(results, "no-even-cycle/unique-supported-partial-model");
    CHECK(uniq.applicable);
    CHECK(uniq.pass);
    // the least fixpoint does not keep even-cycle-freeness, unlike odd-cycle-freeness
    CHECK(has_even_cycle(atom_dependency_graph(lfp_transform(fixtures::p4()))));
    for (const TheoremResult& r : results) CHECK(r.pass);
}

TEST_CASE("theorem verification on the running example applies the odd-cycle family") {
    auto results = verify_theorems(fixtures::example21());
    for (const char* id : {"no-odd-cycle/regular-models-two-valued",
                           "no-odd-cycle/regular-equals-stable",
                           "no-odd-cycle/stable-model-exists",
                           "tight/stable-equals-supported"}) {
        const TheoremResult& r = verdict_of(results, id);
        CHECK(r.applicable);
        CHECK(r.pass);
    }
    for (const TheoremResult& r : results) CHECK(r.pass);
}

TEST_CASE("the two-stable-models theorem holds on constructed even-cycle programs") {
    // negative programs over an even cycle with chords that respect the
    // alternating two-coloring: strongly connected, every cycle even, tight
    std::mt19937_64 rng(99);
    int fired = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + 2 * static_cast<int>(rng() % 3);  // 4, 6, or 8 atoms
        std::ostringstream os;
        for (int i = 0; i < n; ++i)
            os << char('a' + (i + 1) % n) << " :- not " << char('a' + i) << ".\n";
        for (int extra = 0; extra < 3; ++extra) {
            int x = static_cast<int>(rng() % n);
            int y = static_cast<int>(rng() % n);
            if ((x + y) % 2 == 1)  // only arcs crossing the alternating classes
                os << char('a' + y) << " :- not " << char('a' + x) << ".\n";
        }
        GroundProgram g = parse_ground(os.str());
        auto results = verify_theorems(g);
        const TheoremResult& two =
            verdict_of(results, "scc-no-odd-cycle/two-complementary-stable-models");
        CAPTURE(os.str());
        REQUIRE(two.applicable);
        CHECK(two.pass);
        ++fired;
        for (const TheoremResult& r : results) CHECK(r.pass);
    }
    CHECK(fired == 50);
}

TEST_CASE("every applicable theorem passes on the fixture programs") {
    for (const GroundProgram& g : {fixtures::example21(), fixtures::p2(), fixtures::p3(),
                                   fixtures::p4(), fixtures::p5(), fixtures::p6(), fixtures::p7()}) {
        for (const TheoremResult& r : verify_theorems(g)) {
            CAPTURE(r.id);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("generator is reproducible and honors its flags") {
    GeneratorConfig cfg;
    cfg.atoms = 6;
    cfg.max_rules = 9;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK(generate_program(cfg, seed) == generate_program(cfg, seed));
    }
    GeneratorConfig uni = cfg;
    uni.uni_rule = true;
    GeneratorConfig tight = cfg;
    tight.tight_only = true;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(generate_program(uni, seed).uni_rule());
        CHECK(is_tight(generate_program(tight, seed)));
    }
    GeneratorConfig bad;
    bad.atoms = 0;
    CHECK_THROWS_AS(generate_program(bad, 1), ConfigError);
}

TEST_CASE("probe runs and never asserts conjecture truth") {
    GeneratorConfig cfg;
    cfg.atoms = 4;
    cfg.max_rules = 6;
    ConjectureReport rep = probe_conjectures(cfg, 25, 7);
    CHECK(rep.trials == 25);
    REQUIRE(rep.conjectures.size() == 4);
    for (const ConjectureOutcome& c : rep.conjectures) {
        CHECK(c.applicable <= 25);
        CHECK(c.counterexamples.empty());  // none expected on conjectures
    }
    std::string json = to_json(rep);
    CHECK(json.find("does not establish") != std::string::npos);

    ConjectureReport empty = probe_conjectures(cfg, 0, 7);
    for (const ConjectureOutcome& c : empty.conjectures) CHECK(c.applicable == 0);
}

TEST_CASE("analysis json carries the counts and the bound verdicts") {
    GroundProgram g = fixtures::example21();
    std::string json = to_json(g, analyze(g));
    CHECK(json.find("\"all_bounds_hold\": true") != std::string::npos);
    CHECK(json.find("\"stable\": 2") != std::string::npos);
    std::string vjson = verification_to_json(g, verify_theorems(g), analyze(g));
    CHECK(vjson.find("\"hypotheses\"") != std::string::npos);
    CHECK(vjson.find("\"verdicts\"") != std::string::npos);
}
