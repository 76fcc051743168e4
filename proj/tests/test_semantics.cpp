#include "dlgbn/analysis.hpp"
#include "dlgbn/boolean_network.hpp"
#include "dlgbn/dynamics.hpp"
#include "dlgbn/semantics.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace dlgbn;

TEST_CASE("three-valued connectives") {
    Interp3 i = helpers::interp("1*");  // p = T, q = U
    DnfFormula p_and_q = DnfFormula::from_clauses({DnfClause{{{0, true}, {1, true}}}});
    DnfFormula p_or_q =
        DnfFormula::from_clauses({DnfClause{{{0, true}}}, DnfClause{{{1, true}}}});
    CHECK(p_and_q.eval3(i) == Tri::Unknown);
    CHECK(p_or_q.eval3(i) == Tri::True);
    CHECK(tri_not(Tri::Unknown) == Tri::Unknown);
}

TEST_CASE("completion right-hand sides") {
    GroundProgram g = fixtures::example21();
    Completion c = completion(g);
    auto names = g.atom_names();
    CHECK(c.rhs[0].to_string(names) == "!q");
    CHECK(c.rhs[1].to_string(names) == "!p");
    CHECK(c.rhs[2].to_string(names) == "q");

    Completion c2 = completion(fixtures::p2());
    CHECK(c2.rhs[0].to_string(fixtures::p2().atom_names()) == "b | !b");

    GroundProgram g3 = parse_ground("p :- not q.\n");
    CHECK(completion(g3).rhs[1].kind() == DnfFormula::Kind::False);
}

TEST_CASE("the all-unknown interpretation is a supported partial model of the example") {
    GroundProgram g = fixtures::example21();
    Completion c = completion(g);
    CHECK(is_supported_partial_model(g, c, helpers::interp("***")));
    CHECK(c.rhs[0].eval3(helpers::interp("***")) == Tri::Unknown);
}

TEST_CASE("supported model families of the fixtures") {
    GroundProgram g = fixtures::example21();
    CHECK(supported_partial_models(g) == helpers::interps({"100", "011", "***"}));
    CHECK(states_to_interps(supported_models(g), 3) == helpers::interps({"100", "011"}));

    GroundProgram p2 = fixtures::p2();
    CHECK(supported_partial_models(p2) == helpers::interps({"***", "100"}));
    CHECK(states_to_interps(supported_models(p2), 3) == helpers::interps({"100"}));

    GroundProgram empty_over_p = parse_ground("q :- p.\n");  // p heads nothing
    // rhs(p) = false forces p = F in every supported (partial) model
    for (const Interp3& m : supported_partial_models(empty_over_p))
        CHECK(m[0] == Tri::False);

    // a rule-free program over an explicit base has the all-false model only
    GroundProgram bare({{"p", {}}}, {}, {});
    CHECK(supported_partial_models(bare) == helpers::interps({"0"}));
    CHECK(supported_models(bare) == std::vector<State>{0});
    CHECK(stable_partial_models(bare) == helpers::interps({"0"}));
}

TEST_CASE("three-step reduct construction") {
    GroundProgram g = fixtures::example21();

    Reduct r4 = reduct3(g, helpers::interp("100"));  // I4 = {p=T, q=F, r=F}
    CHECK(pretty_print(g, r4) == "p.\nr :- q.\n");

    Reduct r3 = reduct3(g, helpers::interp("***"));  // I3 all-unknown
    CHECK(pretty_print(g, r3) == "p :- u.\nq :- u.\nr :- q.\n");

    GroundProgram pos = parse_ground("p :- q.\nq.\n");
    Reduct rp = reduct3(pos, helpers::interp("01"));
    CHECK(rp.rules.size() == pos.rules().size());  // negative-body-free: unchanged
}

TEST_CASE("least three-valued models of reducts") {
    GroundProgram g = fixtures::example21();
    CHECK(least_model3(reduct3(g, helpers::interp("100"))) == helpers::interp("100"));
    CHECK(least_model3(reduct3(g, helpers::interp("***"))) == helpers::interp("***"));

    GroundProgram loop = parse_ground("p :- p.\n");
    CHECK(least_model3(reduct3(loop, helpers::interp("0"))) == helpers::interp("0"));
}

TEST_CASE("least model iteration agrees with the enumeration oracle") {
    GeneratorConfig cfg;
    cfg.atoms = 4;
    cfg.max_rules = 7;
    for (std::uint64_t seed = 600; seed < 700; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        CAPTURE(seed);
        // probe several reducts per program
        for (std::string_view digits : {"0000", "1111", "****", "10*1", "0*1*"}) {
            Interp3 i = helpers::interp(digits.substr(0, g.atom_count()));
            Reduct r = reduct3(g, i);
            CHECK(least_model3(r) == helpers::oracle_least_model3(r));
        }
    }
}

TEST_CASE("stable families of the running example") {
    GroundProgram g = fixtures::example21();
    CHECK(stable_partial_models(g) == helpers::interps({"***", "100", "011"}));
    CHECK(states_to_interps(stable_models(g), 3) == helpers::interps({"100", "011"}));
    CHECK(regular_models(g) == helpers::interps({"100", "011"}));
}

TEST_CASE("p6 has one all-unknown regular model and no stable model") {
    GroundProgram g = fixtures::p6();
    CHECK(regular_models(g) == helpers::interps({"****"}));
    CHECK(stable_models(g).empty());
}

TEST_CASE("the odd self-loop has only the all-unknown stable partial model") {
    GroundProgram g = fixtures::p7();
    CHECK(stable_partial_models(g) == helpers::interps({"*"}));
    CHECK(regular_models(g) == helpers::interps({"*"}));
    CHECK(stable_models(g).empty());
}

TEST_CASE("p2 keeps only the two-valued stable partial model") {
    GroundProgram g = fixtures::p2();
    CHECK(stable_partial_models(g) == helpers::interps({"100"}));
    CHECK(supported_partial_models(g).size() == 2);
}

TEST_CASE("well-founded model is the truth-least stable partial model") {
    CHECK(well_founded_model(fixtures::example21()) == helpers::interp("***"));
    CHECK(well_founded_model(fixtures::p2()) == helpers::interp("100"));
}

TEST_CASE("least fixpoint transformation on the fixture programs") {
    GroundProgram lfp21 = lfp_transform(fixtures::example21());
    CHECK(pretty_print(lfp21) == "p :- not q.\nq :- not p.\nr :- not p.\n");

    GroundProgram lfp4 = lfp_transform(fixtures::p4());
    CHECK(pretty_print(lfp4) ==
          "a :- not a, not b.\nb :- not a, not b.\nc :- not a, not b.\n");

    GroundProgram lfp2 = lfp_transform(fixtures::p2());
    CHECK(pretty_print(lfp2) == "a :- not b.\n");
    // the base is preserved even though b and c no longer occur
    CHECK(lfp2.herbrand_base() == fixtures::p2().herbrand_base());
}

TEST_CASE("least fixpoint preserves the stable family but not the supported one") {
    GroundProgram p2 = fixtures::p2();
    GroundProgram lfp2 = lfp_transform(p2);
    CHECK(stable_partial_models(lfp2) == stable_partial_models(p2));
    CHECK(stable_models(lfp2) == stable_models(p2));
    CHECK(regular_models(lfp2) == regular_models(p2));
    CHECK(supported_partial_models(p2).size() == 2);
    CHECK(supported_partial_models(lfp2).size() == 1);
}

TEST_CASE("stable models agree with the minimal-model oracle") {
    GeneratorConfig cfg;
    cfg.atoms = 5;
    cfg.max_rules = 9;
    for (std::uint64_t seed = 2000; seed < 2120; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        CAPTURE(seed);
        CHECK(stable_models(g) == helpers::oracle_stable_models(g));
    }
}

TEST_CASE("the derived well-founded model matches the alternating fixpoint") {
    for (const GroundProgram& g : {fixtures::example21(), fixtures::p2(), fixtures::p4(),
                                   fixtures::p6(), fixtures::p7()})
        CHECK(well_founded_model(g) == helpers::oracle_well_founded(g));
    GeneratorConfig cfg;
    cfg.atoms = 5;
    cfg.max_rules = 9;
    for (std::uint64_t seed = 2200; seed < 2320; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        CAPTURE(seed);
        CHECK(well_founded_model(g) == helpers::oracle_well_founded(g));
    }
}

TEST_CASE("subsumption chain and coincidences on random programs") {
    GeneratorConfig cfg;
    cfg.atoms = 5;
    cfg.max_rules = 9;
    for (std::uint64_t seed = 700; seed < 800; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        CAPTURE(seed);
        auto stable = states_to_interps(stable_models(g), g.atom_count());
        auto regular = regular_models(g);
        auto spm = stable_partial_models(g);
        auto supm = supported_partial_models(g);
        for (const Interp3& m : stable)
            CHECK(std::find(regular.begin(), regular.end(), m) != regular.end());
        for (const Interp3& m : regular)
            CHECK(std::find(spm.begin(), spm.end(), m) != spm.end());
        for (const Interp3& m : spm)
            CHECK(std::find(supm.begin(), supm.end(), m) != supm.end());

        CHECK(supported_models(g) == fixed_points(encode(g)));
        CHECK(supm == complete_trap_spaces(encode(g)));

        if (is_tight(g)) {
            CHECK(stable_models(g) == supported_models(g));
            CHECK(spm == supm);
        }
        if (g.negative()) CHECK(spm == supm);
    }
}

TEST_CASE("cycle-freeness consequences on random programs") {
    GeneratorConfig cfg;
    cfg.atoms = 4;
    cfg.max_rules = 6;
    int no_odd_seen = 0, no_even_seen = 0;
    for (std::uint64_t seed = 900; seed < 1100; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        SignedDigraph adg = atom_dependency_graph(g);
        CAPTURE(seed);
        if (!has_odd_cycle(adg)) {
            ++no_odd_seen;
            CHECK_FALSE(stable_models(g).empty());
            for (const Interp3& m : regular_models(g)) CHECK(m.is_two_valued());
        }
        if (!has_even_cycle(adg)) {
            ++no_even_seen;
            CHECK(supported_partial_models(g).size() == 1);
            CHECK(stable_partial_models(g).size() == 1);
            CHECK(regular_models(g).size() == 1);
            CHECK(stable_models(g).size() <= 1);
        }
    }
    CHECK(no_odd_seen > 0);
    CHECK(no_even_seen > 0);
}

TEST_CASE("model caps") {
    GroundProgram g = fixtures::example21();
    Caps tiny;
    tiny.max_atoms_2v = 2;
    tiny.max_atoms_3v = 2;
    CHECK_THROWS_AS(stable_models(g, tiny), CapExceeded);
    CHECK_THROWS_AS(stable_partial_models(g, tiny), CapExceeded);
}

TEST_CASE("model rendering") {
    GroundProgram g = fixtures::example21();
    CHECK(model_table_line(g, helpers::interp("10*")) == "{p = T, q = F, r = U}");
    std::string json = models_to_json(g, "regular", {helpers::interp("011")});
    CHECK(json.find("\"p\": \"false\"") != std::string::npos);
    CHECK(json.find("\"semantics\": \"regular\"") != std::string::npos);
}
