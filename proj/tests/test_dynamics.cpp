#include "dlgbn/analysis.hpp"
#include "dlgbn/boolean_network.hpp"
#include "dlgbn/dynamics.hpp"
#include "dlgbn/semantics.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace dlgbn;

TEST_CASE("the one-step operators on the running example") {
    GroundProgram g = fixtures::example21();
    State all = helpers::state_of(g, {"p", "q", "r"});
    CHECK(f_op(g, 0) == all);
    CHECK(f_op(g, all) == 0);

    Completion c = completion(g);
    CHECK(t_op(g, c, helpers::state_of(g, {"p", "q"})) == helpers::state_of(g, {"r"}));
    CHECK(t_op(g, c, helpers::state_of(g, {"r"})) == helpers::state_of(g, {"p", "q"}));

    for (State m : supported_models(g)) CHECK(t_op(g, c, m) == m);
}

TEST_CASE("transition graphs of the running example, arc by arc") {
    GroundProgram g = fixtures::example21();
    TransitionGraph st = stable_tg(g);
    auto s = [&](std::initializer_list<std::string_view> atoms) {
        return helpers::state_of(g, atoms);
    };
    CHECK(st.successor[s({"p", "r"})] == s({"p"}));
    CHECK(st.successor[s({"q"})] == s({"q", "r"}));
    CHECK(st.successor[s({"p", "q"})] == 0);
    CHECK(st.successor[s({"r"})] == s({"p", "q", "r"}));
    CHECK(st.successor[s({})] == s({"p", "q", "r"}));
    CHECK(st.successor[s({"p", "q", "r"})] == 0);
    CHECK(st.successor[s({"p"})] == s({"p"}));
    CHECK(st.successor[s({"q", "r"})] == s({"q", "r"}));

    TransitionGraph sp = supported_tg(g);
    CHECK(sp.successor[s({"p", "r"})] == s({"p"}));
    CHECK(sp.successor[s({})] == s({"p", "q"}));
    CHECK(sp.successor[s({"p", "q", "r"})] == s({"r"}));
    CHECK(sp.successor[s({"p", "q"})] == s({"r"}));
    CHECK(sp.successor[s({"r"})] == s({"p", "q"}));

    // the supported dynamics is the synchronous dynamics of the encoding
    CHECK(sp.successor == sync_stg(encode(g)).successor);
}

TEST_CASE("strict classes of the running example") {
    GroundProgram g = fixtures::example21();
    auto s = [&](std::initializer_list<std::string_view> atoms) {
        return helpers::state_of(g, atoms);
    };
    auto stable_cls = strict_classes(stable_tg(g));
    REQUIRE(stable_cls.size() == 3);
    CHECK(stable_cls[0] == std::vector<State>{s({}), s({"p", "q", "r"})});
    CHECK(stable_cls[1] == std::vector<State>{s({"p"})});
    CHECK(stable_cls[2] == std::vector<State>{s({"q", "r"})});

    // cycle order starts at the least state: {p, q} -> {r} -> {p, q}
    auto supported_cls = strict_classes(supported_tg(g));
    REQUIRE(supported_cls.size() == 3);
    CHECK(supported_cls[0] == std::vector<State>{s({"p"})});
    CHECK(supported_cls[1] == std::vector<State>{s({"p", "q"}), s({"r"})});
    CHECK(supported_cls[2] == std::vector<State>{s({"q", "r"})});
}

TEST_CASE("size-one classes are exactly the models") {
    GeneratorConfig cfg;
    cfg.atoms = 5;
    cfg.max_rules = 8;
    for (std::uint64_t seed = 40; seed < 90; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        CAPTURE(seed);
        auto singletons = [](const std::vector<std::vector<State>>& classes) {
            std::vector<State> out;
            for (const auto& cls : classes)
                if (cls.size() == 1) out.push_back(cls[0]);
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(singletons(strict_classes(stable_tg(g))) == stable_models(g));
        CHECK(singletons(strict_classes(supported_tg(g))) == supported_models(g));
    }
}

TEST_CASE("trap sets of the running example") {
    GroundProgram g = fixtures::example21();
    TransitionGraph st = stable_tg(g);
    auto s = [&](std::initializer_list<std::string_view> atoms) {
        return helpers::state_of(g, atoms);
    };
    // closed but not a class: {p} absorbs {p, r}
    CHECK(is_trap_set(st, {s({"p"}), s({"p", "r"})}));
    CHECK_FALSE(is_trap_set(st, {s({"p", "r"})}));
    // every strict class is a trap set, the full state set too
    for (const auto& cls : strict_classes(st)) CHECK(is_trap_set(st, cls));
    std::vector<State> all;
    for (State x = 0; x < 8; ++x) all.push_back(x);
    CHECK(is_trap_set(st, all));
}

TEST_CASE("trap spaces of the running example, both kinds") {
    GroundProgram g = fixtures::example21();
    std::vector<std::string> expected{"011", "01⋆", "100", "10⋆", "⋆⋆⋆"};
    CHECK(helpers::subspace_strings(stable_trap_spaces(g)) == expected);
    CHECK(helpers::subspace_strings(supported_trap_spaces(g)) == expected);
}

TEST_CASE("a supported trap space need not be a three-valued model") {
    GroundProgram g = fixtures::example21();
    Completion c = completion(g);
    Interp3 i2 = helpers::interp("01*");
    CHECK(is_supported_trap_space(c, i2));
    // the rule r :- q is violated under the truth order at i2
    CHECK_FALSE(leq_t(c.rhs[2].eval3(i2), i2[2]));
}

TEST_CASE("the all-unknown interpretation is a trap space of both kinds") {
    for (const GroundProgram& g : {fixtures::example21(), fixtures::p2(), fixtures::p6()}) {
        Interp3 all_u(g.atom_count(), Tri::Unknown);
        auto st = stable_trap_spaces(g);
        auto su = supported_trap_spaces(g);
        CHECK(std::find(st.begin(), st.end(), all_u) != st.end());
        CHECK(std::find(su.begin(), su.end(), all_u) != su.end());
    }
}

TEST_CASE("overlap") {
    Interp3 i1 = helpers::interp("10*");
    Interp3 i4 = helpers::interp("100");
    Interp3 i5 = helpers::interp("011");
    CHECK(i4.leq_s(i1));
    CHECK(i1.overlap(i4) == i4);
    CHECK_FALSE(i4.consistent_with(i5));
    CHECK(i4.overlap(i5) == std::nullopt);
    CHECK(i1.overlap(i1) == i1);
}

TEST_CASE("minimal covers on the running example") {
    GroundProgram g = fixtures::example21();
    auto s = [&](std::initializer_list<std::string_view> atoms) {
        return helpers::state_of(g, atoms);
    };
    CHECK(minimal_cover(g, {s({"p"})}, TrapKind::Stable) == helpers::interp("100"));
    CHECK(minimal_cover(g, {s({"q", "r"})}, TrapKind::Stable) == helpers::interp("011"));
    std::vector<State> all;
    for (State x = 0; x < 8; ++x) all.push_back(x);
    CHECK(minimal_cover(g, all, TrapKind::Stable) == helpers::interp("***"));
    CHECK(minimal_cover(g, all, TrapKind::Supported) == helpers::interp("***"));
}

TEST_CASE("minimal cover is the least covering trap space on random programs") {
    GeneratorConfig cfg;
    cfg.atoms = 4;
    cfg.max_rules = 7;
    for (std::uint64_t seed = 150; seed < 190; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        if (g.atom_count() == 0) continue;
        CAPTURE(seed);
        std::vector<State> probe{0};
        for (TrapKind kind : {TrapKind::Stable, TrapKind::Supported}) {
            Interp3 cover = minimal_cover(g, probe, kind);
            CHECK(cover.cell_contains(0));
            for (const Interp3& t : trap_spaces_of_kind(g, kind)) {
                if (!t.cell_contains(0)) continue;
                CHECK(cover.leq_s(t));
            }
        }
    }
}

TEST_CASE("trap space semantics correspondences on random programs") {
    GeneratorConfig cfg;
    cfg.atoms = 5;
    cfg.max_rules = 9;
    for (std::uint64_t seed = 1200; seed < 1300; ++seed) {
        GroundProgram g = generate_program(cfg, seed);
        CAPTURE(seed);
        auto st = stable_trap_spaces(g);
        auto su = supported_trap_spaces(g);
        CHECK(keep_s_minimal(st) == regular_models(g));
        CHECK(keep_s_minimal(su) == keep_s_minimal(supported_partial_models(g)));
        CHECK(su == trap_spaces(encode(g)));
        for (const Interp3& m : stable_partial_models(g))
            CHECK(std::find(st.begin(), st.end(), m) != st.end());

        // the stable kind is the trap-set definition over the stable dynamics
        TransitionGraph tg = stable_tg(g);
        for (const Interp3& m : st) CHECK(is_trap_set(tg, m.cell_states()));

        if (g.negative()) {
            CHECK(stable_tg(g).successor == supported_tg(g).successor);
            CHECK(st == su);
        }
        GroundProgram lfp = lfp_transform(g);
        CHECK(stable_tg(lfp).successor == tg.successor);
        CHECK(stable_trap_spaces(lfp) == st);
    }
}

TEST_CASE("transition graph dot highlights the strict classes as boxes") {
    GroundProgram g = fixtures::example21();
    std::string dot = tg_to_dot(g, stable_tg(g), "tgst");
    CHECK(dot.find("\"{p}\" [shape=box]") != std::string::npos);
    CHECK(dot.find("\"∅\" [shape=box]") != std::string::npos);        // on the 2-cycle
    CHECK(dot.find("\"{p, r}\" [shape=box]") == std::string::npos);   // transient
    CHECK(dot.find("\"{p, r}\" -> \"{p}\"") != std::string::npos);
}
