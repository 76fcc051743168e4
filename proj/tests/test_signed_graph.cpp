#include <random>

#include "dlgbn/program.hpp"
#include "dlgbn/semantics.hpp"
#include "dlgbn/signed_graph.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace dlgbn;

namespace {

// the six-vertex graph used for the delocalizing-triple examples
SignedDigraph triple_example_graph() {
    SignedDigraph g({"v1", "v2", "v3", "v4", "v5", "v6"});
    auto v = [](int i) { return static_cast<std::uint32_t>(i - 1); };
    g.add_arc(v(1), v(2), Sign::Positive);
    g.add_arc(v(2), v(1), Sign::Positive);
    g.add_arc(v(1), v(4), Sign::Negative);
    g.add_arc(v(1), v(3), Sign::Positive);
    g.add_arc(v(1), v(6), Sign::Negative);
    g.add_arc(v(2), v(4), Sign::Negative);
    g.add_arc(v(3), v(4), Sign::Negative);
    g.add_arc(v(4), v(3), Sign::Negative);
    g.add_arc(v(3), v(5), Sign::Positive);
    g.add_arc(v(5), v(1), Sign::Positive);
    g.add_arc(v(1), v(5), Sign::Positive);
    g.add_arc(v(5), v(6), Sign::Negative);
    g.add_arc(v(6), v(5), Sign::Negative);
    return g;
}

SignedDigraph random_signed_graph(std::mt19937_64& rng, std::size_t n, double arc_prob) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
    SignedDigraph g(std::move(labels));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            for (Sign s : {Sign::Positive, Sign::Negative})
                if ((rng() >> 11) * (1.0 / 9007199254740992.0) < arc_prob) g.add_arc(u, v, s);
    return g;
}

Cycle find_cycle(const std::vector<Cycle>& cycles, const std::vector<std::string>& vertex_names,
                 const SignedDigraph& g) {
    for (const Cycle& c : cycles) {
        std::vector<std::string> names;
        for (std::uint32_t v : c.vertices()) names.push_back(g.label(v));
        if (names == vertex_names) return c;
    }
    throw std::logic_error("cycle not found");
}

}  // namespace

TEST_CASE("the running example has exactly one cycle, an even one") {
    GroundProgram g = fixtures::example21();
    std::vector<Cycle> cycles = enumerate_simple_cycles(atom_dependency_graph(g));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].is_even());
    CHECK(cycles[0].arcs.size() == 2);
    CHECK(cycles[0].negative_count() == 2);
}

TEST_CASE("p5 has two even cycles") {
    std::vector<Cycle> cycles = enumerate_simple_cycles(atom_dependency_graph(fixtures::p5()));
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].is_even());
    CHECK(cycles[1].is_even());
    // one self-loop and one two-step cycle
    std::multiset<std::size_t> lens{cycles[0].arcs.size(), cycles[1].arcs.size()};
    CHECK(lens == std::multiset<std::size_t>{1, 2});
}

TEST_CASE("an isolated vertex has no cycles") {
    SignedDigraph g({"p"});
    CHECK(enumerate_simple_cycles(g).empty());
}

TEST_CASE("parallel signed arcs make distinct cycles") {
    SignedDigraph g({"a", "b"});
    g.add_arc(0, 1, Sign::Positive);
    g.add_arc(0, 1, Sign::Negative);
    g.add_arc(1, 0, Sign::Positive);
    CHECK(enumerate_simple_cycles(g).size() == 2);  // one even, one odd
    CHECK(has_even_cycle(g));
    CHECK(has_odd_cycle(g));
}

TEST_CASE("the enumeration cap throws") {
    // complete graph on 9 vertices has far more than 100 cycles
    SignedDigraph g({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    for (std::uint32_t u = 0; u < 9; ++u)
        for (std::uint32_t v = 0; v < 9; ++v)
            if (u != v) g.add_arc(u, v, Sign::Positive);
    CHECK_THROWS_AS(enumerate_simple_cycles(g, 100), CapExceeded);
}

TEST_CASE("cycle parities on the fixtures") {
    CHECK_FALSE(has_even_cycle(atom_dependency_graph(fixtures::p4())));
    CHECK(has_odd_cycle(atom_dependency_graph(fixtures::p4())));
    GroundProgram lfp4 = lfp_transform(fixtures::p4());
    CHECK(has_even_cycle(atom_dependency_graph(lfp4)));

    SignedDigraph p7 = atom_dependency_graph(fixtures::p7());
    CHECK(has_odd_cycle(p7));
    CHECK_FALSE(has_even_cycle(p7));
}

TEST_CASE("cycles revalidate against the graph on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        SignedDigraph g = random_signed_graph(rng, 5, 0.18);
        for (const Cycle& c : enumerate_simple_cycles(g)) {
            std::set<std::uint32_t> seen;
            for (std::size_t i = 0; i < c.arcs.size(); ++i) {
                const SignedArc& a = c.arcs[i];
                CHECK(g.has_arc(a.source, a.target, a.sign));
                CHECK(a.target == c.arcs[(i + 1) % c.arcs.size()].source);
                CHECK(seen.insert(a.source).second);  // simple
            }
            CHECK(c.is_even() == (c.negative_count() % 2 == 0));
        }
    }
}

TEST_CASE("cycle enumeration agrees with the naive oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        SignedDigraph g = random_signed_graph(rng, 6, 0.15);
        CHECK(enumerate_simple_cycles(g) == helpers::oracle_simple_cycles(g));
    }
}

TEST_CASE("even feedback vertex sets on the fixture programs") {
    FvsResult fvs = even_feedback_vertex_set(atom_dependency_graph(fixtures::example21()));
    CHECK(fvs.exact);
    CHECK(fvs.vertices.size() == 1);  // {p} or {q}

    FvsResult p5 = even_feedback_vertex_set(atom_dependency_graph(fixtures::p5()));
    CHECK(p5.exact);
    REQUIRE(p5.vertices.size() == 1);
    CHECK(p5.vertices[0] == 0);  // only a hits both even cycles

    SignedDigraph odd_only = atom_dependency_graph(fixtures::p7());
    CHECK(even_feedback_vertex_set(odd_only).vertices.empty());
}

TEST_CASE("odd feedback vertex sets") {
    FvsResult p7 = odd_feedback_vertex_set(atom_dependency_graph(fixtures::p7()));
    CHECK(p7.vertices == std::vector<std::uint32_t>{0});

    CHECK(odd_feedback_vertex_set(atom_dependency_graph(fixtures::example21())).vertices.empty());
    CHECK(odd_feedback_vertex_set(atom_dependency_graph(fixtures::p3())).vertices.empty());
}

TEST_CASE("feedback vertex sets verify and exact mode is minimum") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        SignedDigraph g = random_signed_graph(rng, 5, 0.2);
        std::vector<Cycle> cycles = enumerate_simple_cycles(g);
        for (bool even : {true, false}) {
            FvsResult fvs = even ? even_feedback_vertex_set(g) : odd_feedback_vertex_set(g);
            for (const Cycle& c : cycles) {
                if (c.is_even() != even) continue;
                bool hit = false;
                for (std::uint32_t v : c.vertices())
                    if (std::binary_search(fvs.vertices.begin(), fvs.vertices.end(), v)) hit = true;
                CHECK(hit);
            }
            if (fvs.exact && !fvs.vertices.empty()) {
                // no subset of size |U|-1 covers: brute force over all subsets
                std::size_t n = g.vertex_count(), k = fvs.vertices.size();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k - 1) continue;
                    bool all_hit = true;
                    for (const Cycle& c : cycles) {
                        if (c.is_even() != even) continue;
                        bool hit = false;
                        for (std::uint32_t v : c.vertices())
                            if (mask >> v & 1u) hit = true;
                        if (!hit) {
                            all_hit = false;
                            break;
                        }
                    }
                    CHECK_FALSE(all_hit);
                }
            }
        }
    }
}

TEST_CASE("greedy mode returns a verified cover") {
    std::mt19937_64 rng(5);
    SignedDigraph g = random_signed_graph(rng, 7, 0.25);
    FvsResult fvs = even_feedback_vertex_set(g, FvsMode::Greedy);
    CHECK_FALSE(fvs.exact);
    for (const Cycle& c : enumerate_simple_cycles(g)) {
        if (!c.is_even()) continue;
        bool hit = false;
        for (std::uint32_t v : c.vertices())
            if (std::binary_search(fvs.vertices.begin(), fvs.vertices.end(), v)) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("delocalizing triples of the six-vertex example") {
    SignedDigraph g = triple_example_graph();
    std::vector<Cycle> cycles = enumerate_simple_cycles(g);

    Cycle c1 = find_cycle(cycles, {"v3", "v4"}, g);
    std::vector<DelocalizingTriple> t1 = delocalizing_triples(g, c1);
    REQUIRE(t1.size() == 1);
    CHECK(g.label(t1[0].u) == "v1");
    CHECK(g.label(t1[0].v1) == "v3");
    CHECK(g.label(t1[0].v2) == "v4");
    CHECK_FALSE(t1[0].internal);

    Cycle c2 = find_cycle(cycles, {"v1", "v2", "v4", "v3", "v5"}, g);
    std::vector<DelocalizingTriple> t2 = delocalizing_triples(g, c2);
    REQUIRE(t2.size() == 2);
    for (const DelocalizingTriple& t : t2) CHECK(t.internal);
    bool found = false;
    for (const DelocalizingTriple& t : t2)
        if (g.label(t.u) == "v1" && g.label(t.v1) == "v5" && g.label(t.v2) == "v4") found = true;
    CHECK(found);
}

TEST_CASE("p6's even cycle has the external triple (v1, v3, v4)") {
    GroundProgram g = fixtures::p6();
    SignedDigraph adg = atom_dependency_graph(g);
    std::vector<Cycle> cycles = enumerate_simple_cycles(adg);
    for (const Cycle& c : cycles) {
        if (!c.is_even()) continue;
        std::vector<DelocalizingTriple> ts = delocalizing_triples(adg, c);
        REQUIRE(ts.size() == 1);
        CHECK(adg.label(ts[0].u) == "v1");
        CHECK(adg.label(ts[0].v1) == "v3");
        CHECK(adg.label(ts[0].v2) == "v4");
        CHECK_FALSE(ts[0].internal);
    }
}

TEST_CASE("sign definiteness, strong connectivity, in-degrees") {
    SignedDigraph p3 = atom_dependency_graph(fixtures::p3());
    CHECK(is_sign_definite(p3));
    CHECK(is_strongly_connected(p3));
    CHECK(min_in_degree(p3) == 1);

    SignedDigraph p2 = atom_dependency_graph(fixtures::p2());
    CHECK_FALSE(is_sign_definite(p2));

    SignedDigraph lone({"v"});
    CHECK(is_strongly_connected(lone));
    CHECK(min_in_degree(lone) == 0);
}

TEST_CASE("strong connectivity with a parity-pure cycle forces sign definiteness") {
    std::mt19937_64 rng(31);
    int applicable = 0;
    for (int trial = 0; trial < 400; ++trial) {
        SignedDigraph g = random_signed_graph(rng, 4, 0.2);
        if (!is_strongly_connected(g)) continue;
        bool odd = has_odd_cycle(g), even = has_even_cycle(g);
        if (odd && even) continue;
        ++applicable;
        CHECK(is_sign_definite(g));
    }
    CHECK(applicable > 0);
}

TEST_CASE("bipartition of p3 puts the least vertex on the negative side") {
    GroundProgram g = fixtures::p3();
    auto bip = positive_negative_bipartition(atom_dependency_graph(g));
    REQUIRE(bip.has_value());
    CHECK(bip->negative ==
          std::vector<std::uint32_t>{helpers::atom_id(g, "a"), helpers::atom_id(g, "c")});
    CHECK(bip->positive == std::vector<std::uint32_t>{helpers::atom_id(g, "b")});
}

TEST_CASE("bipartition fails on odd cycles and trivial graphs") {
    CHECK_FALSE(positive_negative_bipartition(atom_dependency_graph(fixtures::p7())).has_value());
    SignedDigraph lone({"v"});
    CHECK_FALSE(positive_negative_bipartition(lone).has_value());  // no arc
}

TEST_CASE("bipartition of a two-vertex negative cycle") {
    SignedDigraph g({"a", "b"});
    g.add_arc(0, 1, Sign::Negative);
    g.add_arc(1, 0, Sign::Negative);
    auto bip = positive_negative_bipartition(g);
    REQUIRE(bip.has_value());
    CHECK(bip->negative == std::vector<std::uint32_t>{0});
    CHECK(bip->positive == std::vector<std::uint32_t>{1});
}

TEST_CASE("bipartition soundness on random odd-cycle-free strongly connected graphs") {
    std::mt19937_64 rng(47);
    int applicable = 0;
    for (int trial = 0; trial < 500; ++trial) {
        SignedDigraph g = random_signed_graph(rng, 4, 0.2);
        if (!is_strongly_connected(g) || g.arcs().empty() || has_odd_cycle(g)) continue;
        ++applicable;
        auto bip = positive_negative_bipartition(g);
        REQUIRE(bip.has_value());
        auto side = [&](std::uint32_t v) {
            return std::binary_search(bip->negative.begin(), bip->negative.end(), v) ? 0 : 1;
        };
        for (const SignedArc& a : g.arcs()) {
            if (a.sign == Sign::Positive)
                CHECK(side(a.source) == side(a.target));
            else
                CHECK(side(a.source) != side(a.target));
        }
    }
    CHECK(applicable > 0);
}

TEST_CASE("cycles render to json with parities") {
    SignedDigraph g = atom_dependency_graph(fixtures::p7());
    std::string json = cycles_to_json(g, enumerate_simple_cycles(g));
    CHECK(json.find("\"parity\": \"odd\"") != std::string::npos);
}
