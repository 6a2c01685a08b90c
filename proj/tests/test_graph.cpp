#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dicut/bounds.hpp"
#include "dicut/errors.hpp"
#include "dicut/graph.hpp"
#include "testutil.hpp"

using namespace dicut;

TEST_CASE("cut weight on the G1 gadget and edge cases") {
    WeightedDigraph g1 = build_g1(frac(5, 4));
    // A, B, C are vertices 0, 2, 4
    CHECK(cut_weight(g1, Cut::of({0, 2, 4})) == frac(25, 8));  // 2c^2 = 3.125
    CHECK(cut_weight(g1, Cut{}) == 0);

    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        WeightedDigraph g = testutil::random_graph(rng, 6);
        std::vector<int> ids;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng.next_bernoulli(0.5)) ids.push_back(v);
        Cut c = Cut::of(ids);
        // independent re-summation over the edge list
        Rat expect = 0;
        for (const Edge& e : g.edges()) {
            bool src_in = std::count(ids.begin(), ids.end(), e.src) > 0;
            bool dst_in = std::count(ids.begin(), ids.end(), e.dst) > 0;
            if (src_in && !dst_in) expect += e.weight;
        }
        CHECK(cut_weight(g, c) == expect);
    }

    CHECK_THROWS_AS(cut_weight(g1, Cut{{99}}), std::out_of_range);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(WeightedDigraph(2, {{0, 0, Rat(1)}}), parse_error);
    CHECK_THROWS_AS(WeightedDigraph(2, {{0, 5, Rat(1)}}), parse_error);
    CHECK_THROWS_AS(WeightedDigraph(2, {{0, 1, Rat(0)}}), parse_error);
}

TEST_CASE("biases: gadget values, sinks, isolated vertices") {
    WeightedDigraph g1 = build_g1(frac(5, 4));
    BiasProfile p = biases(g1);
    CHECK(p.bias[0] == frac(5, 9));  // A: c/(c+1) at c=5/4

    WeightedDigraph g2 = build_g2(frac(5, 4));
    CHECK(biases(g2).bias[2] == frac(1, 2));  // E'

    WeightedDigraph sink(2, {{0, 1, Rat(3)}});
    CHECK(biases(sink).bias[1] == 0);
    CHECK(biases(sink).bias[0] == 1);

    WeightedDigraph isolated(3, {{0, 1, Rat(1)}});
    CHECK(biases(isolated).bias[2] == frac(1, 2));
}

TEST_CASE("expected cut weight: cycles, constants, the 3/8 tight pair") {
    for (int k = 2; k <= 5; ++k) {
        WeightedDigraph cyc = even_cycle(k);
        CHECK(expected_cut_weight(cyc, make_uniform()) == frac(k, 2));
    }
    WeightedDigraph any = tight_example_25(frac(1, 100));
    CHECK(expected_cut_weight(any, StepFunction::constant(Rat(1))) == 0);

    CHECK(expected_cut_weight(tight_example_38(), make_f_delta(frac(1, 3))) == frac(1, 4));

    WeightedDigraph none(3, {});
    CHECK_THROWS_AS(expected_cut_weight(none, make_uniform()), zero_weight_error);
}

TEST_CASE("brute force: documented optima and the tie break") {
    WeightedDigraph g = tight_example_25(frac(1, 100));
    OptResult r = brute_force_opt(g);
    CHECK(r.weight == 5);
    CHECK(r.cut == Cut::of({0}));  // select X

    WeightedDigraph single(2, {{0, 1, frac(7, 3)}});
    OptResult s = brute_force_opt(single);
    CHECK(s.weight == frac(7, 3));
    CHECK(s.cut == Cut::of({0}));

    CHECK(brute_force_opt(build_g2(frac(5, 4))).weight == frac(5, 2));

    // all-equal weights: the lexicographically smallest optimal mask wins
    WeightedDigraph two(4, {{0, 1, Rat(1)}, {2, 3, Rat(1)}});
    OptResult t = brute_force_opt(two);
    CHECK(t.weight == 2);
    CHECK(t.cut == Cut::of({0, 2}));

    CHECK_THROWS_AS(brute_force_opt(WeightedDigraph(30, {}), 24), limit_error);
}

TEST_CASE("brute force agrees between the integer and rational paths") {
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        WeightedDigraph g = testutil::random_graph(rng, 7);
        OptResult fast = brute_force_opt(g);
        // exhaustive rational rescan
        Rat best = 0;
        std::uint64_t best_mask = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.vertex_count()); ++mask) {
            std::vector<int> ids;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (mask >> v & 1) ids.push_back(v);
            Rat w = cut_weight(g, Cut::of(ids));
            if (w > best || (w == best && mask < best_mask)) {
                best = w;
                best_mask = mask;
            }
        }
        CHECK(fast.weight == best);
        std::vector<int> ids;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (best_mask >> v & 1) ids.push_back(v);
        CHECK(fast.cut == Cut::of(ids));
    }
}

TEST_CASE("invert, disjoint union, replicate") {
    Rng rng(41);
    WeightedDigraph g = testutil::random_graph(rng, 6);
    CHECK(invert(invert(g)) == g);

    WeightedDigraph g1 = build_g1(frac(5, 4));
    WeightedDigraph g2 = build_g2(frac(5, 4));
    WeightedDigraph combined = disjoint_union({g1, g2, g2, g2}, {Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(combined.vertex_count() == 18);
    CHECK(brute_force_opt(combined).weight == frac(85, 8));  // 2c^2 + 6c = 10.625

    CHECK(replicate(g, 3).total_weight() == 3 * g.total_weight());
    CHECK_THROWS_AS(disjoint_union({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(replicate(g, 0), std::invalid_argument);

    // additivity and scale multiplicativity of cut weight and optimum
    WeightedDigraph h = testutil::random_graph(rng, 5);
    std::vector<Rat> scales = {frac(2, 3), frac(5, 1)};
    WeightedDigraph du = disjoint_union({g, h}, scales);
    OptResult og = brute_force_opt(g), oh = brute_force_opt(h);
    CHECK(brute_force_opt(du).weight == scales[0] * og.weight + scales[1] * oh.weight);
}

TEST_CASE("monte carlo expectation tracks the exact value") {
    Rng rng(59);
    WeightedDigraph g = testutil::random_graph(rng, 6);
    StepFunction f = testutil::random_antisymmetric_stepfn(rng);
    Rat exact = expected_cut_weight(g, f);
    MonteCarloStats mc = monte_carlo_expected_cut(g, f, 100000, 4242);
    double err = std::abs(mc.mean - rat_d(exact));
    CHECK(err <= 4 * mc.std_error + 1e-12);

    // reproducible for a fixed seed
    MonteCarloStats again = monte_carlo_expected_cut(g, f, 100000, 4242);
    CHECK(mc.mean == again.mean);
}

TEST_CASE("reversal invariance for antisymmetric functions") {
    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
        WeightedDigraph g = testutil::random_graph(rng);
        StepFunction f = testutil::random_antisymmetric_stepfn(rng);
        CHECK(expected_cut_weight(invert(g), f) == expected_cut_weight(g, f));
    }
}

TEST_CASE("expansion: single unit edge is a fixed point") {
    WeightedDigraph g(2, {{0, 1, Rat(1)}});
    ExpandResult r = expand_to_unweighted(g);
    CHECK(r.m == 1);
    CHECK(r.graph == g);
}

TEST_CASE("expansion: documented two-edge example") {
    WeightedDigraph g(2, {{0, 1, frac(2, 3)}, {1, 0, frac(1, 3)}});
    ExpandResult r = expand_to_unweighted(g);
    // normalized by 2/3: weights 1 and 1/2, so m = 2
    CHECK(r.m == 2);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.edges().size() == 6);  // 2-regular + 1-regular gadgets
    BiasProfile p = biases(r.graph);
    CHECK(p.bias[0] == frac(2, 3));
    CHECK(p.bias[1] == frac(2, 3));
    CHECK(p.bias[2] == frac(1, 3));
    CHECK(p.bias[3] == frac(1, 3));
}

TEST_CASE("expansion preserves biases and scales expectation by m") {
    Rng rng(71);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 25; ++i) {
        WeightedDigraph g = testutil::random_graph(rng, 5, 8);
        ExpandResult r;
        try {
            r = expand_to_unweighted(g, {.max_m = 12, .max_edges = 100000});
        } catch (const limit_error&) {
            continue;
        }
        ++checked;
        long m = mpz_get_si(r.m.get_mpz_t());
        BiasProfile orig = biases(g);
        BiasProfile big = biases(r.graph);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (long j = 0; j < m; ++j) CHECK(big.bias[v * m + j] == orig.bias[v]);

        StepFunction f = testutil::random_antisymmetric_stepfn(rng);
        CHECK(expected_cut_weight(r.graph, f) == r.m * expected_cut_weight(r.integer_graph, f));

        if (r.graph.vertex_count() <= 14) {
            CHECK(brute_force_opt(r.graph).weight >=
                  r.m * brute_force_opt(r.integer_graph).weight);
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("graph text round-trip is bit-exact for rational weights") {
    WeightedDigraph g(3, {{0, 1, frac(1, 3)}, {1, 2, frac(22, 7)}, {2, 0, Rat(4)}});
    std::ostringstream os;
    write_graph(os, g);
    CHECK(parse_graph(os.str()) == g);

    WeightedDigraph d = parse_graph("# comment\ndicut-graph v1 2\n0 1 0.125\n");
    CHECK(d.edges()[0].weight == frac(1, 8));

    CHECK_THROWS_AS(parse_graph("dicut-graph v2 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("dicut-graph v1 2\n0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("dicut-graph v1 2\n0 1 -3\n"), parse_error);
    CHECK_THROWS_AS(parse_graph(""), parse_error);
}
