#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicut/bounds.hpp"
#include "dicut/lp.hpp"
#include "testutil.hpp"

using namespace dicut;

TEST_CASE("gadget construction validates biases and optima") {
    Rat c = frac(5, 4);
    WeightedDigraph g1 = build_g1(c);
    CHECK(brute_force_opt(g1).weight == frac(25, 8));
    WeightedDigraph g2 = build_g2(c);
    CHECK(brute_force_opt(g2).weight == frac(5, 2));

    // bias sets are exactly {c/(c+1), 1/2, 1/(c+1)}
    for (const WeightedDigraph* g : {&g1, &g2}) {
        BiasProfile p = biases(*g);
        for (const Rat& b : p.bias)
            CHECK((b == frac(5, 9) || b == frac(1, 2) || b == frac(4, 9)));
    }
    CHECK_THROWS_AS(build_g1(Rat(1)), std::domain_error);
    CHECK_THROWS_AS(build_g2(frac(1, 2)), std::domain_error);

    // other c values validate as well
    build_g1(frac(3, 2));
    build_g2(Rat(2));
}

TEST_CASE("combined gadget: vertices, optimum, additivity") {
    WeightedDigraph g = build_combined(frac(5, 4), 1, 3);
    CHECK(g.vertex_count() == 18);
    CHECK(combined_opt(frac(5, 4), 1, 3) == frac(85, 8));
    CHECK(brute_force_opt(g).weight == frac(85, 8));
}

TEST_CASE("combined ratio formula at c = 5/4 is (213+372a-288a^2)/680") {
    Rat c = frac(5, 4);
    for (int k = 0; k <= 1000; ++k) {
        Rat a = frac(k, 1000);
        CHECK(combined_ratio_formula(c, a) == (213 + 372 * a - 288 * a * a) / 680);
    }
    CHECK(combined_ratio_argmax(c) == frac(31, 48));
    CHECK(combined_ratio_formula(c, frac(31, 48)) == frac(533, 1088));
}

TEST_CASE("formula equals the explicit graph evaluation") {
    Rat c = frac(5, 4);
    WeightedDigraph g = build_combined(c, 1, 3);
    for (int k = 0; k <= 40; ++k) {
        Rat a = frac(k, 40);
        StepFunction f = gadget_step_function(c, a);
        CHECK(is_antisymmetric(f));
        CHECK(expected_cut_weight(g, f) / combined_opt(c, 1, 3) ==
              combined_ratio_formula(c, a));
    }
}

TEST_CASE("tight examples") {
    WeightedDigraph t38 = tight_example_38();
    CHECK(expected_cut_weight(t38, make_f_delta(frac(1, 3))) / brute_force_opt(t38).weight ==
          frac(3, 8));

    Rat eps = frac(1, 100);
    WeightedDigraph t25 = tight_example_25(eps);
    CHECK(brute_force_opt(t25).weight == 5);
    CHECK(expected_cut_weight(t25, make_uniform()) == 2 + eps / 4);

    WeightedDigraph cyc = even_cycle(4);
    CHECK(brute_force_opt(cyc).weight == 4);
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        StepFunction f = testutil::random_antisymmetric_stepfn(rng);
        CHECK(expected_cut_weight(cyc, f) / brute_force_opt(cyc).weight == even_cycle_ratio(f));
        CHECK(even_cycle_ratio(f) == frac(1, 2));  // antisymmetric: f(1/2) = 1/2
    }
}

TEST_CASE("even-cycle ratio formula 1/2 - 2 delta^2") {
    StepFunction f6 = StepFunction::constant(frac(6, 10));
    CHECK(even_cycle_ratio(f6) == frac(48, 100));
    CHECK(even_cycle_ratio(StepFunction::constant(Rat(1))) == 0);
    // exact identity against the graph for a non-antisymmetric function
    WeightedDigraph cyc = even_cycle(5);
    CHECK(expected_cut_weight(cyc, f6) / brute_force_opt(cyc).weight == even_cycle_ratio(f6));
}

TEST_CASE("nonsymmetric bound caps every sampled function below 1/2") {
    Rat c = frac(5, 4);
    // antisymmetric functions: cycle term is exactly 1/2, gadget term bites
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        StepFunction f = testutil::random_antisymmetric_stepfn(rng);
        Rat b = nonsymmetric_bound(f, c, 1, 3);
        CHECK(b <= frac(533, 1088));
    }
    CHECK(nonsymmetric_bound(StepFunction::constant(frac(6, 10)), c, 1, 3) <= frac(48, 100));
    CHECK(nonsymmetric_bound(StepFunction::constant(Rat(1)), c, 1, 3) == 0);
}

TEST_CASE("LP worst case is never better than the explicit gadget") {
    Rat c = frac(5, 4);
    Rng rng(13);
    for (int i = 0; i < 6; ++i) {
        StepFunction f = testutil::random_antisymmetric_stepfn(rng, 2);
        RatioCertificate rc = approximation_ratio(f);
        Rat gadget = expected_cut_weight(build_combined(c, 1, 3), f) / combined_opt(c, 1, 3);
        CHECK(rc.upper <= gadget);
    }
}
