#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dicut/errors.hpp"
#include "dicut/twoand.hpp"
#include "testutil.hpp"

using namespace dicut;

namespace {

// {x&y, !x&y, x&!y, !x&!y}, unit weights
TwoAndInstance four_clause() {
    return TwoAndInstance(2, {
                                 {{0, true}, {1, true}, Rat(1)},
                                 {{0, false}, {1, true}, Rat(1)},
                                 {{0, true}, {1, false}, Rat(1)},
                                 {{0, false}, {1, false}, Rat(1)},
                             });
}

}  // namespace

TEST_CASE("assignment weight") {
    TwoAndInstance inst = four_clause();
    for (int mask = 0; mask < 4; ++mask) {
        Assignment a = {static_cast<char>(mask & 1), static_cast<char>(mask >> 1 & 1)};
        CHECK(assignment_weight(inst, a) == 1);  // exactly one clause fires
    }
    CHECK(assignment_weight(TwoAndInstance(2, {}), {0, 1}) == 0);

    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        TwoAndInstance r = testutil::random_twoand(rng);
        Assignment a(r.variable_count());
        for (auto& v : a) v = rng.next_bernoulli(0.5);
        Rat expect = 0;
        for (const Clause& c : r.clauses()) {
            bool ok_a = static_cast<bool>(a[c.a.var]) == c.a.positive;
            bool ok_b = static_cast<bool>(a[c.b.var]) == c.b.positive;
            if (ok_a && ok_b) expect += c.weight;
        }
        CHECK(assignment_weight(r, a) == expect);
    }
}

TEST_CASE("variable bias") {
    TwoAndInstance eq(3, {{{0, true}, {1, true}, Rat(2)}, {{0, false}, {2, true}, Rat(2)}});
    CHECK(variable_bias(eq, 0) == frac(1, 2));

    TwoAndInstance skew(2, {{{0, true}, {1, true}, Rat(3)}, {{0, false}, {1, true}, Rat(1)}});
    CHECK(variable_bias(skew, 0) == frac(3, 4));

    TwoAndInstance pos(2, {{{0, true}, {1, true}, Rat(5)}});
    CHECK(variable_bias(pos, 0) == 1);

    TwoAndInstance lonely(3, {{{0, true}, {1, true}, Rat(1)}});
    CHECK(variable_bias(lonely, 2) == frac(1, 2));
}

TEST_CASE("clauses on one variable are rejected") {
    CHECK_THROWS_AS(TwoAndInstance(2, {{{0, true}, {0, false}, Rat(1)}}), parse_error);
    CHECK_THROWS_AS(TwoAndInstance(2, {{{1, true}, {1, true}, Rat(1)}}), parse_error);
}

TEST_CASE("reduction: 4-clause example has assignment optimum 1, cut optimum 2") {
    TwoAndInstance inst = four_clause();
    Reduction r = reduce_to_dicut(inst);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.edges().size() == 8);
    for (const Edge& e : r.graph.edges()) CHECK(e.weight == frac(1, 2));

    CHECK(brute_force_best_assignment(inst).weight == 1);
    OptResult opt = brute_force_opt(r.graph);
    CHECK(opt.weight == 2);
    // x and !x together achieve it
    CHECK(cut_weight(r.graph, Cut::of({r.vertex_of({0, true}), r.vertex_of({0, false})})) == 2);
}

TEST_CASE("reduction: single clause x&y") {
    TwoAndInstance inst(2, {{{0, true}, {1, true}, Rat(1)}});
    Reduction r = reduce_to_dicut(inst);
    CHECK(r.graph.edges().size() == 2);
    CHECK(brute_force_opt(r.graph).weight == 1);
    CHECK(brute_force_best_assignment(inst).weight == 1);
}

TEST_CASE("reduction biases equal literal biases") {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        TwoAndInstance inst = testutil::random_twoand(rng);
        Reduction r = reduce_to_dicut(inst);
        BiasProfile bp = biases(r.graph);
        for (int v = 0; v < inst.variable_count(); ++v) {
            Rat b = variable_bias(inst, v);
            CHECK(bp.bias[r.vertex_of({v, true})] == b);
            CHECK(bp.bias[r.vertex_of({v, false})] == 1 - b);
        }
    }
}

TEST_CASE("expected assignment equals expected cut weight for antisymmetric f") {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        TwoAndInstance inst = testutil::random_twoand(rng);
        StepFunction f = testutil::random_antisymmetric_stepfn(rng);
        Reduction r = reduce_to_dicut(inst);
        CHECK(oblivious_expected_assignment(inst, f) == expected_cut_weight(r.graph, f));
    }

    // 4-clause example under uniform: every clause fires with probability 1/4
    CHECK(oblivious_expected_assignment(four_clause(), make_uniform()) == 1);
}

TEST_CASE("expected assignment, fully-biased singleton") {
    TwoAndInstance inst(2, {{{0, true}, {1, true}, Rat(1)}});
    // both variable biases are 1 and f(1) = 1
    StepFunction f = make_f_delta(frac(1, 3));
    CHECK(oblivious_expected_assignment(inst, f) == 1);
}

TEST_CASE("cut optimum dominates assignment optimum") {
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        TwoAndInstance inst = testutil::random_twoand(rng);
        Reduction r = reduce_to_dicut(inst);
        CHECK(brute_force_opt(r.graph).weight >= brute_force_best_assignment(inst).weight);
    }
}

TEST_CASE("consistent and independent sampling agree in expectation") {
    Rng rng(19);
    TwoAndInstance inst = testutil::random_twoand(rng, 5, 8);
    StepFunction f = testutil::random_antisymmetric_stepfn(rng);
    Reduction r = reduce_to_dicut(inst);
    Rat exact = expected_cut_weight(r.graph, f);

    auto mc = [&](bool consistent) {
        const int trials = 60000;
        double sum = 0, sumsq = 0;
        for (int t = 0; t < trials; ++t) {
            Cut c = sample_reduction_cut(inst, f, 1000 + t, consistent);
            double w = rat_d(cut_weight(r.graph, c));
            sum += w;
            sumsq += w * w;
        }
        double mean = sum / trials;
        double var = (sumsq - sum * sum / trials) / trials;
        return std::pair(mean, std::sqrt(std::max(0.0, var) / trials));
    };
    auto [mi, si] = mc(false);
    auto [mcons, scons] = mc(true);
    CHECK(std::abs(mi - rat_d(exact)) <= 4 * si + 1e-9);
    CHECK(std::abs(mcons - rat_d(exact)) <= 4 * scons + 1e-9);
    CHECK(std::abs(mi - mcons) <= 4 * (si + scons) + 1e-9);

    // consistent cuts are valid assignments: never x and !x together
    Cut c = sample_reduction_cut(inst, f, 5, true);
    for (int v = 0; v < inst.variable_count(); ++v) {
        bool pos = std::count(c.selected.begin(), c.selected.end(), r.vertex_of({v, true})) > 0;
        bool neg = std::count(c.selected.begin(), c.selected.end(), r.vertex_of({v, false})) > 0;
        CHECK(pos != neg);
    }
}

TEST_CASE("sample_assignment marginals match f(bias) in both modes") {
    Rng rng(29);
    TwoAndInstance inst = testutil::random_twoand(rng, 4, 6);
    StepFunction f = testutil::random_antisymmetric_stepfn(rng);
    for (bool consistent : {false, true}) {
        const int trials = 40000;
        std::vector<int> count(inst.variable_count(), 0);
        for (int t = 0; t < trials; ++t) {
            Assignment a = sample_assignment(inst, f, 777 + t, consistent);
            for (int v = 0; v < inst.variable_count(); ++v) count[v] += a[v];
        }
        for (int v = 0; v < inst.variable_count(); ++v) {
            double p = rat_d(f.evaluate(variable_bias(inst, v)));
            double se = std::sqrt(std::max(1e-12, p * (1 - p) / trials));
            CHECK(std::abs(count[v] / double(trials) - p) <= 5 * se + 1e-9);
        }
    }
}

TEST_CASE("twoand text round-trip and parse errors") {
    Rng rng(37);
    TwoAndInstance inst = testutil::random_twoand(rng);
    std::ostringstream os;
    write_twoand(os, inst);
    TwoAndInstance back = parse_twoand(os.str());
    CHECK(back.variable_count() == inst.variable_count());
    CHECK(back.total_weight() == inst.total_weight());
    std::ostringstream os2;
    write_twoand(os2, back);
    CHECK(os.str() == os2.str());

    CHECK_THROWS_AS(parse_twoand("twoand v1 2\n+1 +1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_twoand("twoand v1 2\n+1 -0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_twoand("twoand v1 2\nx +2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_twoand("nope\n"), parse_error);
}
