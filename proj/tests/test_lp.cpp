#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dicut/bounds.hpp"
#include "dicut/errors.hpp"
#include "dicut/lp.hpp"
#include "testutil.hpp"

using namespace dicut;

TEST_CASE("model shape: uniform") {
    LpModel m = LpModel::build(make_uniform());
    CHECK(m.interval_count() == 1);
    CHECK(m.set_count() == 2);
    CHECK(m.var_count() == 4);
    CHECK(m.row_count() == 5);  // cut + 2 bias rows per set
    for (int v = 0; v < m.var_count(); ++v) CHECK(m.objective_coeff(v) == frac(1, 4));
}

TEST_CASE("model shape: f_{1/3} has 6 sets, 36 variables, 13 rows") {
    LpModel m = LpModel::build(make_f_delta(frac(1, 3)));
    CHECK(m.interval_count() == 3);
    CHECK(m.var_count() == 36);
    CHECK(m.row_count() == 13);
    // matched probabilities across the S / not-S halves
    for (int i = 0; i < m.interval_count(); ++i)
        CHECK(m.set_prob(i) == m.set_prob(i + m.interval_count()));
    for (int v = 0; v < m.var_count(); ++v) {
        Rat c = m.objective_coeff(v);
        CHECK(c >= 0);
        CHECK(c <= 1);
    }
}

TEST_CASE("model shape: zero-width interval for the isolated point of paper_0483") {
    LpModel m = LpModel::build(make_paper_0483());
    CHECK(m.interval_count() == 103);  // 102 pieces + the isolated 1/2
    int point_rows = 0;
    for (const LpRow& r : m.rows())
        if (r.kind == LpRow::Kind::BiasPoint) ++point_rows;
    CHECK(point_rows == 2);
    CHECK(m.row_count() == 1 + 2 * (2 * 102) + 2);
}

TEST_CASE("build_lp is invariant under redundant breakpoints") {
    StepFunction plain = make_uniform();
    StepFunction redundant = StepFunction::from_partition(
        {Rat(0), frac(2, 5), Rat(1)}, {frac(1, 2), frac(1, 2)});
    CHECK(LpModel::build(plain) == LpModel::build(redundant));
}

TEST_CASE("uniform certifies to exactly 1/4") {
    LpModel m = LpModel::build(make_uniform());
    LpSolution s = solve(m);
    REQUIRE(s.status == SolveStatus::Optimal);
    CHECK(s.objective == doctest::Approx(0.25).epsilon(1e-9));
    Certified c = certify(m, s);
    CHECK(c.lower == frac(1, 4));
    CHECK(c.upper == frac(1, 4));
}

TEST_CASE("f_{1/3} certifies to exactly 3/8") {
    LpModel m = LpModel::build(make_f_delta(frac(1, 3)));
    LpSolution s = solve(m);
    REQUIRE(s.status == SolveStatus::Optimal);
    CHECK(s.objective == doctest::Approx(0.375).epsilon(1e-6));
    Certified c = certify(m, s);
    CHECK(c.lower == frac(3, 8));
    CHECK(c.upper == frac(3, 8));
}

TEST_CASE("hand-built infeasible model reports infeasible") {
    // a single zero-width class at bias 0 forces every out-edge weight to 0,
    // contradicting cut weight 1
    LpModel m = LpModel::from_intervals({{Rat(0), Rat(0), Rat(0)}});
    LpSolution s = solve(m);
    CHECK(s.status == SolveStatus::Infeasible);
    CHECK_THROWS_AS(certify(m, s), certificate_error);
}

TEST_CASE("pivot rules agree on the certified value") {
    for (PivotRule rule : {PivotRule::Bland, PivotRule::Dantzig, PivotRule::DantzigBland}) {
        SimplexOptions opts;
        opts.rule = rule;
        LpModel m = LpModel::build(make_f_delta(frac(2, 5)));
        LpSolution s = solve(m, opts);
        REQUIRE(s.status == SolveStatus::Optimal);
        Certified c = certify(m, s);
        CHECK(c.lower == c.upper);
        CHECK(c.lower > frac(1, 4));
    }
}

TEST_CASE("certify rejects tampered dual vectors") {
    LpModel m = LpModel::build(make_f_delta(frac(1, 3)));
    LpSolution s = solve(m);
    Certified c = certify(m, s);

    auto bad_dual = c.dual;
    bad_dual[0] += frac(1, 7);
    CHECK_THROWS_AS(certify_values(m, c.primal, bad_dual), certificate_error);

    auto bad_primal = c.primal;
    bad_primal[1] -= 10;
    CHECK_THROWS_AS(certify_values(m, bad_primal, c.dual), certificate_error);

    // the genuine pair passes and reproduces the interval
    Certified again = certify_values(m, c.primal, c.dual);
    CHECK(again.lower == c.lower);
    CHECK(again.upper == c.upper);

    auto bad_basis = s;
    bad_basis.basis[0] = bad_basis.basis[1];
    CHECK_THROWS_AS(certify(m, bad_basis), certificate_error);
}

TEST_CASE("witness: uniform gives the single-edge graph") {
    LpModel m = LpModel::build(make_uniform());
    LpSolution s = solve(m);
    Witness w = extract_witness(m, s);
    // one live class per side plus the boundary-pushing vertex
    CHECK(w.graph.vertex_count() <= 3);
    CHECK(w.epsilon > 0);
    Rat e = expected_cut_weight(w.graph, make_uniform());
    Rat opt = brute_force_opt(w.graph).weight;
    CHECK(e / opt <= frac(1, 4) + 10 * w.epsilon);
}

TEST_CASE("witness: f_{1/3} achieves the certified ratio") {
    StepFunction f = make_f_delta(frac(1, 3));
    LpModel m = LpModel::build(f);
    LpSolution s = solve(m);
    Certified c = certify(m, s);
    Witness w = extract_witness(m, c.primal);
    CHECK(w.graph.vertex_count() <= 13);
    Rat e = expected_cut_weight(w.graph, f);
    Rat opt = brute_force_opt(w.graph).weight;
    CHECK(opt >= 1);
    CHECK(e / opt <= c.upper + 10 * w.epsilon);
    // no vertex may sit on a class boundary where f deviates from the class
    // probability; biases must be consistent with the designated cut's sets
    CHECK(cut_weight(w.graph, w.cut) >= 1);
}

TEST_CASE("witness without self-loops keeps one vertex per class") {
    LpModel m = LpModel::build(make_f_delta(frac(1, 3)));
    LpSolution s = solve(m);
    Certified c = certify(m, s);
    bool any_self = false;
    for (int i = 0; i < m.set_count(); ++i)
        if (c.primal[m.var_index(i, i)] != 0) any_self = true;
    Witness w = extract_witness(m, c.primal);
    if (!any_self) CHECK(w.graph.vertex_count() <= m.set_count() + 1);
}

TEST_CASE("approximation_ratio composes and matches on random antisymmetric functions") {
    Rng rng(97);
    for (int i = 0; i < 12; ++i) {
        StepFunction f = testutil::random_antisymmetric_stepfn(rng, 2);
        RatioCertificate rc = approximation_ratio(f);
        CHECK(rc.lower == rc.upper);
        CHECK(rc.lower >= 0);
        CHECK(rc.upper <= frac(1, 2));
        // soundness on sampled graphs: no graph dips below the certified lower
        for (int j = 0; j < 10; ++j) {
            WeightedDigraph g = testutil::random_graph(rng, 6);
            Rat opt = brute_force_opt(g).weight;
            if (opt == 0) continue;
            CHECK(expected_cut_weight(g, f) / opt >= rc.lower);
        }
        Rat ew = expected_cut_weight(rc.witness, f);
        CHECK(ew <= rc.upper + rc.epsilon);
    }
}

TEST_CASE("symmetry reduction cross-validates against the full model") {
    for (const StepFunction& f :
         {make_uniform(), make_f_delta(frac(1, 3)), make_f_delta(frac(2, 5)),
          make_clamped_linear_discretized(4)}) {
        RatioOptions plain, reduced;
        reduced.sym_reduce = true;
        RatioCertificate a = approximation_ratio(f, plain);
        RatioCertificate b = approximation_ratio(f, reduced);
        CHECK(a.lower == b.lower);
        CHECK(a.upper == b.upper);
    }
    Rng rng(101);
    for (int i = 0; i < 6; ++i) {
        StepFunction f = testutil::random_antisymmetric_stepfn(rng, 2);
        RatioOptions reduced;
        reduced.sym_reduce = true;
        CHECK(approximation_ratio(f).upper == approximation_ratio(f, reduced).upper);
    }
}

TEST_CASE("symmetry reduction rejects asymmetric models") {
    RatioOptions reduced;
    reduced.sym_reduce = true;
    // complementary interval probabilities fail: 4/5 + 4/5 != 1
    CHECK_THROWS_AS(approximation_ratio(StepFunction::constant(frac(4, 5)), reduced),
                    std::invalid_argument);
    // mirrored breakpoints fail
    StepFunction lopsided = StepFunction::from_partition(
        {Rat(0), frac(1, 5), Rat(1)}, {Rat(0), frac(5, 8)});
    CHECK_THROWS_AS(approximation_ratio(lopsided, reduced), std::invalid_argument);
}

TEST_CASE("reversed-role model yields the same value for antisymmetric f") {
    // solving the model of f and of its reversal-composed twin: for an
    // antisymmetric f the twin is f itself, so this checks the reduction's
    // premise directly through expected values on reversed graphs
    Rng rng(103);
    StepFunction f = testutil::random_antisymmetric_stepfn(rng, 2);
    RatioCertificate rc = approximation_ratio(f);
    CHECK(expected_cut_weight(invert(rc.witness), f) == expected_cut_weight(rc.witness, f));
}

TEST_CASE("certificate file round-trip") {
    RatioCertificate rc = approximation_ratio(make_f_delta(frac(1, 3)));
    std::ostringstream os;
    write_certificate(os, rc);
    std::istringstream is(os.str());
    RatioCertificate back = read_certificate(is);
    CHECK(back.fingerprint == rc.fingerprint);
    CHECK(back.lower == rc.lower);
    CHECK(back.upper == rc.upper);
    CHECK(back.witness == rc.witness);
    CHECK(back.witness_cut == rc.witness_cut);
    CHECK(back.dual == rc.dual);

    // determinism: the serialized certificate is byte-identical across runs
    RatioCertificate rc2 = approximation_ratio(make_f_delta(frac(1, 3)));
    std::ostringstream os2;
    write_certificate(os2, rc2);
    CHECK(os.str() == os2.str());
}
