#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#include "dicut/errors.hpp"
#include "dicut/kernels.hpp"
#include "dicut/lp.hpp"

namespace dicut::detail {

namespace {

// These models are extremely degenerate (almost every right-hand side is
// zero), which strands any pivot rule on huge plateaus. The floating phase
// therefore solves a deterministically perturbed problem; the exact polish
// afterwards re-anchors the returned basis to the true right-hand side.
constexpr double kPerturbScale = 1e-7;

// Dense row-major tableau over the constraint rows plus one reduced-cost row.
// Column layout: structural | slack (one per inequality) | artificial (one
// per equality) | rhs.
struct Tableau {
    int rows = 0;
    int n_struct = 0, n_slack = 0, n_art = 0;
    std::size_t width = 0;  // columns incl. rhs
    std::vector<double> t;  // rows * width
    std::vector<double> obj;
    std::vector<int> basis;
    std::vector<int> slack_col_of_row, art_col_of_row;

    double* row(int r) { return t.data() + static_cast<std::size_t>(r) * width; }
    const double* row(int r) const { return t.data() + static_cast<std::size_t>(r) * width; }
    std::size_t rhs() const { return width - 1; }
    int enterable() const { return n_struct + n_slack; }

    void pivot(int pr, int pc) {
        double* prow = row(pr);
        kernels::scale(prow, 1.0 / prow[pc], width);
        prow[pc] = 1.0;
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            double f = row(r)[pc];
            if (f != 0.0) {
                kernels::axpy_neg(row(r), prow, f, width);
                row(r)[pc] = 0.0;
            }
        }
        double f = obj[pc];
        if (f != 0.0) {
            kernels::axpy_neg(obj.data(), prow, f, width);
            obj[pc] = 0.0;
        }
        basis[pr] = pc;
    }
};

Tableau build_tableau(const StandardLp& lp) {
    Tableau tb;
    tb.rows = lp.rows;
    tb.n_struct = static_cast<int>(lp.cols.size());
    tb.slack_col_of_row.assign(lp.rows, -1);
    tb.art_col_of_row.assign(lp.rows, -1);
    for (int r = 0; r < lp.rows; ++r)
        if (!lp.equality[r]) tb.n_slack++;
    for (int r = 0; r < lp.rows; ++r)
        if (lp.equality[r]) tb.n_art++;
    tb.width = static_cast<std::size_t>(tb.n_struct + tb.n_slack + tb.n_art) + 1;
    tb.t.assign(static_cast<std::size_t>(tb.rows) * tb.width, 0.0);
    tb.obj.assign(tb.width, 0.0);
    tb.basis.assign(tb.rows, -1);

    for (int v = 0; v < tb.n_struct; ++v)
        for (const auto& [r, c] : lp.cols[v]) tb.row(r)[v] = rat_d(c);
    int sc = tb.n_struct, ac = tb.n_struct + tb.n_slack;
    std::mt19937_64 gen(0x0b11C0DE);
    for (int r = 0; r < lp.rows; ++r) {
        if (!lp.equality[r]) {
            tb.slack_col_of_row[r] = sc;
            tb.row(r)[sc] = 1.0;
            tb.basis[r] = sc++;
        } else {
            tb.art_col_of_row[r] = ac;
            tb.row(r)[ac] = 1.0;
            tb.basis[r] = ac++;
        }
        double jitter = kPerturbScale * (1.0 + static_cast<double>(gen() >> 11) * 0x1.0p-53);
        tb.row(r)[tb.rhs()] = rat_d(lp.b[r]) + jitter;
    }
    return tb;
}

// Ratio test: smallest rhs/column ratio over positive column entries, ties
// broken toward the smallest basis index (Bland). Entries below the pivot
// floor are not admissible: accepting a drift-of-zero pivot hands the exact
// layer a singular basis.
constexpr double kPivotFloor = 1e-7;

int pick_leaving(const Tableau& tb, int pc, double tol) {
    int leave = -1;
    double best = 0;
    for (int r = 0; r < tb.rows; ++r) {
        double a = tb.row(r)[pc];
        if (a <= std::max(tol, kPivotFloor)) continue;
        double ratio = std::max(0.0, tb.row(r)[tb.rhs()]) / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && tb.basis[r] < tb.basis[leave])) {
            leave = r;
            best = ratio;
        }
    }
    return leave;
}

struct PhaseResult {
    SolveStatus status = SolveStatus::Optimal;
    std::int64_t iterations = 0;
};

PhaseResult run_phase(Tableau& tb, const SimplexOptions& opts, std::int64_t budget) {
    PhaseResult res;
    const double tol = opts.tol;
    // stall-driven switch for the hybrid rule
    bool bland_mode = opts.rule == PivotRule::Bland;
    int degenerate_run = 0;
    constexpr int kStallSwitch = 500;
    const bool log = std::getenv("DICUT_SIMPLEX_LOG") != nullptr;

    while (res.iterations < budget) {
        if (log && res.iterations % 1000 == 0)
            std::fprintf(stderr, "iter %lld obj %.12g bland %d\n",
                         static_cast<long long>(res.iterations), -tb.obj[tb.rhs()], bland_mode);
        std::size_t scan = static_cast<std::size_t>(tb.enterable());
        std::size_t pc;
        if (bland_mode)
            pc = kernels::find_first_below(tb.obj.data(), scan, -tol);
        else
            pc = kernels::argmin_below(tb.obj.data(), scan, -tol);
        if (pc == kernels::npos) return res;

        int pr = pick_leaving(tb, static_cast<int>(pc), tol);
        if (pr < 0) {
            // The model is bounded, so a failed ratio test is tolerance noise
            // on a near-zero reduced cost. Retire the column; the exact
            // polish re-prices everything afterwards.
            tb.obj[pc] = 0.0;
            continue;
        }

        double before = tb.obj[tb.rhs()];
        tb.pivot(pr, static_cast<int>(pc));
        ++res.iterations;

        if (opts.rule == PivotRule::DantzigBland) {
            if (tb.obj[tb.rhs()] == before) {
                if (++degenerate_run >= kStallSwitch) bland_mode = true;
            } else {
                degenerate_run = 0;
                bland_mode = false;
            }
        }
    }
    res.status = SolveStatus::IterationLimit;
    return res;
}

}  // namespace

StandardSolution solve_standard(const StandardLp& lp, const SimplexOptions& opts) {
    Tableau tb = build_tableau(lp);
    StandardSolution out;

    // Phase 1: minimize the artificial variables of the equality rows.
    // obj_j = -sum over equality rows of row_j; obj_rhs = -(current value).
    for (int r = 0; r < tb.rows; ++r)
        if (tb.art_col_of_row[r] >= 0) kernels::axpy_neg(tb.obj.data(), tb.row(r), 1.0, tb.width);
    PhaseResult p1 = run_phase(tb, opts, opts.max_iterations);
    out.iterations += p1.iterations;
    if (p1.status == SolveStatus::IterationLimit) {
        out.status = SolveStatus::IterationLimit;
        out.basis = tb.basis;
        return out;
    }
    if (-tb.obj[tb.rhs()] > 1e-6 + 4 * kPerturbScale * tb.rows) {
        out.status = SolveStatus::Infeasible;
        out.basis = tb.basis;
        return out;
    }

    // Degenerate pivots push leftover basic artificials out of the basis
    // where possible; redundant rows keep theirs at zero.
    for (int r = 0; r < tb.rows; ++r) {
        if (tb.basis[r] < tb.enterable()) continue;
        int best = -1;
        double mag = kPivotFloor;
        for (int j = 0; j < tb.enterable(); ++j) {
            double a = std::abs(tb.row(r)[j]);
            if (a > mag) {
                mag = a;
                best = j;
            }
        }
        if (best >= 0) tb.pivot(r, best);
    }

    // Phase 2 objective from the structural costs and the current basis.
    std::fill(tb.obj.begin(), tb.obj.end(), 0.0);
    for (int v = 0; v < tb.n_struct; ++v) tb.obj[v] = rat_d(lp.cost[v]);
    for (int r = 0; r < tb.rows; ++r) {
        int b = tb.basis[r];
        double cb = b < tb.n_struct ? rat_d(lp.cost[b]) : 0.0;
        if (cb != 0.0) kernels::axpy_neg(tb.obj.data(), tb.row(r), cb, tb.width);
    }
    PhaseResult p2 = run_phase(tb, opts, opts.max_iterations - out.iterations);
    out.iterations += p2.iterations;
    out.status = p2.status;
    out.basis = tb.basis;
    out.objective = -tb.obj[tb.rhs()];
    return out;
}

}  // namespace dicut::detail
