#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dicut/graph.hpp"
#include "dicut/rational.hpp"
#include "dicut/stepfn.hpp"

namespace dicut {

// One vertex class of the factor-revealing LP: vertices with bias in
// [lo, hi], selected with probability prob. Zero-width classes (lo == hi)
// carry isolated point values.
struct IntervalSet {
    Rat lo;
    Rat hi;
    Rat prob;
    bool zero_width() const { return lo == hi; }
    bool operator==(const IntervalSet&) const = default;
};

struct LpRow {
    enum class Kind {
        CutWeight,   // sum of cut variables = 1
        BiasLower,   // lo * degree - out <= 0
        BiasUpper,   // out - hi * degree <= 0
        BiasPoint,   // out - x * degree = 0 (zero-width class)
    };
    Kind kind;
    int set = -1;

    bool equality() const { return kind == Kind::CutWeight || kind == Kind::BiasPoint; }
    bool operator==(const LpRow&) const = default;
};

// Theorem-5 model for a step function with n interval classes: sets 0..n-1
// are inside the optimal cut S, sets n..2n-1 outside, with matching
// selection probabilities. Variables e(i,j) for all ordered set pairs carry
// the edge weight from set i to set j; e(i,i) counts twice in the degree.
class LpModel {
public:
    static LpModel build(const StepFunction& f);
    // Testing hook: build directly from interval classes.
    static LpModel from_intervals(std::vector<IntervalSet> intervals);

    int interval_count() const { return static_cast<int>(intervals_.size()); }
    int set_count() const { return 2 * interval_count(); }
    int var_count() const { return set_count() * set_count(); }
    int row_count() const { return static_cast<int>(rows_.size()); }

    const std::vector<IntervalSet>& intervals() const { return intervals_; }
    const std::vector<LpRow>& rows() const { return rows_; }

    int var_index(int from_set, int to_set) const { return from_set * set_count() + to_set; }
    std::pair<int, int> var_sets(int var) const { return {var / set_count(), var % set_count()}; }

    const IntervalSet& set_interval(int set) const { return intervals_[set % interval_count()]; }
    const Rat& set_prob(int set) const { return intervals_[set % interval_count()].prob; }

    bool is_cut_var(int var) const {
        auto [i, j] = var_sets(var);
        return i < interval_count() && j >= interval_count();
    }
    // p_i * (1 - p_j)
    Rat objective_coeff(int var) const;
    // sparse row coefficients of one variable column
    std::vector<std::pair<int, Rat>> column(int var) const;
    Rat rhs(int row) const { return rows_[row].kind == LpRow::Kind::CutWeight ? Rat(1) : Rat(0); }

    bool operator==(const LpModel&) const = default;

private:
    std::vector<IntervalSet> intervals_;
    std::vector<LpRow> rows_;
};

enum class SolveStatus { Optimal, Infeasible, IterationLimit };

enum class PivotRule {
    Bland,         // first negative reduced cost; never cycles
    Dantzig,       // most negative reduced cost
    DantzigBland,  // Dantzig, falling back to Bland on long degenerate stalls
};

// The default rule is the hybrid: Dantzig pricing for speed, Bland as the
// anti-cycling device on degenerate stalls. Pure Bland from the first pivot
// is available but needs one to two orders of magnitude more iterations on
// these highly degenerate models.
struct SimplexOptions {
    PivotRule rule = PivotRule::DantzigBland;
    double tol = 1e-9;
    std::int64_t max_iterations = 500000;
    // exact Bland pivots allowed when polishing the floating basis
    int max_polish_pivots = 2000;
};

struct LpSolution {
    SolveStatus status = SolveStatus::IterationLimit;
    double objective = 0;               // floating view of the optimum
    std::vector<double> primal;         // e values, floating view
    std::vector<double> dual;           // per model row, floating view
    std::vector<int> basis;             // standard-form basis, one column per row
    std::int64_t iterations = 0;
    std::int64_t polish_pivots = 0;     // exact pivots applied after the floating phase
};

// Deterministic dense-tableau simplex (two phases, exact rational polish of
// the final basis). Throws solver_error on a singular basis.
LpSolution solve(const LpModel& m, const SimplexOptions& opts = {});

struct Certified {
    Rat lower;                // dual objective: valid lower bound on the ratio
    Rat upper;                // primal objective: valid upper bound
    std::vector<Rat> primal;  // exact e values
    std::vector<Rat> dual;    // exact dual values per model row
};

// Recomputes both objectives in exact arithmetic from the returned basis and
// verifies primal and dual feasibility; throws certificate_error otherwise.
Certified certify(const LpModel& m, const LpSolution& s);

// Verifies an explicit primal/dual pair exactly (no basis needed). Used by
// the symmetry-reduced path and by tamper tests.
Certified certify_values(const LpModel& m, const std::vector<Rat>& primal,
                         const std::vector<Rat>& dual);

struct Witness {
    WeightedDigraph graph;
    Cut cut;       // the designated optimal side S
    Rat epsilon;   // total weight of the auxiliary perturbation edges
};

// Appendix-B reconstruction: one vertex per set with edge weights e(i,j),
// self-loop classes split into two half-weight vertices, plus one auxiliary
// vertex whose epsilon-weight edges push boundary biases strictly into their
// intervals.
Witness extract_witness(const LpModel& m, const std::vector<Rat>& exact_primal,
                        const Rat& epsilon_scale = frac(1, 1000000));
Witness extract_witness(const LpModel& m, const LpSolution& s);

struct RatioCertificate {
    std::string fingerprint;  // hash of the canonical step-function text
    Rat value;                // exact LP optimum
    Rat lower;                // certified interval
    Rat upper;
    double lp_value = 0;      // floating view of value
    WeightedDigraph witness;
    Cut witness_cut;
    Rat epsilon;
    std::vector<Rat> dual;
};

struct RatioOptions {
    SimplexOptions simplex;
    bool sym_reduce = false;  // fold the model by reversal symmetry (antisymmetric f only)
    Rat epsilon_scale = frac(1, 1000000);
};

// build_lp + solve + certify + extract_witness.
RatioCertificate approximation_ratio(const StepFunction& f, const RatioOptions& opts = {});

// "ratio-cert v1" file format.
void write_certificate(std::ostream& out, const RatioCertificate& c);
RatioCertificate read_certificate(std::istream& in);

namespace detail {

// Standard-form data shared by the full and symmetry-reduced solve paths.
struct StandardLp {
    int rows = 0;
    std::vector<char> equality;
    std::vector<Rat> b;
    std::vector<Rat> cost;
    std::vector<std::vector<std::pair<int, Rat>>> cols;
};

StandardLp to_standard(const LpModel& m);

struct StandardSolution {
    SolveStatus status = SolveStatus::IterationLimit;
    std::vector<int> basis;
    std::int64_t iterations = 0;
    double objective = 0;
};

// Floating two-phase simplex on the dense tableau.
StandardSolution solve_standard(const StandardLp& lp, const SimplexOptions& opts);

// Exact Bland pivots from the floating basis until the basis is exactly
// optimal. Returns the pivot count.
int exact_polish(const StandardLp& lp, std::vector<int>& basis, int max_pivots);

// Exact basic solution and duals for a (possibly non-optimal) basis.
struct ExactBasic {
    std::vector<Rat> x;  // structural values
    std::vector<Rat> y;  // per row
};
ExactBasic exact_basic_solution(const StandardLp& lp, const std::vector<int>& basis);

// Symmetry-reduced model: variables folded over the reversal orbit map.
struct ReducedLp {
    StandardLp lp;
    std::vector<int> orbit_of_var;   // full var -> reduced column
    std::vector<int> orbit_of_row;   // full row -> reduced row
};
ReducedLp reduce_by_reversal(const LpModel& m);

}  // namespace detail

}  // namespace dicut
