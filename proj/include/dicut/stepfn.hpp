#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dicut/rational.hpp"

namespace dicut {

// Piecewise-constant selection function on [0,1], stored in canonical form:
// maximal open intervals of constancy plus the effective value at every
// breakpoint. Point values default to the right-hand limit (left-hand at
// x = 1); isolated values such as f(1/2) = 1/2 survive canonicalization.
// Immutable after construction.
class StepFunction {
public:
    // Open interval (lo, hi) on which the function equals value.
    struct Piece {
        Rat lo;
        Rat hi;
        Rat value;
        bool operator==(const Piece&) const = default;
    };

    struct PointValue {
        Rat x;
        Rat value;
        bool operator==(const PointValue&) const = default;
    };

    // breakpoints: 0 = z0 < z1 < ... < z_{m+1} = 1; interval_values: one per
    // open interval; point_values: optional explicit value per breakpoint
    // (index-aligned with breakpoints; empty vector means all defaulted).
    static StepFunction from_partition(std::vector<Rat> breakpoints,
                                       std::vector<Rat> interval_values,
                                       std::vector<std::optional<Rat>> point_values = {});

    // Constant function.
    static StepFunction constant(const Rat& value);

    const Rat& evaluate(const Rat& x) const;
    Rat evaluate_at(double x) const;

    const std::vector<Piece>& pieces() const { return pieces_; }

    // Every breakpoint of the canonical partition (plus interior explicit
    // points) with its effective value. Sorted by x; includes 0 and 1.
    const std::vector<PointValue>& points() const { return points_; }

    // Points whose value differs from both one-sided limits. These are the
    // "counted as two discontinuity points" cases the ratio LP models as
    // zero-width intervals.
    std::vector<PointValue> isolated_points() const;

    // Semantic equality of canonical forms.
    bool operator==(const StepFunction&) const = default;

    // "stepfn v1" serialization of the canonical form; also the fingerprint
    // preimage.
    std::string canonical_text() const;
    std::string fingerprint() const;

private:
    StepFunction() = default;
    std::vector<Piece> pieces_;       // tile (0,1), adjacent values distinct
    std::vector<PointValue> points_;  // all effective breakpoint values
};

// f(x) + f(1-x) = 1: breakpoints must mirror exactly, values within tol.
bool is_antisymmetric(const StepFunction& f, const Rat& tol = 0);

// g(x) = (f(x) + 1 - f(1-x)) / 2; always antisymmetric, fixes antisymmetric
// inputs.
StepFunction antisymmetrize(const StepFunction& f);

// (1 - f(x) - f(1-x)) * (1 - f(y) - f(1-y)) / 2: the per-unit-weight gain of
// antisymmetrize(f) over f on an edge pair with endpoint biases x, y and the
// reversed copy.
Rat antisymmetrize_advantage(const StepFunction& f, const Rat& x, const Rat& y);

StepFunction make_uniform();
// 0 below delta, 1/2 on [delta, 1-delta], 1 above; delta in (0, 1/2).
StepFunction make_f_delta(const Rat& delta);
// steps-step discretization of max{0, min{1, 2(x-1/2)+1/2}}: 0 below 1/4,
// 1 above 3/4, value (i+1/2)/steps on the i-th cell of width 1/(2*steps),
// and the isolated value 1/2 at x = 1/2.
StepFunction make_clamped_linear_discretized(int steps);
// The 100-step function certified to (0.4835, 0.4836].
StepFunction make_paper_0483();
// 0/1 threshold at bias 1/2, selecting at exactly 1/2. Matches the greedy
// algorithm; intentionally not antisymmetric.
StepFunction make_greedy_threshold();

// The discretized-search family: antisymmetric step functions constant on 2n
// width-1/(2n) intervals, lower-half values k/n, f(1/2) = 1/2. Random access
// (index order = lexicographic order of the n free interval values) makes the
// stream restartable and safe to fan out.
class StepFamily {
public:
    explicit StepFamily(int n, int limit = 5);
    int n() const { return n_; }
    std::uint64_t size() const;  // (n+1)^n
    StepFunction at(std::uint64_t index) const;
    // The n free interval values of candidate `index`, most significant first.
    std::vector<int> digits(std::uint64_t index) const;

private:
    int n_;
};

StepFunction read_stepfn(std::istream& in);
StepFunction parse_stepfn(const std::string& text);
void write_stepfn(std::ostream& out, const StepFunction& f);

// CLI-facing resolver: builtin names ("uniform", "greedy-threshold",
// "f-delta:<d>", "paper-0483", "clamped-linear:<k>") or a stepfn v1 file path.
StepFunction resolve_stepfn(const std::string& name_or_path);

}  // namespace dicut
