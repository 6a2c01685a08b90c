#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dicut/graph.hpp"
#include "dicut/stepfn.hpp"

namespace dicut {

// A portfolio member: either an oblivious algorithm given by its selection
// function, or the (deterministic, non-oblivious) greedy algorithm.
struct AlgorithmSpec {
    enum class Kind { Oblivious, Greedy };
    Kind kind = Kind::Greedy;
    StepFunction fn = make_uniform();

    static AlgorithmSpec oblivious(StepFunction f) {
        return {Kind::Oblivious, std::move(f)};
    }
    static AlgorithmSpec greedy() { return {}; }
};

struct PortfolioSpec {
    std::vector<AlgorithmSpec> members;
    std::optional<std::vector<Rat>> mix_weights;  // nonnegative, sums to 1
};

// Selects every vertex with bias >= 1/2 (ties select, matching the
// greedy-threshold step function).
Cut greedy_cut(const WeightedDigraph& g);

// Exact expected cut weight of one member: the oblivious expectation, or the
// deterministic greedy cut weight.
Rat member_expected_weight(const WeightedDigraph& g, const AlgorithmSpec& a);

// max over members of the exact expected cut weight
Rat portfolio_maxexp(const WeightedDigraph& g, const PortfolioSpec& p);

// mix-weighted average of the exact expected cut weights
Rat portfolio_mix(const WeightedDigraph& g, const PortfolioSpec& p);

// Monte-Carlo estimate of E[max over members of the sampled cut weight].
// Exact joint enumeration is out of proportion to its role, so expmax is
// always estimated; seed and trials are mandatory. Trials are split into
// `partitions` blocks with derived seeds, so the result is deterministic per
// (seed, trials, partitions) and blocks may run on worker threads.
MonteCarloStats portfolio_expmax(const WeightedDigraph& g, const PortfolioSpec& p,
                                 std::uint64_t seed, std::uint64_t trials, int partitions = 1);

}  // namespace dicut
