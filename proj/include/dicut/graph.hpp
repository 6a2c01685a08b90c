#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dicut/rational.hpp"
#include "dicut/rng.hpp"
#include "dicut/stepfn.hpp"

namespace dicut {

struct Edge {
    int src;
    int dst;
    Rat weight;
    bool operator==(const Edge&) const = default;
};

// Immutable weighted digraph. Parallel edges are kept as-is; self-loops are
// rejected; every weight must be positive.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    Rat total_weight() const;
    bool operator==(const WeightedDigraph&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// The selected side S of a directed cut; sorted unique vertex ids.
struct Cut {
    std::vector<int> selected;

    static Cut of(std::vector<int> ids);
    bool operator==(const Cut&) const = default;
};

struct BiasProfile {
    std::vector<Rat> bias;  // outweight / (outweight + inweight); 1/2 if isolated
    std::vector<Rat> outweight;
    std::vector<Rat> inweight;
};

// Sum of w(u,v) over edges with u in S, v outside S.
Rat cut_weight(const WeightedDigraph& g, const Cut& c);

BiasProfile biases(const WeightedDigraph& g);

// Sum over edges of w * f(bias(u)) * (1 - f(bias(v))); exact.
Rat expected_cut_weight(const WeightedDigraph& g, const StepFunction& f);

// One independent per-vertex selection with probability f(bias(v)).
Cut sample_cut(const WeightedDigraph& g, const StepFunction& f, Rng& rng);

struct MonteCarloStats {
    double mean = 0;
    double std_error = 0;
    std::uint64_t trials = 0;
};

MonteCarloStats monte_carlo_expected_cut(const WeightedDigraph& g, const StepFunction& f,
                                         std::uint64_t trials, std::uint64_t seed);

struct OptResult {
    Cut cut;
    Rat weight;
};

inline constexpr int kDefaultBruteForceLimit = 24;

// Reads OBLIVIOUS_DICUT_MAX_BRUTE, falling back to the default limit.
int brute_force_limit();

// Exhaustive maximum over all 2^|V| subsets; deterministic tie break by the
// numerically smallest selected-set bitmask (bit i = vertex i).
OptResult brute_force_opt(const WeightedDigraph& g, int limit = brute_force_limit());

WeightedDigraph invert(const WeightedDigraph& g);

// Disjoint union with per-component weight scaling.
WeightedDigraph disjoint_union(const std::vector<WeightedDigraph>& gs,
                               const std::vector<Rat>& scales);

WeightedDigraph replicate(const WeightedDigraph& g, int copies);

struct ExpandLimits {
    long max_m = 10000;
    long max_edges = 1000000;
};

struct ExpandResult {
    WeightedDigraph graph;  // unit weights, m * vertex_count vertices
    Int m;                  // lcm of denominators after max-weight normalization
    // The normalized graph with integer weights w_e = m * (w / max_weight);
    // biases match the input and the expansion scales its expected cut weight
    // by exactly m.
    WeightedDigraph integer_graph;
};

// Appendix-style blow-up to a 0/1-weight graph: edge (u,v) of integer weight
// w becomes the circulant w-regular bipartite digraph between the m copies of
// u and of v (copy j of u points to copies j..j+w-1 mod m of v).
ExpandResult expand_to_unweighted(const WeightedDigraph& g, const ExpandLimits& limits = {});

// Text format "dicut-graph v1": header then one "src dst weight" line per
// edge; weights round-trip bit-exactly as canonical rationals.
WeightedDigraph read_graph(std::istream& in);
WeightedDigraph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const WeightedDigraph& g);
std::string graph_text(const WeightedDigraph& g);
WeightedDigraph load_graph_file(const std::string& path);

}  // namespace dicut
