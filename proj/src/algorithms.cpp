#include "dicut/algorithms.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace dicut {

Cut greedy_cut(const WeightedDigraph& g) {
    BiasProfile p = biases(g);
    std::vector<int> ids;
    Rat half = frac(1, 2);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (p.bias[v] >= half) ids.push_back(v);
    return Cut{std::move(ids)};
}

Rat member_expected_weight(const WeightedDigraph& g, const AlgorithmSpec& a) {
    if (a.kind == AlgorithmSpec::Kind::Greedy) return cut_weight(g, greedy_cut(g));
    return expected_cut_weight(g, a.fn);
}

Rat portfolio_maxexp(const WeightedDigraph& g, const PortfolioSpec& p) {
    if (p.members.empty()) throw std::invalid_argument("empty portfolio");
    Rat best = member_expected_weight(g, p.members[0]);
    for (std::size_t i = 1; i < p.members.size(); ++i)
        best = std::max(best, member_expected_weight(g, p.members[i]));
    return best;
}

Rat portfolio_mix(const WeightedDigraph& g, const PortfolioSpec& p) {
    if (!p.mix_weights) throw std::invalid_argument("mix requires mix weights");
    if (p.mix_weights->size() != p.members.size())
        throw std::invalid_argument("mix weights must match members");
    Rat sum = 0;
    for (const Rat& w : *p.mix_weights) {
        if (w < 0) throw std::invalid_argument("mix weights must be nonnegative");
        sum += w;
    }
    if (sum != 1) throw std::invalid_argument("mix weights must sum to 1");
    Rat e = 0;
    for (std::size_t i = 0; i < p.members.size(); ++i)
        e += (*p.mix_weights)[i] * member_expected_weight(g, p.members[i]);
    return e;
}

namespace {

struct Block {
    double sum = 0;
    double sumsq = 0;
};

Block run_block(const WeightedDigraph& g, const PortfolioSpec& p,
                const std::vector<std::vector<double>>& member_prob, double greedy_weight,
                const std::vector<double>& edge_weight, std::uint64_t seed, std::uint64_t trials) {
    Rng rng(seed);
    std::vector<char> in_s(g.vertex_count());
    Block b;
    for (std::uint64_t t = 0; t < trials; ++t) {
        double best = 0;
        for (std::size_t m = 0; m < p.members.size(); ++m) {
            double w;
            if (p.members[m].kind == AlgorithmSpec::Kind::Greedy) {
                w = greedy_weight;
            } else {
                const auto& prob = member_prob[m];
                for (int v = 0; v < g.vertex_count(); ++v)
                    in_s[v] = rng.next_bernoulli(prob[v]);
                w = 0;
                for (std::size_t i = 0; i < g.edges().size(); ++i)
                    if (in_s[g.edges()[i].src] && !in_s[g.edges()[i].dst]) w += edge_weight[i];
            }
            if (m == 0 || w > best) best = w;
        }
        b.sum += best;
        b.sumsq += best * best;
    }
    return b;
}

}  // namespace

MonteCarloStats portfolio_expmax(const WeightedDigraph& g, const PortfolioSpec& p,
                                 std::uint64_t seed, std::uint64_t trials, int partitions) {
    if (p.members.empty()) throw std::invalid_argument("empty portfolio");
    if (trials == 0 || partitions < 1) throw std::invalid_argument("need trials and partitions");

    BiasProfile bp = biases(g);
    std::vector<std::vector<double>> member_prob(p.members.size());
    for (std::size_t m = 0; m < p.members.size(); ++m) {
        if (p.members[m].kind == AlgorithmSpec::Kind::Greedy) continue;
        member_prob[m].resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            member_prob[m][v] = rat_d(p.members[m].fn.evaluate(bp.bias[v]));
    }
    double greedy_weight = rat_d(cut_weight(g, greedy_cut(g)));
    std::vector<double> edge_weight(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) edge_weight[i] = rat_d(g.edges()[i].weight);

    std::vector<std::future<Block>> futs;
    std::uint64_t base = trials / partitions, extra = trials % partitions;
    for (int k = 0; k < partitions; ++k) {
        std::uint64_t t = base + (static_cast<std::uint64_t>(k) < extra ? 1 : 0);
        futs.push_back(std::async(std::launch::async, run_block, std::cref(g), std::cref(p),
                                  std::cref(member_prob), greedy_weight, std::cref(edge_weight),
                                  seed + static_cast<std::uint64_t>(k), t));
    }
    Block total;
    for (auto& f : futs) {
        Block b = f.get();
        total.sum += b.sum;
        total.sumsq += b.sumsq;
    }
    MonteCarloStats s;
    s.trials = trials;
    s.mean = total.sum / static_cast<double>(trials);
    double var = (total.sumsq - total.sum * total.sum / static_cast<double>(trials)) /
                 static_cast<double>(trials);
    s.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
    return s;
}

}  // namespace dicut
