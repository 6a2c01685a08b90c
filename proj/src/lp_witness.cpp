#include <algorithm>
#include <vector>

#include "dicut/errors.hpp"
#include "dicut/lp.hpp"

namespace dicut {

namespace {

// Bias values inside [lo, hi] at which the step function does not equal the
// class probability: the interval endpoints plus any isolated point values
// falling inside. A vertex sitting on one must be nudged off it.
struct BadPoints {
    std::vector<Rat> points;  // sorted

    bool contains(const Rat& x) const {
        return std::binary_search(points.begin(), points.end(), x);
    }
    // smallest bad point strictly above x, else hi_default
    Rat next_above(const Rat& x, const Rat& hi_default) const {
        auto it = std::upper_bound(points.begin(), points.end(), x);
        return it == points.end() ? hi_default : std::min(*it, hi_default);
    }
    Rat next_below(const Rat& x, const Rat& lo_default) const {
        auto it = std::lower_bound(points.begin(), points.end(), x);
        if (it == points.begin()) return lo_default;
        return std::max(*std::prev(it), lo_default);
    }
};

}  // namespace

Witness extract_witness(const LpModel& m, const std::vector<Rat>& exact_primal,
                        const Rat& epsilon_scale) {
    if (static_cast<int>(exact_primal.size()) != m.var_count())
        throw certificate_error("witness extraction needs the exact primal vector");
    const int sets = m.set_count();
    const int n = m.interval_count();

    // vertex layout: one vertex per live set, two when its self-loop class is
    // split, auxiliary vertex last
    std::vector<Rat> self_loop(sets, Rat(0));
    std::vector<Rat> degree(sets, Rat(0));
    for (int i = 0; i < sets; ++i)
        for (int j = 0; j < sets; ++j) {
            const Rat& e = exact_primal[m.var_index(i, j)];
            if (e == 0) continue;
            degree[i] += e;
            degree[j] += e;
            if (i == j) self_loop[i] = e;
        }

    std::vector<std::vector<int>> reps(sets);
    int next_vertex = 0;
    for (int i = 0; i < sets; ++i) {
        if (degree[i] == 0) continue;  // empty class: no vertex
        reps[i].push_back(next_vertex++);
        if (self_loop[i] > 0) reps[i].push_back(next_vertex++);
    }

    std::vector<Edge> edges;
    for (int i = 0; i < sets; ++i)
        for (int j = 0; j < sets; ++j) {
            const Rat& e = exact_primal[m.var_index(i, j)];
            if (e == 0) continue;
            if (i == j) {
                // split self-loop: both directions at half weight
                edges.push_back({reps[i][0], reps[i][1], e / 2});
                edges.push_back({reps[i][1], reps[i][0], e / 2});
            } else {
                Rat share = e / (static_cast<int>(reps[i].size()) * static_cast<int>(reps[j].size()));
                for (int u : reps[i])
                    for (int v : reps[j]) edges.push_back({u, v, share});
            }
        }

    // per-vertex out/in weight before perturbation
    std::vector<Rat> outw(next_vertex, Rat(0)), inw(next_vertex, Rat(0));
    Rat total = 0;
    for (const Edge& e : edges) {
        outw[e.src] += e.weight;
        inw[e.dst] += e.weight;
        total += e.weight;
    }

    struct Push {
        int vertex;
        bool up;  // raise bias via an outedge to the auxiliary vertex
        Rat target;
    };
    std::vector<Push> pushes;
    for (int i = 0; i < sets; ++i) {
        const IntervalSet& iv = m.set_interval(i);
        if (iv.zero_width()) continue;  // point classes carry the point value
        BadPoints bad;
        bad.points.push_back(iv.lo);
        bad.points.push_back(iv.hi);
        for (int k = 0; k < n; ++k) {
            const IntervalSet& z = m.intervals()[k];
            if (z.zero_width() && z.lo > iv.lo && z.lo < iv.hi) bad.points.push_back(z.lo);
        }
        std::sort(bad.points.begin(), bad.points.end());
        for (int v : reps[i]) {
            Rat t = outw[v] + inw[v];
            Rat bias = outw[v] / t;
            if (!bad.contains(bias)) continue;
            if (bias < iv.hi) {
                // room above: aim halfway to the next bad point
                Rat target = (bias + bad.next_above(bias, iv.hi)) / 2;
                pushes.push_back({v, true, target});
            } else {
                Rat target = (bias + bad.next_below(bias, iv.lo)) / 2;
                pushes.push_back({v, false, target});
            }
        }
    }

    Rat eps_total = 0;
    if (!pushes.empty()) {
        int aux = next_vertex++;
        Rat eps_budget = epsilon_scale * total;
        Rat share = eps_budget / static_cast<int>(pushes.size());
        for (const Push& p : pushes) {
            Rat t = outw[p.vertex] + inw[p.vertex];
            Rat o = outw[p.vertex];
            Rat eps;
            if (p.up) {
                // (o + eps) / (t + eps) = target  (target < 1 by construction)
                eps = (p.target * t - o) / (1 - p.target);
                eps = std::min(eps, share);
                edges.push_back({p.vertex, aux, eps});
            } else {
                // o / (t + eps) = target  (target > 0: down-pushed biases are
                // positive, so the midpoint stays positive)
                eps = o / p.target - t;
                eps = std::min(eps, share);
                edges.push_back({aux, p.vertex, eps});
            }
            eps_total += eps;
        }
    }

    Witness w;
    w.graph = WeightedDigraph(next_vertex, std::move(edges));
    std::vector<int> selected;
    for (int i = 0; i < n; ++i)
        for (int v : reps[i]) selected.push_back(v);
    w.cut = Cut::of(std::move(selected));
    w.epsilon = eps_total;
    return w;
}

Witness extract_witness(const LpModel& m, const LpSolution& s) {
    Certified c = certify(m, s);
    return extract_witness(m, c.primal);
}

}  // namespace dicut
