#include "dicut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dicut/errors.hpp"

namespace dicut {

WeightedDigraph::WeightedDigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0) throw parse_error("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.src >= vertex_count_ || e.dst < 0 || e.dst >= vertex_count_)
            throw parse_error("edge endpoint out of range: " + std::to_string(e.src) + "->" +
                              std::to_string(e.dst));
        if (e.src == e.dst) throw parse_error("self-loop at vertex " + std::to_string(e.src));
        if (!(e.weight > 0)) throw parse_error("edge weight must be positive");
    }
}

Rat WeightedDigraph::total_weight() const {
    Rat t = 0;
    for (const Edge& e : edges_) t += e.weight;
    return t;
}

Cut Cut::of(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return Cut{std::move(ids)};
}

namespace {

std::vector<char> side_flags(const WeightedDigraph& g, const Cut& c) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : c.selected) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("cut vertex " + std::to_string(v) + " not in graph");
        in_s[v] = 1;
    }
    return in_s;
}

}  // namespace

Rat cut_weight(const WeightedDigraph& g, const Cut& c) {
    std::vector<char> in_s = side_flags(g, c);
    Rat w = 0;
    for (const Edge& e : g.edges())
        if (in_s[e.src] && !in_s[e.dst]) w += e.weight;
    return w;
}

BiasProfile biases(const WeightedDigraph& g) {
    BiasProfile p;
    p.outweight.assign(g.vertex_count(), Rat(0));
    p.inweight.assign(g.vertex_count(), Rat(0));
    for (const Edge& e : g.edges()) {
        p.outweight[e.src] += e.weight;
        p.inweight[e.dst] += e.weight;
    }
    p.bias.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rat total = p.outweight[v] + p.inweight[v];
        p.bias[v] = total > 0 ? Rat(p.outweight[v] / total) : frac(1, 2);
    }
    return p;
}

Rat expected_cut_weight(const WeightedDigraph& g, const StepFunction& f) {
    if (!(g.total_weight() > 0)) throw zero_weight_error("graph has zero total weight");
    BiasProfile p = biases(g);
    std::vector<Rat> prob(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) prob[v] = f.evaluate(p.bias[v]);
    Rat e = 0;
    for (const Edge& ed : g.edges()) e += ed.weight * prob[ed.src] * (1 - prob[ed.dst]);
    return e;
}

Cut sample_cut(const WeightedDigraph& g, const StepFunction& f, Rng& rng) {
    BiasProfile p = biases(g);
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rng.next_bernoulli(rat_d(f.evaluate(p.bias[v])))) ids.push_back(v);
    return Cut{std::move(ids)};
}

MonteCarloStats monte_carlo_expected_cut(const WeightedDigraph& g, const StepFunction& f,
                                         std::uint64_t trials, std::uint64_t seed) {
    BiasProfile bp = biases(g);
    std::vector<double> prob(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) prob[v] = rat_d(f.evaluate(bp.bias[v]));
    std::vector<double> weight(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) weight[i] = rat_d(g.edges()[i].weight);

    Rng rng(seed);
    std::vector<char> in_s(g.vertex_count());
    double sum = 0, sumsq = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (int v = 0; v < g.vertex_count(); ++v) in_s[v] = rng.next_bernoulli(prob[v]);
        double w = 0;
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            if (in_s[g.edges()[i].src] && !in_s[g.edges()[i].dst]) w += weight[i];
        sum += w;
        sumsq += w * w;
    }
    MonteCarloStats s;
    s.trials = trials;
    s.mean = sum / static_cast<double>(trials);
    double var = (sumsq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials);
    s.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
    return s;
}

int brute_force_limit() {
    if (const char* env = std::getenv("OBLIVIOUS_DICUT_MAX_BRUTE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultBruteForceLimit;
}

namespace {

// Gray-code scan: exactly one vertex flips per step, so the cut weight is
// maintained by a per-flip delta.
template <typename W>
OptResult gray_scan(const WeightedDigraph& g, const std::vector<W>& w) {
    const int n = g.vertex_count();
    struct Inc {
        int other;
        int edge;
        bool out;
    };
    std::vector<std::vector<Inc>> inc(n);
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
        inc[g.edges()[i].src].push_back({g.edges()[i].dst, i, true});
        inc[g.edges()[i].dst].push_back({g.edges()[i].src, i, false});
    }

    std::uint64_t best_mask = 0, mask = 0;
    W best = 0, cur = 0;
    std::vector<char> in_s(n, 0);
    const std::uint64_t end = std::uint64_t(1) << n;
    for (std::uint64_t i = 1; i < end; ++i) {
        int v = __builtin_ctzll(i);
        bool entering = !in_s[v];
        in_s[v] = entering;
        mask ^= std::uint64_t(1) << v;
        for (const Inc& a : inc[v]) {
            // v entering S: its outedges to outside join the cut, inedges
            // from inside leave it; mirrored when v leaves S.
            bool affected = a.out ? !in_s[a.other] : static_cast<bool>(in_s[a.other]);
            if (!affected) continue;
            if (a.out == entering)
                cur += w[a.edge];
            else
                cur -= w[a.edge];
        }
        if (cur > best || (cur == best && mask < best_mask)) {
            best = cur;
            best_mask = mask;
        }
    }
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) ids.push_back(v);

    OptResult r;
    r.cut = Cut{std::move(ids)};
    r.weight = cut_weight(g, r.cut);
    return r;
}

}  // namespace

OptResult brute_force_opt(const WeightedDigraph& g, int limit) {
    if (g.vertex_count() > limit)
        throw limit_error("brute force limited to " + std::to_string(limit) + " vertices, got " +
                          std::to_string(g.vertex_count()));
    if (g.edges().empty()) return {Cut{}, Rat(0)};

    // int64 fast path over a common denominator when it fits
    Int lcm = 1;
    for (const Edge& e : g.edges()) {
        Int den = e.weight.get_den();
        lcm = lcm / gcd(lcm, den) * den;
    }
    Int scaled_total = 0;
    bool fits = lcm.fits_slong_p();
    std::vector<long> wl;
    if (fits) {
        for (const Edge& e : g.edges()) {
            Int s = e.weight.get_num() * (lcm / e.weight.get_den());
            scaled_total += s;
            if (!s.fits_slong_p()) {
                fits = false;
                break;
            }
            wl.push_back(mpz_get_si(s.get_mpz_t()));
        }
        if (!scaled_total.fits_slong_p()) fits = false;
    }
    OptResult r;
    if (fits) {
        r = gray_scan<long>(g, wl);
    } else {
        std::vector<Rat> wr;
        for (const Edge& e : g.edges()) wr.push_back(e.weight);
        r = gray_scan<Rat>(g, wr);
    }
    return r;
}

WeightedDigraph invert(const WeightedDigraph& g) {
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges()) es.push_back({e.dst, e.src, e.weight});
    return WeightedDigraph(g.vertex_count(), std::move(es));
}

WeightedDigraph disjoint_union(const std::vector<WeightedDigraph>& gs,
                               const std::vector<Rat>& scales) {
    if (gs.empty()) throw std::invalid_argument("disjoint union of an empty list");
    if (gs.size() != scales.size())
        throw std::invalid_argument("scales must match the component list");
    for (const Rat& s : scales)
        if (!(s > 0)) throw std::invalid_argument("scales must be positive");
    int n = 0;
    std::vector<Edge> es;
    for (std::size_t k = 0; k < gs.size(); ++k) {
        for (const Edge& e : gs[k].edges())
            es.push_back({e.src + n, e.dst + n, Rat(e.weight * scales[k])});
        n += gs[k].vertex_count();
    }
    return WeightedDigraph(n, std::move(es));
}

WeightedDigraph replicate(const WeightedDigraph& g, int copies) {
    if (copies < 1) throw std::invalid_argument("replicate needs at least one copy");
    return disjoint_union(std::vector<WeightedDigraph>(copies, g),
                          std::vector<Rat>(copies, Rat(1)));
}

ExpandResult expand_to_unweighted(const WeightedDigraph& g, const ExpandLimits& limits) {
    if (g.edges().empty()) throw zero_weight_error("cannot expand a graph with no edges");
    Rat max_w = g.edges()[0].weight;
    for (const Edge& e : g.edges()) max_w = std::max(max_w, e.weight);

    Int m = 1;
    std::vector<Rat> norm;
    for (const Edge& e : g.edges()) {
        Rat w = e.weight / max_w;
        norm.push_back(w);
        Int den = w.get_den();
        m = m / gcd(m, den) * den;
    }
    if (!m.fits_slong_p() || mpz_get_si(m.get_mpz_t()) > limits.max_m)
        throw limit_error("expansion modulus " + m.get_str() + " exceeds limit " +
                          std::to_string(limits.max_m));
    long ml = mpz_get_si(m.get_mpz_t());

    std::vector<Edge> int_edges;
    long out_edges = 0;
    std::vector<long> wi;
    for (std::size_t i = 0; i < norm.size(); ++i) {
        Int s = norm[i].get_num() * (m / norm[i].get_den());
        long w = mpz_get_si(s.get_mpz_t());
        wi.push_back(w);
        int_edges.push_back({g.edges()[i].src, g.edges()[i].dst, Rat(w)});
        out_edges += w * ml;
        if (out_edges > limits.max_edges)
            throw limit_error("expansion would exceed " + std::to_string(limits.max_edges) +
                              " edges");
    }

    std::vector<Edge> es;
    es.reserve(out_edges);
    for (std::size_t i = 0; i < wi.size(); ++i) {
        int u = g.edges()[i].src, v = g.edges()[i].dst;
        for (long j = 0; j < ml; ++j)
            for (long t = 0; t < wi[i]; ++t)
                es.push_back({static_cast<int>(u * ml + j),
                              static_cast<int>(v * ml + (j + t) % ml), Rat(1)});
    }
    ExpandResult r;
    r.graph = WeightedDigraph(g.vertex_count() * static_cast<int>(ml), std::move(es));
    r.m = m;
    r.integer_graph = WeightedDigraph(g.vertex_count(), std::move(int_edges));
    return r;
}

WeightedDigraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int vertex_count = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (vertex_count < 0) {
            std::string ver, count;
            if (tok != "dicut-graph" || !(ls >> ver >> count) || ver != "v1")
                throw parse_error("expected header 'dicut-graph v1 <vertex_count>'", lineno);
            try {
                vertex_count = std::stoi(count);
            } catch (const std::exception&) {
                throw parse_error("bad vertex count '" + count + "'", lineno);
            }
            if (vertex_count < 0) throw parse_error("negative vertex count", lineno);
            continue;
        }
        std::string dst, w;
        if (!(ls >> dst >> w)) throw parse_error("edge line needs 'src dst weight'", lineno);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing token '" + extra + "'", lineno);
        try {
            edges.push_back({std::stoi(tok), std::stoi(dst), parse_rat(w)});
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno);
        } catch (const std::exception&) {
            throw parse_error("bad edge line", lineno);
        }
    }
    if (vertex_count < 0) throw parse_error("missing 'dicut-graph v1' header");
    try {
        return WeightedDigraph(vertex_count, std::move(edges));
    } catch (const parse_error& e) {
        throw parse_error(std::string("invalid graph: ") + e.what());
    }
}

WeightedDigraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

void write_graph(std::ostream& out, const WeightedDigraph& g) {
    out << "dicut-graph v1 " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.src << ' ' << e.dst << ' ' << rat_str(e.weight) << '\n';
}

std::string graph_text(const WeightedDigraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

WeightedDigraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph '" + path + "'");
    return read_graph(in);
}

}  // namespace dicut
