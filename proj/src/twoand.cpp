#include "dicut/twoand.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dicut/errors.hpp"

namespace dicut {

TwoAndInstance::TwoAndInstance(int variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
    if (variable_count < 0) throw parse_error("negative variable count");
    for (const Clause& c : clauses_) {
        for (const Literal& l : {c.a, c.b})
            if (l.var < 0 || l.var >= variable_count_)
                throw parse_error("literal variable out of range: " + std::to_string(l.var));
        if (c.a.var == c.b.var)
            throw parse_error("clause literals must use distinct variables, got variable " +
                              std::to_string(c.a.var) + " twice");
        if (!(c.weight > 0)) throw parse_error("clause weight must be positive");
    }
}

Rat TwoAndInstance::total_weight() const {
    Rat t = 0;
    for (const Clause& c : clauses_) t += c.weight;
    return t;
}

Rat assignment_weight(const TwoAndInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.size()) != inst.variable_count())
        throw std::invalid_argument("assignment must cover every variable");
    auto holds = [&](Literal l) { return static_cast<bool>(a[l.var]) == l.positive; };
    Rat w = 0;
    for (const Clause& c : inst.clauses())
        if (holds(c.a) && holds(c.b)) w += c.weight;
    return w;
}

std::vector<Rat> variable_biases(const TwoAndInstance& inst) {
    std::vector<Rat> pos(inst.variable_count(), Rat(0)), tot(inst.variable_count(), Rat(0));
    for (const Clause& c : inst.clauses())
        for (const Literal& l : {c.a, c.b}) {
            tot[l.var] += c.weight;
            if (l.positive) pos[l.var] += c.weight;
        }
    std::vector<Rat> bias(inst.variable_count());
    for (int v = 0; v < inst.variable_count(); ++v)
        bias[v] = tot[v] > 0 ? Rat(pos[v] / tot[v]) : frac(1, 2);
    return bias;
}

Rat variable_bias(const TwoAndInstance& inst, int var) {
    if (var < 0 || var >= inst.variable_count())
        throw std::out_of_range("variable " + std::to_string(var));
    return variable_biases(inst)[var];
}

OptAssignment brute_force_best_assignment(const TwoAndInstance& inst, int limit) {
    if (inst.variable_count() > limit)
        throw limit_error("brute force limited to " + std::to_string(limit) + " variables, got " +
                          std::to_string(inst.variable_count()));
    const int n = inst.variable_count();
    const std::uint64_t end = std::uint64_t(1) << n;
    Assignment a(n, 0), best_a(n, 0);
    Rat best = assignment_weight(inst, a);
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        for (int v = 0; v < n; ++v) a[v] = (mask >> v) & 1;
        Rat w = assignment_weight(inst, a);
        if (w > best) {
            best = w;
            best_a = a;
        }
    }
    return {best_a, best};
}

Reduction reduce_to_dicut(const TwoAndInstance& inst) {
    Reduction r;
    std::vector<Edge> es;
    es.reserve(2 * inst.clauses().size());
    for (const Clause& c : inst.clauses()) {
        Rat half = c.weight / 2;
        es.push_back({r.vertex_of(c.a), r.vertex_of(negate(c.b)), half});
        es.push_back({r.vertex_of(c.b), r.vertex_of(negate(c.a)), half});
    }
    r.graph = WeightedDigraph(2 * inst.variable_count(), std::move(es));
    return r;
}

Rat oblivious_expected_assignment(const TwoAndInstance& inst, const StepFunction& f) {
    std::vector<Rat> bias = variable_biases(inst);
    std::vector<Rat> p(bias.size());
    for (std::size_t v = 0; v < bias.size(); ++v) p[v] = f.evaluate(bias[v]);
    auto lit_prob = [&](Literal l) { return l.positive ? p[l.var] : Rat(1 - p[l.var]); };
    Rat e = 0;
    for (const Clause& c : inst.clauses()) e += c.weight * lit_prob(c.a) * lit_prob(c.b);
    return e;
}

Assignment sample_assignment(const TwoAndInstance& inst, const StepFunction& f,
                             std::uint64_t seed, bool consistent) {
    Rng rng(seed);
    Assignment a(inst.variable_count());
    if (consistent) {
        // draw the positive literal vertex of the reduction; its complement is
        // forced, and the variable reads off the positive vertex
        Reduction r = reduce_to_dicut(inst);
        BiasProfile bp = biases(r.graph);
        for (int v = 0; v < inst.variable_count(); ++v) {
            int vx = r.vertex_of({v, true});
            a[v] = rng.next_bernoulli(rat_d(f.evaluate(bp.bias[vx])));
        }
    } else {
        std::vector<Rat> bias = variable_biases(inst);
        for (int v = 0; v < inst.variable_count(); ++v)
            a[v] = rng.next_bernoulli(rat_d(f.evaluate(bias[v])));
    }
    return a;
}

Cut sample_reduction_cut(const TwoAndInstance& inst, const StepFunction& f, std::uint64_t seed,
                         bool consistent) {
    Reduction r = reduce_to_dicut(inst);
    Rng rng(seed);
    BiasProfile bp = biases(r.graph);
    std::vector<int> ids;
    for (int v = 0; v < inst.variable_count(); ++v) {
        int pos = r.vertex_of({v, true});
        int neg = r.vertex_of({v, false});
        bool pos_in = rng.next_bernoulli(rat_d(f.evaluate(bp.bias[pos])));
        bool neg_in = consistent ? !pos_in : rng.next_bernoulli(rat_d(f.evaluate(bp.bias[neg])));
        if (pos_in) ids.push_back(pos);
        if (neg_in) ids.push_back(neg);
    }
    return Cut{std::move(ids)};
}

TwoAndInstance read_twoand(std::istream& in) {
    std::string line;
    int lineno = 0;
    int var_count = -1;
    std::vector<Clause> clauses;
    auto parse_lit = [&](const std::string& tok) -> Literal {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
            throw parse_error("literal must look like '+3' or '-3', got '" + tok + "'", lineno);
        int k;
        try {
            k = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw parse_error("bad literal '" + tok + "'", lineno);
        }
        if (k < 1) throw parse_error("literal variables are 1-based", lineno);
        return {k - 1, tok[0] == '+'};
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (var_count < 0) {
            std::string ver, count;
            if (tok != "twoand" || !(ls >> ver >> count) || ver != "v1")
                throw parse_error("expected header 'twoand v1 <variable_count>'", lineno);
            var_count = std::stoi(count);
            continue;
        }
        std::string lit2, w;
        if (!(ls >> lit2 >> w)) throw parse_error("clause line needs '<lit> <lit> <weight>'", lineno);
        try {
            clauses.push_back({parse_lit(tok), parse_lit(lit2), parse_rat(w)});
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno);
        }
    }
    if (var_count < 0) throw parse_error("missing 'twoand v1' header");
    try {
        return TwoAndInstance(var_count, std::move(clauses));
    } catch (const parse_error& e) {
        throw parse_error(std::string("invalid instance: ") + e.what());
    }
}

TwoAndInstance parse_twoand(const std::string& text) {
    std::istringstream is(text);
    return read_twoand(is);
}

void write_twoand(std::ostream& out, const TwoAndInstance& inst) {
    out << "twoand v1 " << inst.variable_count() << '\n';
    auto lit = [](Literal l) {
        return (l.positive ? std::string("+") : std::string("-")) + std::to_string(l.var + 1);
    };
    for (const Clause& c : inst.clauses())
        out << lit(c.a) << ' ' << lit(c.b) << ' ' << rat_str(c.weight) << '\n';
}

TwoAndInstance load_twoand_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open 2-AND instance '" + path + "'");
    return read_twoand(in);
}

}  // namespace dicut
