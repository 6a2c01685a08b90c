// Command-line front end: certification, evaluation, search, gadget bounds,
// and the file-format conversions.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dicut/algorithms.hpp"
#include "dicut/bounds.hpp"
#include "dicut/errors.hpp"
#include "dicut/lp.hpp"
#include "dicut/search.hpp"
#include "dicut/twoand.hpp"

namespace {

using namespace dicut;

std::string show(const Rat& r) { return rat_str(r) + " = " + rat_decimal(r); }

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    return out;
}

int cmd_ratio(const std::string& fn, const std::string& witness_out, const std::string& cert_out,
              bool sym_reduce) {
    RatioOptions opts;
    opts.sym_reduce = sym_reduce;
    RatioCertificate c = approximation_ratio(resolve_stepfn(fn), opts);
    std::cout << "fn " << c.fingerprint << "\n";
    std::cout << "lower " << show(c.lower) << "\n";
    std::cout << "upper " << show(c.upper) << "\n";
    if (!witness_out.empty()) {
        auto out = open_out(witness_out);
        write_graph(out, c.witness);
    }
    if (!cert_out.empty()) {
        auto out = open_out(cert_out);
        write_certificate(out, c);
    }
    return 0;
}

int cmd_eval(const std::string& graph_path, const std::string& fn, std::uint64_t trials,
             std::uint64_t seed) {
    WeightedDigraph g = load_graph_file(graph_path);
    StepFunction f = resolve_stepfn(fn);
    Rat e = expected_cut_weight(g, f);
    std::cout << "expected " << show(e) << "\n";
    std::cout << "total-weight " << show(g.total_weight()) << "\n";
    if (trials > 0) {
        MonteCarloStats mc = monte_carlo_expected_cut(g, f, trials, seed);
        std::cout << "monte-carlo " << mc.mean << " +/- " << mc.std_error << " (" << mc.trials
                  << " trials, seed " << seed << ")\n";
    }
    return 0;
}

int cmd_opt(const std::string& graph_path) {
    WeightedDigraph g = load_graph_file(graph_path);
    OptResult r = brute_force_opt(g);
    std::cout << "opt " << show(r.weight) << "\n";
    std::cout << "cut";
    for (int v : r.cut.selected) std::cout << ' ' << v;
    std::cout << "\n";
    return 0;
}

int cmd_search(int n, int refine_grid, int refine_rounds, int jobs,
               const std::string& ledger_path) {
    SearchOptions opts;
    opts.jobs = jobs;
    std::ofstream ledger;
    if (!ledger_path.empty()) {
        ledger = open_out(ledger_path);
        opts.ledger = &ledger;
    }
    SearchResult best = exhaustive_best(n, opts);
    std::cout << "candidates " << best.candidates << "\n";
    std::cout << "best-lower " << show(best.certificate.lower) << "\n";
    std::cout << "best-upper " << show(best.certificate.upper) << "\n";
    std::cout << best.best.canonical_text();
    if (refine_grid > 0) {
        SearchResult refined = local_refine(best.best, refine_grid, refine_rounds, opts);
        std::cout << "refined-lower " << show(refined.certificate.lower) << "\n";
        std::cout << refined.best.canonical_text();
    }
    return 0;
}

int cmd_bound(const Rat& c, int k1, int k2, const std::string& alpha_grid,
              const std::string& fn, const std::string& out_g1, const std::string& out_g2,
              const std::string& out_combined) {
    if (!out_g1.empty()) {
        auto out = open_out(out_g1);
        write_graph(out, build_g1(c));
    }
    if (!out_g2.empty()) {
        auto out = open_out(out_g2);
        write_graph(out, build_g2(c));
    }
    if (!out_combined.empty()) {
        auto out = open_out(out_combined);
        write_graph(out, build_combined(c, k1, k2));
    }
    std::cout << "opt " << show(combined_opt(c, k1, k2)) << "\n";
    if (k1 == 1 && k2 == 3) {
        Rat argmax = combined_ratio_argmax(c);
        std::cout << "max-alpha " << show(argmax) << "\n";
        std::cout << "max-ratio " << show(combined_ratio_formula(c, argmax)) << "\n";
        if (!alpha_grid.empty()) {
            Rat step = parse_rat(alpha_grid);
            if (!(step > 0)) throw parse_error("alpha grid step must be positive");
            std::cout << "alpha,ratio\n";
            for (Rat a = 0; a <= 1; a += step)
                std::cout << rat_decimal(a) << ',' << rat_decimal(combined_ratio_formula(c, a))
                          << "\n";
        }
    }
    if (!fn.empty()) {
        StepFunction f = resolve_stepfn(fn);
        std::cout << "fn-bound " << show(nonsymmetric_bound(f, c, k1, k2)) << "\n";
        std::cout << "fn-cycle " << show(even_cycle_ratio(f)) << "\n";
    }
    return 0;
}

int cmd_reduce2and(const std::string& in_path, const std::string& out_path) {
    TwoAndInstance inst = load_twoand_file(in_path);
    Reduction r = reduce_to_dicut(inst);
    auto out = open_out(out_path);
    out << "# reduction of " << in_path << "; literal +k -> vertex 2(k-1), -k -> 2(k-1)+1\n";
    write_graph(out, r.graph);
    std::cout << "vertices " << r.graph.vertex_count() << "\n";
    std::cout << "edges " << r.graph.edges().size() << "\n";
    return 0;
}

int cmd_expand(const std::string& in_path, const std::string& out_path, long max_m) {
    WeightedDigraph g = load_graph_file(in_path);
    ExpandLimits limits;
    if (max_m > 0) limits.max_m = max_m;
    ExpandResult r = expand_to_unweighted(g, limits);
    auto out = open_out(out_path);
    write_graph(out, r.graph);
    std::cout << "m " << r.m.get_str() << "\n";
    std::cout << "vertices " << r.graph.vertex_count() << "\n";
    std::cout << "edges " << r.graph.edges().size() << "\n";
    return 0;
}

int cmd_mixmax(const std::string& graph_path, const std::vector<std::string>& members,
               const std::vector<std::string>& mix, std::uint64_t trials, std::uint64_t seed) {
    WeightedDigraph g = load_graph_file(graph_path);
    PortfolioSpec p;
    for (const std::string& m : members)
        p.members.push_back(m == "greedy" ? AlgorithmSpec::greedy()
                                          : AlgorithmSpec::oblivious(resolve_stepfn(m)));
    std::cout << "total-weight " << show(g.total_weight()) << "\n";
    for (std::size_t i = 0; i < p.members.size(); ++i)
        std::cout << "member " << members[i] << " expected "
                  << show(member_expected_weight(g, p.members[i])) << "\n";
    std::cout << "maxexp " << show(portfolio_maxexp(g, p)) << "\n";
    if (!mix.empty()) {
        std::vector<Rat> w;
        for (const std::string& s : mix) w.push_back(parse_rat(s));
        p.mix_weights = w;
        std::cout << "mix " << show(portfolio_mix(g, p)) << "\n";
    }
    if (trials > 0) {
        MonteCarloStats s = portfolio_expmax(g, p, seed, trials);
        std::cout << "expmax " << s.mean << " +/- " << s.std_error << " (" << s.trials
                  << " trials, seed " << seed << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oblivious Max DICUT algorithms: certification, search, and bounds"};
    app.require_subcommand(1);

    std::string fn, graph_path, witness_out, cert_out, in_path, out_path, ledger_path;
    std::string alpha_grid, out_g1, out_g2, out_combined, c_text = "5/4";
    std::vector<std::string> members, mix;
    bool sym_reduce = false;
    std::uint64_t trials = 0, seed = 1;
    int n = 2, refine_grid = 0, refine_rounds = 1, jobs = 1, k1 = 1, k2 = 3;
    long max_m = 0;

    auto* ratio = app.add_subcommand("ratio", "certify the worst-case ratio of a step function");
    ratio->add_option("--fn", fn, "step function file or builtin name")->required();
    ratio->add_option("--witness", witness_out, "write the witness graph here");
    ratio->add_option("--cert", cert_out, "write the certificate here");
    ratio->add_flag("--sym-reduce", sym_reduce, "fold the model by reversal symmetry");

    auto* eval = app.add_subcommand("eval", "exact expected cut weight of a function on a graph");
    eval->add_option("--graph", graph_path)->required();
    eval->add_option("--fn", fn)->required();
    eval->add_option("--mc", trials, "Monte-Carlo trials");
    eval->add_option("--seed", seed);

    auto* opt = app.add_subcommand("opt", "brute-force optimal directed cut");
    opt->add_option("--graph", graph_path)->required();

    auto* search = app.add_subcommand("search", "best function of the discretized family");
    search->add_option("--n", n)->required();
    search->add_option("--refine", refine_grid, "coordinate-ascent lattice");
    search->add_option("--rounds", refine_rounds);
    search->add_option("--jobs", jobs);
    search->add_option("--ledger", ledger_path, "write per-candidate results here");

    auto* bound = app.add_subcommand("bound", "adversarial gadget bounds");
    bound->add_option("--c", c_text);
    bound->add_option("--g1", k1);
    bound->add_option("--g2", k2);
    bound->add_option("--alpha-grid", alpha_grid, "print the formula curve at this step");
    bound->add_option("--fn", fn, "also bound this function");
    bound->add_option("--out-g1", out_g1);
    bound->add_option("--out-g2", out_g2);
    bound->add_option("--out-combined", out_combined);

    auto* reduce = app.add_subcommand("reduce2and", "2-AND instance to DICUT graph");
    reduce->add_option("--in", in_path)->required();
    reduce->add_option("--out", out_path)->required();

    auto* expand = app.add_subcommand("expand", "weighted graph to a unit-weight blow-up");
    expand->add_option("--graph", in_path)->required();
    expand->add_option("--out", out_path)->required();
    expand->add_option("--max-m", max_m, "override the modulus limit");

    auto* mixmax = app.add_subcommand("mixmax", "portfolio report: maxexp, mix, expmax");
    mixmax->add_option("--graph", graph_path)->required();
    mixmax->add_option("--members", members, "'greedy' or step functions")->required();
    mixmax->add_option("--mix", mix, "mix probabilities");
    mixmax->add_option("--trials", trials);
    mixmax->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ratio) return cmd_ratio(fn, witness_out, cert_out, sym_reduce);
        if (*eval) return cmd_eval(graph_path, fn, trials, seed);
        if (*opt) return cmd_opt(graph_path);
        if (*search) return cmd_search(n, refine_grid, refine_rounds, jobs, ledger_path);
        if (*bound)
            return cmd_bound(dicut::parse_rat(c_text), k1, k2, alpha_grid, fn, out_g1, out_g2,
                             out_combined);
        if (*reduce) return cmd_reduce2and(in_path, out_path);
        if (*expand) return cmd_expand(in_path, out_path, max_m);
        if (*mixmax) return cmd_mixmax(graph_path, members, mix, trials, seed);
    } catch (const dicut::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dicut::zero_weight_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const dicut::limit_error& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return 3;
    } catch (const dicut::solver_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 4;
    } catch (const dicut::certificate_error& e) {
        std::cerr << "certificate invalid: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
