#include <istream>
#include <ostream>
#include <sstream>

#include "dicut/errors.hpp"
#include "dicut/lp.hpp"

namespace dicut {

namespace {

bool m_is_cut_row(const LpModel& m, int r) {
    return m.rows()[r].kind == LpRow::Kind::CutWeight;
}

}  // namespace

RatioCertificate approximation_ratio(const StepFunction& f, const RatioOptions& opts) {
    LpModel model = LpModel::build(f);
    Certified cert;
    if (!opts.sym_reduce) {
        LpSolution sol = solve(model, opts.simplex);
        if (sol.status == SolveStatus::Infeasible)
            throw solver_error("ratio model unexpectedly infeasible");
        if (sol.status == SolveStatus::IterationLimit)
            throw solver_error("simplex hit the iteration limit after " +
                               std::to_string(sol.iterations) + " pivots");
        cert = certify(model, sol);
    } else {
        detail::ReducedLp red = detail::reduce_by_reversal(model);
        detail::StandardSolution ss = detail::solve_standard(red.lp, opts.simplex);
        if (ss.status != SolveStatus::Optimal)
            throw solver_error("symmetry-reduced solve did not reach an optimum");
        detail::exact_polish(red.lp, ss.basis, opts.simplex.max_polish_pivots);
        detail::ExactBasic eb = detail::exact_basic_solution(red.lp, ss.basis);
        std::vector<Rat> x(model.var_count());
        for (int v = 0; v < model.var_count(); ++v) x[v] = eb.x[red.orbit_of_var[v]];
        // the cut row is its own mirror; every bias row unfolds onto a
        // two-row orbit at half strength. A mirrored point-bias equality is
        // the negated representative row, so its dual flips sign.
        const int n = model.interval_count();
        std::vector<Rat> y(model.row_count());
        for (int r = 0; r < model.row_count(); ++r) {
            const LpRow& row = model.rows()[r];
            const Rat& yr = eb.y[red.orbit_of_row[r]];
            if (row.kind == LpRow::Kind::CutWeight)
                y[r] = yr;
            else if (row.kind == LpRow::Kind::BiasPoint && row.set >= n)
                y[r] = -yr / 2;
            else
                y[r] = yr / 2;
        }
        cert = certify_values(model, x, y);
    }

    Witness wit = extract_witness(model, cert.primal, opts.epsilon_scale);
    RatioCertificate rc;
    rc.fingerprint = f.fingerprint();
    rc.value = cert.upper;
    rc.lower = cert.lower;
    rc.upper = cert.upper;
    rc.lp_value = rat_d(rc.value);
    rc.witness = std::move(wit.graph);
    rc.witness_cut = std::move(wit.cut);
    rc.epsilon = wit.epsilon;
    rc.dual = cert.dual;
    return rc;
}

void write_certificate(std::ostream& out, const RatioCertificate& c) {
    out << "ratio-cert v1\n";
    out << "fn " << c.fingerprint << '\n';
    out << "value " << rat_str(c.value) << '\n';
    out << "lower " << rat_str(c.lower) << '\n';
    out << "upper " << rat_str(c.upper) << '\n';
    out << "epsilon " << rat_str(c.epsilon) << '\n';
    out << "cut " << c.witness_cut.selected.size();
    for (int v : c.witness_cut.selected) out << ' ' << v;
    out << '\n';
    out << "dual " << c.dual.size();
    for (const Rat& d : c.dual) out << ' ' << rat_str(d);
    out << '\n';
    out << "witness\n";
    write_graph(out, c.witness);
}

RatioCertificate read_certificate(std::istream& in) {
    RatioCertificate c;
    std::string line;
    auto need = [&](const char* what) {
        if (!std::getline(in, line)) throw parse_error(std::string("certificate missing ") + what);
        return std::istringstream(line);
    };
    {
        auto ls = need("header");
        std::string a, b;
        ls >> a >> b;
        if (a != "ratio-cert" || b != "v1") throw parse_error("expected header 'ratio-cert v1'");
    }
    auto field = [&](const char* name) {
        auto ls = need(name);
        std::string key, val;
        ls >> key >> val;
        if (key != name) throw parse_error(std::string("expected field ") + name);
        return val;
    };
    c.fingerprint = field("fn");
    c.value = parse_rat(field("value"));
    c.lower = parse_rat(field("lower"));
    c.upper = parse_rat(field("upper"));
    c.epsilon = parse_rat(field("epsilon"));
    c.lp_value = rat_d(c.value);
    {
        auto ls = need("cut");
        std::string key;
        std::size_t count;
        ls >> key >> count;
        if (key != "cut") throw parse_error("expected field cut");
        std::vector<int> ids(count);
        for (auto& v : ids)
            if (!(ls >> v)) throw parse_error("truncated cut line");
        c.witness_cut = Cut::of(std::move(ids));
    }
    {
        auto ls = need("dual");
        std::string key, tok;
        std::size_t count;
        ls >> key >> count;
        if (key != "dual") throw parse_error("expected field dual");
        for (std::size_t i = 0; i < count; ++i) {
            if (!(ls >> tok)) throw parse_error("truncated dual line");
            c.dual.push_back(parse_rat(tok));
        }
    }
    {
        auto ls = need("witness");
        std::string key;
        ls >> key;
        if (key != "witness") throw parse_error("expected witness section");
    }
    c.witness = read_graph(in);
    return c;
}

}  // namespace dicut
