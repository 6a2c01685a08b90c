#include "dicut/stepfn.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "dicut/errors.hpp"

namespace dicut {

namespace {

void check_unit_range(const Rat& v, const char* what) {
    if (v < 0 || v > 1) throw parse_error(std::string(what) + " outside [0,1]: " + rat_str(v));
}

}  // namespace

StepFunction StepFunction::from_partition(std::vector<Rat> breakpoints,
                                          std::vector<Rat> interval_values,
                                          std::vector<std::optional<Rat>> point_values) {
    const std::size_t nb = breakpoints.size();
    if (nb < 2 || interval_values.size() != nb - 1)
        throw parse_error("partition needs m+2 breakpoints and m+1 interval values");
    if (!point_values.empty() && point_values.size() != nb)
        throw parse_error("point values must align with breakpoints");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw parse_error("breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < nb; ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw parse_error("breakpoints must be strictly increasing");
    for (const Rat& v : interval_values) check_unit_range(v, "interval value");
    for (const auto& p : point_values)
        if (p) check_unit_range(*p, "point value");

    // effective value at each breakpoint: explicit, else right limit
    // (left limit at x = 1)
    std::vector<Rat> eff(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        if (!point_values.empty() && point_values[i])
            eff[i] = *point_values[i];
        else
            eff[i] = (i + 1 < nb) ? interval_values[i] : interval_values.back();
    }

    StepFunction f;
    f.pieces_.push_back({breakpoints[0], breakpoints[1], interval_values[0]});
    std::vector<PointValue> interior;
    for (std::size_t i = 1; i + 1 < nb; ++i) {
        if (interval_values[i] == f.pieces_.back().value) {
            // breakpoint swallowed by the merge; keep its value only if it
            // deviates from the constant run
            if (eff[i] != f.pieces_.back().value) interior.push_back({breakpoints[i], eff[i]});
            f.pieces_.back().hi = breakpoints[i + 1];
        } else {
            f.pieces_.back().hi = breakpoints[i];
            f.pieces_.push_back({breakpoints[i], breakpoints[i + 1], interval_values[i]});
        }
    }

    f.points_.push_back({Rat(0), eff.front()});
    for (std::size_t p = 1; p < f.pieces_.size(); ++p) {
        const Rat& x = f.pieces_[p].lo;
        std::size_t bi =
            std::lower_bound(breakpoints.begin(), breakpoints.end(), x) - breakpoints.begin();
        f.points_.push_back({x, eff[bi]});
    }
    for (auto& pv : interior) f.points_.push_back(std::move(pv));
    f.points_.push_back({Rat(1), eff.back()});
    std::sort(f.points_.begin(), f.points_.end(),
              [](const PointValue& a, const PointValue& b) { return a.x < b.x; });
    return f;
}

StepFunction StepFunction::constant(const Rat& value) {
    return from_partition({Rat(0), Rat(1)}, {value});
}

const Rat& StepFunction::evaluate(const Rat& x) const {
    if (x < 0 || x > 1) throw std::domain_error("bias outside [0,1]: " + rat_str(x));
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const PointValue& p, const Rat& v) { return p.x < v; });
    if (it != points_.end() && it->x == x) return it->value;
    auto pit = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                                [](const Rat& v, const Piece& p) { return v < p.hi; });
    return pit->value;
}

Rat StepFunction::evaluate_at(double x) const { return evaluate(Rat(x)); }

std::vector<StepFunction::PointValue> StepFunction::isolated_points() const {
    std::vector<PointValue> out;
    for (const auto& pv : points_) {
        const Rat* left = nullptr;
        const Rat* right = nullptr;
        for (const auto& pc : pieces_) {
            if (pc.hi == pv.x) left = &pc.value;
            if (pc.lo == pv.x) right = &pc.value;
            if (pc.lo < pv.x && pv.x < pc.hi) left = right = &pc.value;
        }
        bool differs_left = left == nullptr || pv.value != *left;
        bool differs_right = right == nullptr || pv.value != *right;
        if (pv.x == 0) {
            if (differs_right) out.push_back(pv);
        } else if (pv.x == 1) {
            if (differs_left) out.push_back(pv);
        } else if (differs_left && differs_right) {
            out.push_back(pv);
        }
    }
    return out;
}

std::string StepFunction::canonical_text() const {
    std::ostringstream os;
    os << "stepfn v1\n";
    for (const auto& pc : pieces_)
        os << rat_str(pc.lo) << ' ' << rat_str(pc.hi) << ' ' << rat_str(pc.value) << '\n';
    for (const auto& pv : points_) {
        // emit only values the default rule would not reproduce
        const Rat* def = nullptr;
        for (const auto& pc : pieces_) {
            if (pv.x < 1 && (pc.lo == pv.x || (pc.lo < pv.x && pv.x < pc.hi))) def = &pc.value;
            if (pv.x == 1 && pc.hi == pv.x) def = &pc.value;
        }
        if (def == nullptr || pv.value != *def)
            os << "@ " << rat_str(pv.x) << ' ' << rat_str(pv.value) << '\n';
    }
    return os.str();
}

std::string StepFunction::fingerprint() const { return fingerprint_hex(canonical_text()); }

bool is_antisymmetric(const StepFunction& f, const Rat& tol) {
    if (tol < 0) throw std::domain_error("negative tolerance");
    const auto& pieces = f.pieces();
    const std::size_t k = pieces.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = pieces[i];
        const auto& b = pieces[k - 1 - i];
        if (a.lo != 1 - b.hi || a.hi != 1 - b.lo) return false;
    }
    auto ok = [&](const Rat& x) {
        Rat s = f.evaluate(x) + f.evaluate(1 - x) - 1;
        return s <= tol && -s <= tol;
    };
    for (const auto& pc : pieces)
        if (!ok((pc.lo + pc.hi) / 2)) return false;
    for (const auto& pv : f.points())
        if (!ok(pv.x)) return false;
    return true;
}

StepFunction antisymmetrize(const StepFunction& f) {
    std::set<Rat> cuts;
    for (const auto& pc : f.pieces()) {
        cuts.insert(pc.lo);
        cuts.insert(pc.hi);
        cuts.insert(1 - pc.lo);
        cuts.insert(1 - pc.hi);
    }
    for (const auto& pv : f.points()) {
        cuts.insert(pv.x);
        cuts.insert(1 - pv.x);
    }
    std::vector<Rat> breaks(cuts.begin(), cuts.end());
    std::vector<Rat> values;
    std::vector<std::optional<Rat>> pts(breaks.size());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Rat mid = (breaks[i] + breaks[i + 1]) / 2;
        values.push_back((f.evaluate(mid) + 1 - f.evaluate(1 - mid)) / 2);
    }
    for (std::size_t i = 0; i < breaks.size(); ++i)
        pts[i] = (f.evaluate(breaks[i]) + 1 - f.evaluate(1 - breaks[i])) / 2;
    return StepFunction::from_partition(std::move(breaks), std::move(values), std::move(pts));
}

Rat antisymmetrize_advantage(const StepFunction& f, const Rat& x, const Rat& y) {
    Rat gx = 1 - f.evaluate(x) - f.evaluate(1 - x);
    Rat gy = 1 - f.evaluate(y) - f.evaluate(1 - y);
    return gx * gy / 2;
}

StepFunction make_uniform() { return StepFunction::constant(frac(1, 2)); }

StepFunction make_f_delta(const Rat& delta) {
    if (!(delta > 0 && delta < frac(1, 2)))
        throw std::domain_error("delta must lie in (0, 1/2), got " + rat_str(delta));
    Rat half = frac(1, 2);
    return StepFunction::from_partition({Rat(0), delta, 1 - delta, Rat(1)},
                                        {Rat(0), half, Rat(1)},
                                        {std::nullopt, half, half, std::nullopt});
}

StepFunction make_clamped_linear_discretized(int steps) {
    if (steps < 1) throw std::domain_error("steps must be positive");
    const Rat quarter = frac(1, 4);
    const Rat half = frac(1, 2);
    std::set<Rat> cuts = {Rat(0), quarter, 1 - quarter, Rat(1), half};
    for (int i = 1; i < steps; ++i) cuts.insert(quarter + frac(i, 2 * steps));
    std::vector<Rat> breaks(cuts.begin(), cuts.end());
    std::vector<Rat> values;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rat& lo = breaks[i];
        if (breaks[i + 1] <= quarter)
            values.push_back(Rat(0));
        else if (lo >= 1 - quarter)
            values.push_back(Rat(1));
        else {
            // cell index of the step grid over (1/4, 3/4)
            Rat pos = (lo - quarter) * 2 * steps;
            long cell = mpz_get_si(Int(pos.get_num() / pos.get_den()).get_mpz_t());
            values.push_back(frac(2 * cell + 1, 2 * steps));
        }
    }
    // right-continuous below 1/2, left-continuous above: keeps the function
    // antisymmetric at breakpoints as well
    std::vector<std::optional<Rat>> pts(breaks.size());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i] == half)
            pts[i] = half;
        else if (breaks[i] > half)
            pts[i] = values[i - 1];
    }
    return StepFunction::from_partition(std::move(breaks), std::move(values), std::move(pts));
}

StepFunction make_paper_0483() { return make_clamped_linear_discretized(100); }

StepFunction make_greedy_threshold() {
    Rat half = frac(1, 2);
    return StepFunction::from_partition({Rat(0), half, Rat(1)}, {Rat(0), Rat(1)},
                                        {std::nullopt, Rat(1), std::nullopt});
}

StepFamily::StepFamily(int n, int limit) : n_(n) {
    if (n < 1) throw std::domain_error("family parameter must be positive");
    if (n > limit)
        throw limit_error("family parameter " + std::to_string(n) + " exceeds limit " +
                          std::to_string(limit));
}

std::uint64_t StepFamily::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < n_; ++i) s *= static_cast<std::uint64_t>(n_ + 1);
    return s;
}

std::vector<int> StepFamily::digits(std::uint64_t index) const {
    std::vector<int> d(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        d[i] = static_cast<int>(index % (n_ + 1));
        index /= (n_ + 1);
    }
    return d;
}

StepFunction StepFamily::at(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("family index");
    std::vector<int> d = digits(index);
    std::vector<Rat> breaks;
    std::vector<Rat> values;
    for (int j = 0; j <= 2 * n_; ++j) breaks.push_back(frac(j, 2 * n_));
    for (int j = 0; j < 2 * n_; ++j)
        values.push_back(j < n_ ? frac(d[j], n_) : 1 - frac(d[2 * n_ - 1 - j], n_));
    // right-continuous on the lower half, left-continuous on the upper, so
    // antisymmetry holds at the breakpoints too
    std::vector<std::optional<Rat>> pts(breaks.size());
    pts[n_] = frac(1, 2);
    for (int j = n_ + 1; j < 2 * n_; ++j) pts[j] = values[j - 1];
    return StepFunction::from_partition(std::move(breaks), std::move(values), std::move(pts));
}

StepFunction parse_stepfn(const std::string& text) {
    std::istringstream is(text);
    return read_stepfn(is);
}

StepFunction read_stepfn(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    if (!next_line(line)) throw parse_error("empty step-function file");
    {
        std::istringstream hs(line);
        std::string word, ver;
        hs >> word >> ver;
        if (word != "stepfn" || ver != "v1") throw parse_error("expected header 'stepfn v1'", lineno);
    }

    struct Row {
        Rat lo, hi, v;
    };
    std::vector<Row> rows;
    std::vector<StepFunction::PointValue> pts;
    while (next_line(line)) {
        std::istringstream ls(line);
        std::string a;
        ls >> a;
        try {
            if (a == "@") {
                std::string xs, vs;
                if (!(ls >> xs >> vs)) throw parse_error("point line needs '@ x value'", lineno);
                pts.push_back({parse_rat(xs), parse_rat(vs)});
            } else {
                std::string hs, vs;
                if (!(ls >> hs >> vs)) throw parse_error("interval line needs 'lo hi value'", lineno);
                rows.push_back({parse_rat(a), parse_rat(hs), parse_rat(vs)});
            }
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno);
        }
        std::string extra;
        if (ls >> extra) throw parse_error("trailing token '" + extra + "'", lineno);
    }
    if (rows.empty()) throw parse_error("step function has no intervals");
    std::set<Rat> cuts;
    for (const auto& r : rows) {
        cuts.insert(r.lo);
        cuts.insert(r.hi);
    }
    for (const auto& p : pts) cuts.insert(p.x);
    std::vector<Rat> breaks(cuts.begin(), cuts.end());
    if (breaks.front() != 0 || breaks.back() != 1)
        throw parse_error("intervals must cover (0,1)");
    std::vector<Rat> values(breaks.size() - 1);
    std::vector<bool> covered(breaks.size() - 1, false);
    for (const auto& r : rows) {
        if (!(r.lo < r.hi)) throw parse_error("empty interval " + rat_str(r.lo) + ".." + rat_str(r.hi));
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            if (breaks[i] >= r.lo && breaks[i + 1] <= r.hi) {
                if (covered[i]) throw parse_error("overlapping intervals at " + rat_str(breaks[i]));
                values[i] = r.v;
                covered[i] = true;
            }
        }
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i]) throw parse_error("gap in intervals at " + rat_str(breaks[i]));
    std::vector<std::optional<Rat>> pvs(breaks.size());
    for (const auto& p : pts) {
        std::size_t i = std::lower_bound(breaks.begin(), breaks.end(), p.x) - breaks.begin();
        pvs[i] = p.value;
    }
    return StepFunction::from_partition(std::move(breaks), std::move(values), std::move(pvs));
}

void write_stepfn(std::ostream& out, const StepFunction& f) { out << f.canonical_text(); }

StepFunction resolve_stepfn(const std::string& name_or_path) {
    if (name_or_path == "uniform") return make_uniform();
    if (name_or_path == "greedy-threshold") return make_greedy_threshold();
    if (name_or_path == "paper-0483") return make_paper_0483();
    if (name_or_path.rfind("f-delta:", 0) == 0)
        return make_f_delta(parse_rat(name_or_path.substr(8)));
    if (name_or_path.rfind("clamped-linear:", 0) == 0) {
        int k = std::stoi(name_or_path.substr(15));
        return make_clamped_linear_discretized(k);
    }
    std::ifstream in(name_or_path);
    if (!in) throw parse_error("cannot open step function '" + name_or_path + "'");
    return read_stepfn(in);
}

}  // namespace dicut
