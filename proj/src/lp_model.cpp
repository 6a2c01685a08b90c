#include <algorithm>

#include "dicut/errors.hpp"
#include "dicut/lp.hpp"

namespace dicut {

LpModel LpModel::from_intervals(std::vector<IntervalSet> intervals) {
    if (intervals.empty()) throw std::invalid_argument("model needs at least one interval");
    std::sort(intervals.begin(), intervals.end(), [](const IntervalSet& a, const IntervalSet& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    LpModel m;
    m.intervals_ = std::move(intervals);
    m.rows_.push_back({LpRow::Kind::CutWeight, -1});
    for (int s = 0; s < m.set_count(); ++s) {
        if (m.set_interval(s).zero_width()) {
            m.rows_.push_back({LpRow::Kind::BiasPoint, s});
        } else {
            m.rows_.push_back({LpRow::Kind::BiasLower, s});
            m.rows_.push_back({LpRow::Kind::BiasUpper, s});
        }
    }
    return m;
}

LpModel LpModel::build(const StepFunction& f) {
    std::vector<IntervalSet> intervals;
    for (const auto& pc : f.pieces()) intervals.push_back({pc.lo, pc.hi, pc.value});
    for (const auto& pv : f.isolated_points()) intervals.push_back({pv.x, pv.x, pv.value});
    return from_intervals(std::move(intervals));
}

Rat LpModel::objective_coeff(int var) const {
    auto [i, j] = var_sets(var);
    return set_prob(i) * (1 - set_prob(j));
}

std::vector<std::pair<int, Rat>> LpModel::column(int var) const {
    auto [i, j] = var_sets(var);
    std::vector<std::pair<int, Rat>> col;
    if (is_cut_var(var)) col.push_back({0, Rat(1)});
    for (int r = 1; r < row_count(); ++r) {
        const LpRow& row = rows_[r];
        int s = row.set;
        // out-degree indicator and full-degree indicator of this variable for
        // set s; e(s,s) belongs to both the out and in sums
        int out = (i == s) ? 1 : 0;
        int deg = ((i == s) ? 1 : 0) + ((j == s) ? 1 : 0);
        if (deg == 0) continue;
        const IntervalSet& iv = set_interval(s);
        Rat coeff;
        switch (row.kind) {
            case LpRow::Kind::BiasLower:
                coeff = iv.lo * deg - out;
                break;
            case LpRow::Kind::BiasUpper:
            case LpRow::Kind::BiasPoint:
                coeff = out - iv.hi * deg;
                break;
            default:
                continue;
        }
        if (coeff != 0) col.push_back({r, coeff});
    }
    return col;
}

namespace detail {

StandardLp to_standard(const LpModel& m) {
    StandardLp lp;
    lp.rows = m.row_count();
    lp.equality.resize(lp.rows);
    lp.b.resize(lp.rows);
    for (int r = 0; r < lp.rows; ++r) {
        lp.equality[r] = m.rows()[r].equality();
        lp.b[r] = m.rhs(r);
    }
    lp.cost.resize(m.var_count());
    lp.cols.resize(m.var_count());
    for (int v = 0; v < m.var_count(); ++v) {
        lp.cost[v] = m.objective_coeff(v);
        lp.cols[v] = m.column(v);
    }
    return lp;
}

namespace {

// Mirror of a set under edge reversal: the complementary side of the
// mirrored interval.
int mirror_set(const LpModel& m, int set) {
    const int n = m.interval_count();
    const IntervalSet& iv = m.set_interval(set);
    Rat lo = 1 - iv.hi, hi = 1 - iv.lo;
    for (int k = 0; k < n; ++k)
        if (m.intervals()[k].lo == lo && m.intervals()[k].hi == hi)
            return set < n ? k + n : k;
    throw std::invalid_argument("intervals are not symmetric under x -> 1-x");
}

}  // namespace

ReducedLp reduce_by_reversal(const LpModel& m) {
    const int n = m.interval_count();
    for (int k = 0; k < n; ++k) {
        int mk = mirror_set(m, k) - n;
        if (m.intervals()[k].prob + m.intervals()[mk].prob != 1)
            throw std::invalid_argument(
                "reversal reduction needs an antisymmetric selection function");
    }

    ReducedLp red;
    // variable orbits: (i,j) ~ (mirror(j), mirror(i))
    red.orbit_of_var.assign(m.var_count(), -1);
    std::vector<std::pair<int, bool>> rep_vars;  // (representative var, self-mirrored)
    for (int v = 0; v < m.var_count(); ++v) {
        if (red.orbit_of_var[v] >= 0) continue;
        auto [i, j] = m.var_sets(v);
        int w = m.var_index(mirror_set(m, j), mirror_set(m, i));
        int id = static_cast<int>(rep_vars.size());
        red.orbit_of_var[v] = id;
        red.orbit_of_var[w] = id;
        rep_vars.push_back({v, v == w});
    }
    // row orbits: bias rows of the S side represent their mirrored partners;
    // the cut row is its own mirror
    red.orbit_of_row.assign(m.row_count(), -1);
    std::vector<int> rep_rows;
    for (int r = 0; r < m.row_count(); ++r) {
        const LpRow& row = m.rows()[r];
        if (row.kind != LpRow::Kind::CutWeight && row.set >= n) continue;
        red.orbit_of_row[r] = static_cast<int>(rep_rows.size());
        rep_rows.push_back(r);
    }
    for (int r = 0; r < m.row_count(); ++r) {
        if (red.orbit_of_row[r] >= 0) continue;
        const LpRow& row = m.rows()[r];
        int ms = mirror_set(m, row.set);
        // lower row of a set pairs with the upper row of its mirror
        LpRow::Kind want = row.kind == LpRow::Kind::BiasLower   ? LpRow::Kind::BiasUpper
                           : row.kind == LpRow::Kind::BiasUpper ? LpRow::Kind::BiasLower
                                                                : LpRow::Kind::BiasPoint;
        for (int q = 0; q < m.row_count(); ++q)
            if (m.rows()[q].set == ms && m.rows()[q].kind == want) {
                red.orbit_of_row[r] = red.orbit_of_row[q];
                break;
            }
        if (red.orbit_of_row[r] < 0) throw std::invalid_argument("row orbit not found");
    }

    StandardLp& lp = red.lp;
    lp.rows = static_cast<int>(rep_rows.size());
    lp.equality.resize(lp.rows);
    lp.b.resize(lp.rows);
    for (int r = 0; r < lp.rows; ++r) {
        lp.equality[r] = m.rows()[rep_rows[r]].equality();
        lp.b[r] = m.rhs(rep_rows[r]);
    }
    lp.cost.assign(rep_vars.size(), Rat(0));
    lp.cols.resize(rep_vars.size());
    for (std::size_t o = 0; o < rep_vars.size(); ++o) {
        auto [v, self] = rep_vars[o];
        int mult = self ? 1 : 2;
        lp.cost[o] = m.objective_coeff(v) * mult;
        // representative-row coefficients summed over both orbit members
        std::vector<Rat> dense(lp.rows, Rat(0));
        auto add = [&](int member) {
            for (const auto& [r, c] : m.column(member)) {
                int rr = red.orbit_of_row[r];
                const LpRow& row = m.rows()[r];
                bool represented = row.kind == LpRow::Kind::CutWeight || row.set < n;
                if (represented) dense[rr] += c;
            }
        };
        add(v);
        if (!self) {
            auto [i, j] = m.var_sets(v);
            add(m.var_index(mirror_set(m, j), mirror_set(m, i)));
        }
        for (int r = 0; r < lp.rows; ++r)
            if (dense[r] != 0) lp.cols[o].push_back({r, dense[r]});
    }
    return red;
}

}  // namespace detail

}  // namespace dicut
