#include <algorithm>
#include <numeric>
#include <vector>

#include "dicut/errors.hpp"
#include "dicut/lp.hpp"

namespace dicut {

namespace detail {

namespace {

// Column layout of the standard form, mirroring the floating tableau:
// structural | slack (inequality rows in order) | artificial (equality rows).
struct Layout {
    int n_struct, n_slack = 0, n_art = 0;
    std::vector<int> row_of_slack, row_of_art;

    explicit Layout(const StandardLp& lp) : n_struct(static_cast<int>(lp.cols.size())) {
        for (int r = 0; r < lp.rows; ++r) {
            if (!lp.equality[r])
                row_of_slack.push_back(r);
            else
                row_of_art.push_back(r);
        }
        n_slack = static_cast<int>(row_of_slack.size());
        n_art = static_cast<int>(row_of_art.size());
    }

    int total() const { return n_struct + n_slack + n_art; }
    bool is_artificial(int col) const { return col >= n_struct + n_slack; }

    std::vector<std::pair<int, Rat>> column(const StandardLp& lp, int col) const {
        if (col < n_struct) return lp.cols[col];
        if (col < n_struct + n_slack) return {{row_of_slack[col - n_struct], Rat(1)}};
        return {{row_of_art[col - n_struct - n_slack], Rat(1)}};
    }

    Rat cost(const StandardLp& lp, int col) const {
        return col < n_struct ? lp.cost[col] : Rat(0);
    }
};

// Exact LU with row pivoting and a sparsity-driven column preorder. The
// basis matrices here are slack-heavy, so most steps are unit pivots.
class ExactLu {
public:
    ExactLu(int m, std::vector<std::vector<std::pair<int, Rat>>> cols) : m_(m) {
        a_.assign(m, std::vector<Rat>(m, Rat(0)));
        std::vector<std::size_t> nnz(m);
        for (int c = 0; c < m; ++c) {
            nnz[c] = cols[c].size();
            for (const auto& [r, v] : cols[c]) a_[r][c] = v;
        }
        cperm_.resize(m);
        std::iota(cperm_.begin(), cperm_.end(), 0);
        std::stable_sort(cperm_.begin(), cperm_.end(),
                         [&](int x, int y) { return nnz[x] < nnz[y]; });
        rperm_.reserve(m);
        step_of_row_.assign(m, m);
        std::vector<char> used(m, 0);
        for (int k = 0; k < m; ++k) {
            int col = cperm_[k];
            int pivot = -1;
            for (int r = 0; r < m; ++r) {
                if (used[r] || a_[r][col] == 0) continue;
                if (pivot < 0) pivot = r;
                if (a_[r][col] == 1 || a_[r][col] == -1) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) {
                ok_ = false;
                return;
            }
            used[pivot] = 1;
            step_of_row_[pivot] = k;
            rperm_.push_back(pivot);
            const Rat& pv = a_[pivot][col];
            for (int r = 0; r < m; ++r) {
                if (used[r] || a_[r][col] == 0) continue;
                Rat f = a_[r][col] / pv;
                for (int j = k + 1; j < m; ++j) {
                    int c2 = cperm_[j];
                    if (a_[pivot][c2] != 0) a_[r][c2] -= f * a_[pivot][c2];
                }
                a_[r][col] = f;  // L factor
            }
        }
    }

    bool ok() const { return ok_; }

    // B x = rhs (rhs indexed by row, x by original column)
    std::vector<Rat> solve(std::vector<Rat> z) const {
        for (int k = 0; k < m_; ++k) {
            const Rat& zk = z[rperm_[k]];
            if (zk == 0) continue;
            for (int r = 0; r < m_; ++r)
                if (step_of_row_[r] > k && a_[r][cperm_[k]] != 0)
                    z[r] -= a_[r][cperm_[k]] * zk;
        }
        std::vector<Rat> x(m_);
        for (int k = m_ - 1; k >= 0; --k) {
            Rat acc = z[rperm_[k]];
            for (int j = k + 1; j < m_; ++j) {
                const Rat& u = a_[rperm_[k]][cperm_[j]];
                if (u != 0) acc -= u * x[cperm_[j]];
            }
            x[cperm_[k]] = acc / a_[rperm_[k]][cperm_[k]];
        }
        return x;
    }

    // Bᵀ y = c (c indexed by original column, y by row)
    std::vector<Rat> solve_transposed(const std::vector<Rat>& c) const {
        std::vector<Rat> w(m_);
        for (int k = 0; k < m_; ++k) {
            Rat acc = c[cperm_[k]];
            for (int j = 0; j < k; ++j) {
                const Rat& u = a_[rperm_[j]][cperm_[k]];
                if (u != 0) acc -= u * w[j];
            }
            w[k] = acc / a_[rperm_[k]][cperm_[k]];
        }
        std::vector<Rat> y(m_);
        for (int k = m_ - 1; k >= 0; --k) {
            Rat acc = std::move(w[k]);
            for (int j = k + 1; j < m_; ++j) {
                const Rat& l = a_[rperm_[j]][cperm_[k]];
                if (l != 0) acc -= l * y[rperm_[j]];
            }
            y[rperm_[k]] = acc;
        }
        return y;
    }

private:
    int m_;
    std::vector<std::vector<Rat>> a_;
    std::vector<int> rperm_, cperm_, step_of_row_;
    bool ok_ = true;
};

std::vector<Rat> basic_costs(const StandardLp& lp, const Layout& lay,
                             const std::vector<int>& basis) {
    std::vector<Rat> cb(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) cb[i] = lay.cost(lp, basis[i]);
    return cb;
}

ExactLu factor_basis_strict(const StandardLp& lp, const Layout& lay,
                            const std::vector<int>& basis) {
    std::vector<std::vector<std::pair<int, Rat>>> cols;
    cols.reserve(basis.size());
    for (int b : basis) cols.push_back(lay.column(lp, b));
    ExactLu lu(lp.rows, std::move(cols));
    if (!lu.ok()) throw solver_error("numerically singular basis");
    return lu;
}

// Replaces exactly-dependent basis columns (a float-drift artifact) by the
// unit column of an uncovered row. Greedy completion always succeeds because
// the unit columns span everything.
void repair_basis(const StandardLp& lp, const Layout& lay, std::vector<int>& basis) {
    const int m = lp.rows;
    struct EchelonRow {
        std::vector<Rat> v;
        int lead;
    };
    std::vector<EchelonRow> echelon;
    auto reduce = [&](std::vector<Rat> v) -> EchelonRow {
        for (const EchelonRow& e : echelon) {
            if (v[e.lead] == 0) continue;
            Rat f = v[e.lead] / e.v[e.lead];
            for (int c = 0; c < m; ++c)
                if (e.v[c] != 0) v[c] -= f * e.v[c];
        }
        int lead = -1;
        for (int c = 0; c < m && lead < 0; ++c)
            if (v[c] != 0) lead = c;
        return {std::move(v), lead};
    };
    auto dense_col = [&](int col) {
        std::vector<Rat> v(m, Rat(0));
        for (const auto& [r, val] : lay.column(lp, col)) v[r] = val;
        return v;
    };

    std::vector<int> open_slots;
    for (int k = 0; k < m; ++k) {
        EchelonRow e = reduce(dense_col(basis[k]));
        if (e.lead < 0)
            open_slots.push_back(k);
        else
            echelon.push_back(std::move(e));
    }
    std::size_t next = 0;
    for (int r = 0; r < m && next < open_slots.size(); ++r) {
        int col = lp.equality[r] ? -1 : -2;  // resolved below
        // every row owns exactly one unit column: its slack or artificial
        for (int s = 0; s < lay.n_slack; ++s)
            if (lay.row_of_slack[s] == r) col = lay.n_struct + s;
        for (int a = 0; a < lay.n_art; ++a)
            if (lay.row_of_art[a] == r) col = lay.n_struct + lay.n_slack + a;
        EchelonRow e = reduce(dense_col(col));
        if (e.lead < 0) continue;  // row already covered
        echelon.push_back(std::move(e));
        basis[open_slots[next++]] = col;
    }
    if (next < open_slots.size()) throw solver_error("could not complete a singular basis");
}

// Factor the basis, repairing exact singularity once if permitted.
ExactLu factor_basis(const StandardLp& lp, const Layout& lay, std::vector<int>& basis) {
    std::vector<std::vector<std::pair<int, Rat>>> cols;
    cols.reserve(basis.size());
    for (int b : basis) cols.push_back(lay.column(lp, b));
    ExactLu lu(lp.rows, std::move(cols));
    if (lu.ok()) return lu;
    repair_basis(lp, lay, basis);
    return factor_basis_strict(lp, lay, basis);
}

Rat sparse_dot(const std::vector<Rat>& dense, const std::vector<std::pair<int, Rat>>& sparse) {
    Rat acc = 0;
    for (const auto& [i, v] : sparse) acc += dense[i] * v;
    return acc;
}

}  // namespace

int exact_polish(const StandardLp& lp, std::vector<int>& basis, int max_pivots) {
    Layout lay(lp);
    int pivots = 0;
    std::vector<char> stuck_row(lp.rows, 0);  // redundant rows keep a zero artificial
    for (;;) {
        ExactLu lu = factor_basis(lp, lay, basis);
        // x indexed by basis position: basis column k solves row system
        std::vector<Rat> xb = lu.solve(lp.b);
        std::vector<char> in_basis(lay.total(), 0);
        for (int b : basis) in_basis[b] = 1;

        int neg_pos = -1;
        for (int k = 0; k < lp.rows; ++k)
            if (xb[k] < 0 && (neg_pos < 0 || basis[k] < basis[neg_pos])) neg_pos = k;

        int art_pos = -1;  // basic artificial that must leave
        if (neg_pos < 0) {
            for (int k = 0; k < lp.rows; ++k)
                if (lay.is_artificial(basis[k]) && !stuck_row[k] &&
                    (art_pos < 0 || xb[k] > xb[art_pos]))
                    art_pos = k;
            if (art_pos >= 0 && xb[art_pos] == 0) {
                // drive a zero artificial out with any degenerate pivot
                std::vector<Rat> e(lp.rows, Rat(0));
                e[art_pos] = 1;
                std::vector<Rat> rho = lu.solve_transposed(e);
                int enter = -1;
                for (int j = 0; j < lay.n_struct + lay.n_slack && enter < 0; ++j)
                    if (!in_basis[j] && sparse_dot(rho, lay.column(lp, j)) != 0) enter = j;
                if (enter < 0) {
                    stuck_row[art_pos] = 1;  // row is redundant under this basis
                    continue;
                }
                basis[art_pos] = enter;
                if (++pivots > max_pivots)
                    throw solver_error("exact polish exceeded the pivot budget");
                continue;
            }
        }

        // cost vector of the current task: drive positive artificials to zero
        // first (exact phase 1), then the real objective
        const bool phase1 = art_pos >= 0 && xb[art_pos] > 0;
        auto cost_of = [&](int col) {
            if (phase1) return lay.is_artificial(col) ? Rat(1) : Rat(0);
            return lay.cost(lp, col);
        };
        std::vector<Rat> cb(lp.rows);
        for (int k = 0; k < lp.rows; ++k) cb[k] = cost_of(basis[k]);
        std::vector<Rat> y = lu.solve_transposed(cb);

        if (neg_pos < 0) {
            // primal feasible: Bland entering on exact reduced costs
            int enter = -1;
            for (int j = 0; j < lay.n_struct + lay.n_slack; ++j) {
                if (in_basis[j]) continue;
                if (cost_of(j) - sparse_dot(y, lay.column(lp, j)) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) {
                if (phase1) throw solver_error("model is infeasible in exact arithmetic");
                return pivots;  // exactly optimal
            }
            std::vector<Rat> w = lu.solve([&] {
                std::vector<Rat> dense(lp.rows, Rat(0));
                for (const auto& [r, v] : lay.column(lp, enter)) dense[r] = v;
                return dense;
            }());
            int leave = -1;
            Rat best;
            for (int k = 0; k < lp.rows; ++k) {
                if (!(w[k] > 0)) continue;
                Rat ratio = xb[k] / w[k];
                if (leave < 0 || ratio < best || (ratio == best && basis[k] < basis[leave])) {
                    leave = k;
                    best = ratio;
                }
            }
            if (leave < 0) throw solver_error("polish found an unbounded direction");
            basis[leave] = enter;
        } else {
            // repair exact primal infeasibility with a dual-style pivot on the
            // most negative row
            std::vector<Rat> e(lp.rows, Rat(0));
            e[neg_pos] = 1;
            std::vector<Rat> rho = lu.solve_transposed(e);
            int enter = -1;
            Rat best;
            for (int j = 0; j < lay.n_struct + lay.n_slack; ++j) {
                if (in_basis[j]) continue;
                auto col = lay.column(lp, j);
                Rat alpha = sparse_dot(rho, col);
                if (!(alpha < 0)) continue;
                Rat d = cost_of(j) - sparse_dot(y, col);
                Rat ratio = d / -alpha;
                if (enter < 0 || ratio < best || (ratio == best && j < enter)) {
                    enter = j;
                    best = ratio;
                }
            }
            if (enter < 0) throw solver_error("polish could not repair primal infeasibility");
            basis[neg_pos] = enter;
        }
        if (++pivots > max_pivots) throw solver_error("exact polish exceeded the pivot budget");
    }
}

ExactBasic exact_basic_solution(const StandardLp& lp, const std::vector<int>& basis) {
    Layout lay(lp);
    if (static_cast<int>(basis.size()) != lp.rows)
        throw certificate_error("basis size does not match the row count");
    for (int b : basis)
        if (b < 0 || b >= lay.total()) throw certificate_error("basis column out of range");
    ExactLu lu = factor_basis_strict(lp, lay, basis);
    std::vector<Rat> xb = lu.solve(lp.b);
    ExactBasic out;
    out.x.assign(lay.n_struct, Rat(0));
    for (int k = 0; k < lp.rows; ++k) {
        if (basis[k] < lay.n_struct) out.x[basis[k]] = xb[k];
        if (lay.is_artificial(basis[k]) && xb[k] != 0)
            throw certificate_error("artificial variable basic at a nonzero value");
    }
    out.y = lu.solve_transposed(basic_costs(lp, lay, basis));
    return out;
}

}  // namespace detail

namespace {

// A singular or malformed basis is a certification failure, not a solver one.
detail::ExactBasic basic_or_certificate_error(const detail::StandardLp& lp,
                                              const std::vector<int>& basis) {
    try {
        return detail::exact_basic_solution(lp, basis);
    } catch (const solver_error& e) {
        throw certificate_error(e.what());
    }
}

}  // namespace

Certified certify_values(const LpModel& m, const std::vector<Rat>& primal,
                         const std::vector<Rat>& dual) {
    if (static_cast<int>(primal.size()) != m.var_count())
        throw certificate_error("primal vector size mismatch");
    if (static_cast<int>(dual.size()) != m.row_count())
        throw certificate_error("dual vector size mismatch");

    for (const Rat& v : primal)
        if (v < 0) throw certificate_error("primal violates nonnegativity");

    std::vector<Rat> row_activity(m.row_count(), Rat(0));
    Rat primal_obj = 0;
    for (int v = 0; v < m.var_count(); ++v) {
        if (primal[v] == 0) continue;
        primal_obj += m.objective_coeff(v) * primal[v];
        for (const auto& [r, c] : m.column(v)) row_activity[r] += c * primal[v];
    }
    for (int r = 0; r < m.row_count(); ++r) {
        const Rat rhs = m.rhs(r);
        if (m.rows()[r].equality()) {
            if (row_activity[r] != rhs) throw certificate_error("primal violates an equality row");
        } else if (row_activity[r] > rhs) {
            throw certificate_error("primal violates an inequality row");
        }
    }

    // dual feasibility: y_r <= 0 on inequality rows (their slack columns),
    // and c_j - y·A_j >= 0 on every structural column
    for (int r = 0; r < m.row_count(); ++r)
        if (!m.rows()[r].equality() && dual[r] > 0)
            throw certificate_error("dual violates an inequality-row sign constraint");
    for (int v = 0; v < m.var_count(); ++v) {
        Rat d = m.objective_coeff(v);
        for (const auto& [r, c] : m.column(v)) d -= dual[r] * c;
        if (d < 0) throw certificate_error("dual violates a reduced-cost constraint");
    }

    Certified out;
    out.primal = primal;
    out.dual = dual;
    out.upper = primal_obj;
    out.lower = 0;
    for (int r = 0; r < m.row_count(); ++r) out.lower += dual[r] * m.rhs(r);
    return out;
}

Certified certify(const LpModel& m, const LpSolution& s) {
    if (s.status != SolveStatus::Optimal)
        throw certificate_error("cannot certify a non-optimal solution");
    detail::StandardLp lp = detail::to_standard(m);
    detail::ExactBasic eb = basic_or_certificate_error(lp, s.basis);
    return certify_values(m, eb.x, eb.y);
}

LpSolution solve(const LpModel& m, const SimplexOptions& opts) {
    detail::StandardLp lp = detail::to_standard(m);
    detail::StandardSolution ss = detail::solve_standard(lp, opts);
    LpSolution out;
    out.status = ss.status;
    out.iterations = ss.iterations;
    out.basis = ss.basis;
    out.objective = ss.objective;
    if (ss.status != SolveStatus::Optimal) return out;

    out.polish_pivots = detail::exact_polish(lp, out.basis, opts.max_polish_pivots);
    detail::ExactBasic eb = detail::exact_basic_solution(lp, out.basis);
    out.primal.resize(m.var_count());
    for (int v = 0; v < m.var_count(); ++v) out.primal[v] = rat_d(eb.x[v]);
    out.dual.resize(m.row_count());
    Rat obj = 0;
    for (int v = 0; v < m.var_count(); ++v)
        if (eb.x[v] != 0) obj += m.objective_coeff(v) * eb.x[v];
    out.objective = rat_d(obj);
    for (int r = 0; r < m.row_count(); ++r) out.dual[r] = rat_d(eb.y[r]);
    return out;
}

}  // namespace dicut
