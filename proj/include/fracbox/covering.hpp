#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracbox/completions.hpp"
#include "fracbox/graph.hpp"
#include "fracbox/rational.hpp"

namespace fracbox {

/// The covering program's data: rows are the edges of gbar, columns are
/// hyperedge incidence vectors. M_ij = 1 iff row i's edge lies in column j.
struct CoveringSystem {
    Graph gbar;
    std::vector<std::pair<int, int>> rows; // edge universe of gbar
    std::vector<EdgeSet> columns;          // supports over the rows
};

/// System with maximal hyperedges as columns (the default formulation).
inline CoveringSystem build_system(const Graph& g, const CompletionLimits& limits = {}) {
    Hypergraph hg = maximal_hyperedges(g, limits);
    return CoveringSystem{hg.host, std::move(hg.ground), std::move(hg.hyperedges)};
}

struct LpSolution {
    Rational value;
    std::vector<Rational> x;  // primal, one per column
    std::vector<Rational> y;  // dual, one per row; M^T y <= 1, s * 1^T y = value
    std::vector<int> basis;   // basic column indices at the optimum, sorted
};

struct IlpSolution {
    int value = 0;
    std::vector<int> x; // integer multiplicities, one per column
};

namespace detail {

/// min c^T x subject to A x >= a (a >= 0), B x <= b (b >= 0), x >= 0,
/// with every coefficient rational and c >= 0 (so the minimum is bounded).
struct SimplexProblem {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> ge_rows;
    std::vector<Rational> ge_rhs;
    std::vector<std::vector<Rational>> le_rows;
    std::vector<Rational> le_rhs;
};

struct SimplexOutcome {
    bool feasible = false;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> ge_duals; // reduced costs of the surplus columns
    std::vector<int> basis;         // basic structural columns, sorted
};

/// Two-phase primal tableau simplex over exact rationals. Bland's rule
/// throughout: entering column is the lowest eligible index, leaving row
/// breaks ratio ties toward the lowest basic variable index.
class TableauSimplex {
public:
    explicit TableauSimplex(const SimplexProblem& p) : k_(p.num_vars) {
        const int mg = int(p.ge_rows.size());
        const int ml = int(p.le_rows.size());
        surplus0_ = k_;
        slack0_ = k_ + mg;
        art0_ = k_ + mg + ml;
        cols_ = k_ + mg + ml + mg;
        for (int i = 0; i < mg; ++i) {
            Row row;
            row.coef.assign(cols_, Rational(0));
            for (int j = 0; j < k_; ++j) row.coef[j] = p.ge_rows[i][j];
            row.coef[surplus0_ + i] = -1;
            row.coef[art0_ + i] = 1;
            row.rhs = p.ge_rhs[i];
            row.basic = art0_ + i;
            rows_.push_back(std::move(row));
        }
        for (int i = 0; i < ml; ++i) {
            Row row;
            row.coef.assign(cols_, Rational(0));
            for (int j = 0; j < k_; ++j) row.coef[j] = p.le_rows[i][j];
            row.coef[slack0_ + i] = 1;
            row.rhs = p.le_rhs[i];
            row.basic = slack0_ + i;
            rows_.push_back(std::move(row));
        }
        banned_.assign(cols_, false);
        objective_ = p.objective;
    }

    SimplexOutcome run() {
        // Phase 1: minimize the artificial total.
        cost_.assign(cols_, Rational(0));
        cost_value_ = 0;
        for (const Row& row : rows_) {
            for (int j = 0; j < cols_; ++j)
                if (j < art0_) cost_[j] -= row.basic >= art0_ ? row.coef[j] : Rational(0);
            if (row.basic >= art0_) cost_value_ += row.rhs;
        }
        iterate();
        if (cost_value_ != 0) return SimplexOutcome{};
        evict_artificials();

        // Phase 2: the real objective, artificial columns banned.
        for (int j = art0_; j < cols_; ++j) banned_[j] = true;
        cost_.assign(cols_, Rational(0));
        cost_value_ = 0;
        for (int j = 0; j < k_; ++j) cost_[j] = objective_[j];
        for (const Row& row : rows_) {
            const Rational cb = row.basic < k_ ? objective_[row.basic] : Rational(0);
            if (cb == 0) continue;
            for (int j = 0; j < cols_; ++j) cost_[j] -= cb * row.coef[j];
            cost_value_ += cb * row.rhs;
        }
        iterate();

        SimplexOutcome out;
        out.feasible = true;
        out.value = cost_value_;
        out.x.assign(k_, Rational(0));
        for (const Row& row : rows_)
            if (row.basic < k_) out.x[row.basic] = row.rhs;
        const int mg = cols_ - art0_;
        out.ge_duals.assign(mg, Rational(0));
        for (int i = 0; i < mg; ++i) out.ge_duals[i] = cost_[surplus0_ + i];
        for (const Row& row : rows_)
            if (row.basic < k_) out.basis.push_back(row.basic);
        std::sort(out.basis.begin(), out.basis.end());
        return out;
    }

private:
    struct Row {
        std::vector<Rational> coef;
        Rational rhs;
        int basic = -1;
    };

    void pivot(int r, int s) {
        Row& prow = rows_[r];
        const Rational inv = Rational(1) / prow.coef[s];
        for (int j = 0; j < cols_; ++j) prow.coef[j] *= inv;
        prow.rhs *= inv;
        prow.coef[s] = 1; // exact, but keep canonical
        for (int i = 0; i < int(rows_.size()); ++i) {
            if (i == r) continue;
            const Rational factor = rows_[i].coef[s];
            if (factor == 0) continue;
            for (int j = 0; j < cols_; ++j) rows_[i].coef[j] -= factor * prow.coef[j];
            rows_[i].rhs -= factor * prow.rhs;
        }
        const Rational cf = cost_[s];
        if (cf != 0) {
            for (int j = 0; j < cols_; ++j) cost_[j] -= cf * prow.coef[j];
            cost_value_ += cf * prow.rhs;
        }
        prow.basic = s;
    }

    void iterate() {
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j)
                if (!banned_[j] && cost_[j] < 0) { enter = j; break; }
            if (enter < 0) return;
            int leave = -1;
            Rational best;
            for (int i = 0; i < int(rows_.size()); ++i) {
                if (rows_[i].coef[enter] <= 0) continue;
                const Rational ratio = rows_[i].rhs / rows_[i].coef[enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && rows_[i].basic < rows_[leave].basic)) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("simplex: unbounded objective");
            const int exiting = rows_[leave].basic;
            pivot(leave, enter);
            if (exiting >= art0_) banned_[exiting] = true;
        }
    }

    /// After phase 1, pivot each basic artificial out (degenerate pivot,
    /// its row's rhs is zero). Some non-artificial column is always
    /// available: a row whose structural, surplus and slack entries all
    /// vanished would be the zero combination of original rows, yet it
    /// carries a unit coefficient for its basic artificial.
    void evict_artificials() {
        for (int i = 0; i < int(rows_.size()); ++i) {
            if (rows_[i].basic < art0_) continue;
            int col = -1;
            for (int j = 0; j < art0_; ++j)
                if (rows_[i].coef[j] != 0) { col = j; break; }
            if (col < 0) throw std::logic_error("simplex: artificial stuck in basis");
            pivot(i, col);
        }
    }

    int k_, surplus0_, slack0_, art0_, cols_;
    std::vector<Row> rows_;
    std::vector<Rational> objective_;
    std::vector<Rational> cost_; // reduced-cost row of the current phase
    Rational cost_value_;        // current objective value of the phase
    std::vector<bool> banned_;
};

inline SimplexOutcome exact_simplex(const SimplexProblem& p) {
    return TableauSimplex(p).run();
}

} // namespace detail

/// Rows of the system with no covering column at all; such a row makes the
/// program infeasible for any s >= 1.
inline std::optional<int> uncoverable_row(const CoveringSystem& sys) {
    const int m = int(sys.rows.size());
    std::vector<bool> covered(m, false);
    for (const EdgeSet& col : sys.columns)
        for (EdgeId id : col.to_vector()) covered[id] = true;
    for (int i = 0; i < m; ++i)
        if (!covered[i]) return i;
    return std::nullopt;
}

/// min 1^T x subject to M x >= s, x >= 0, solved exactly. The dual vector
/// satisfies y >= 0, M^T y <= 1 and s * 1^T y = value; primal and dual are
/// verified against the system before returning.
inline LpSolution solve_lp(const CoveringSystem& sys, int rhs_s = 1) {
    if (rhs_s < 1) throw std::invalid_argument("solve_lp: s must be at least 1");
    const int m = int(sys.rows.size());
    const int k = int(sys.columns.size());
    LpSolution sol;
    sol.x.assign(k, Rational(0));
    sol.y.assign(m, Rational(0));
    sol.value = 0;
    if (m == 0) return sol;
    if (auto bad = uncoverable_row(sys))
        throw std::invalid_argument("solve_lp: infeasible row " + std::to_string(*bad) +
                                    " (covered by no column)");

    detail::SimplexProblem p;
    p.num_vars = k;
    p.objective.assign(k, Rational(1));
    p.ge_rows.assign(m, std::vector<Rational>(k, Rational(0)));
    p.ge_rhs.assign(m, Rational(rhs_s));
    for (int j = 0; j < k; ++j)
        for (EdgeId id : sys.columns[j].to_vector()) p.ge_rows[id][j] = 1;

    const auto out = detail::exact_simplex(p);
    if (!out.feasible) throw std::logic_error("solve_lp: coverable system reported infeasible");
    sol.value = out.value;
    sol.x = out.x;
    sol.y = out.ge_duals;
    sol.basis = out.basis;

    // Certify both sides exactly.
    Rational primal_total = 0, dual_total = 0;
    for (const Rational& v : sol.x) {
        if (v < 0) throw std::logic_error("solve_lp: negative primal entry");
        primal_total += v;
    }
    for (const Rational& v : sol.y) {
        if (v < 0) throw std::logic_error("solve_lp: negative dual entry");
        dual_total += v;
    }
    std::vector<Rational> row_sum(m, Rational(0));
    std::vector<Rational> col_sum(k, Rational(0));
    for (int j = 0; j < k; ++j)
        for (EdgeId id : sys.columns[j].to_vector()) {
            row_sum[id] += sol.x[j];
            col_sum[j] += sol.y[id];
        }
    for (int i = 0; i < m; ++i)
        if (row_sum[i] < rhs_s) throw std::logic_error("solve_lp: primal cover violated");
    for (int j = 0; j < k; ++j)
        if (col_sum[j] > 1) throw std::logic_error("solve_lp: dual packing violated");
    if (primal_total != sol.value || Rational(rhs_s) * dual_total != sol.value)
        throw std::logic_error("solve_lp: primal and dual objectives disagree");
    return sol;
}

namespace detail {

/// Feasible integer start: repeatedly take the column covering the most
/// remaining demand, lowest index on ties.
inline std::vector<int> greedy_cover(const CoveringSystem& sys, int rhs_s) {
    const int m = int(sys.rows.size());
    const int k = int(sys.columns.size());
    std::vector<int> need(m, rhs_s);
    std::vector<int> x(k, 0);
    int open = m;
    while (open > 0) {
        int best = -1, best_gain = 0;
        for (int j = 0; j < k; ++j) {
            int gain = 0;
            for (EdgeId id : sys.columns[j].to_vector()) gain += need[id] > 0;
            if (gain > best_gain) {
                best = j;
                best_gain = gain;
            }
        }
        if (best < 0) throw std::logic_error("greedy_cover: uncoverable demand");
        ++x[best];
        for (EdgeId id : sys.columns[best].to_vector())
            if (need[id] > 0 && --need[id] == 0) --open;
    }
    return x;
}

} // namespace detail

/// min 1^T x subject to M x >= s, x integer, 0 <= x <= s, by depth-first
/// branch and bound on the exact LP relaxation. Branches on the variable
/// with the largest fractional part (lowest index on ties), rounding up
/// first; the incumbent starts from the greedy cover.
inline IlpSolution solve_ilp(const CoveringSystem& sys, int rhs_s = 1) {
    if (rhs_s < 1) throw std::invalid_argument("solve_ilp: s must be at least 1");
    const int m = int(sys.rows.size());
    const int k = int(sys.columns.size());
    IlpSolution best;
    best.x.assign(k, 0);
    if (m == 0) return best;
    if (auto bad = uncoverable_row(sys))
        throw std::invalid_argument("solve_ilp: infeasible row " + std::to_string(*bad) +
                                    " (covered by no column)");

    best.x = detail::greedy_cover(sys, rhs_s);
    best.value = std::accumulate(best.x.begin(), best.x.end(), 0);

    std::vector<int> lower(k, 0), upper(k, rhs_s);
    auto descend = [&](auto&& self) -> void {
        // Residual program after fixing x >= lower.
        std::vector<int> residual(m, rhs_s);
        for (int j = 0; j < k; ++j)
            if (lower[j] > 0)
                for (EdgeId id : sys.columns[j].to_vector()) residual[id] -= lower[j];
        const int base = std::accumulate(lower.begin(), lower.end(), 0);
        if (base >= best.value) return;

        std::vector<int> live_rows;
        int max_residual = 0;
        for (int i = 0; i < m; ++i)
            if (residual[i] > 0) {
                live_rows.push_back(i);
                max_residual = std::max(max_residual, residual[i]);
            }
        if (live_rows.empty()) {
            best.value = base;
            best.x = lower;
            return;
        }

        std::vector<int> live_cols;
        for (int j = 0; j < k; ++j)
            if (upper[j] > lower[j]) live_cols.push_back(j);

        detail::SimplexProblem p;
        p.num_vars = int(live_cols.size());
        p.objective.assign(p.num_vars, Rational(1));
        p.ge_rows.assign(live_rows.size(), std::vector<Rational>(p.num_vars, Rational(0)));
        for (int r = 0; r < int(live_rows.size()); ++r)
            p.ge_rhs.push_back(Rational(residual[live_rows[r]]));
        std::vector<int> row_of(m, -1);
        for (int r = 0; r < int(live_rows.size()); ++r) row_of[live_rows[r]] = r;
        for (int c = 0; c < p.num_vars; ++c)
            for (EdgeId id : sys.columns[live_cols[c]].to_vector())
                if (row_of[id] >= 0) p.ge_rows[row_of[id]][c] = 1;
        for (int c = 0; c < p.num_vars; ++c) {
            const int room = upper[live_cols[c]] - lower[live_cols[c]];
            if (room < max_residual) { // otherwise the bound can never bind
                std::vector<Rational> row(p.num_vars, Rational(0));
                row[c] = 1;
                p.le_rows.push_back(std::move(row));
                p.le_rhs.push_back(Rational(room));
            }
        }

        const auto out = detail::exact_simplex(p);
        if (!out.feasible) return;
        const Rational node_bound = Rational(base) + out.value;
        if (rational_ceil(node_bound) >= best.value) return;

        int frac_col = -1;
        Rational frac_best = 0;
        for (int c = 0; c < p.num_vars; ++c) {
            const Rational f = fractional_part(out.x[c]);
            if (f > frac_best) {
                frac_best = f;
                frac_col = c;
            }
        }
        if (frac_col < 0) { // integral relaxation solves this node outright
            best.value = static_cast<int>(rational_ceil(node_bound));
            best.x = lower;
            for (int c = 0; c < p.num_vars; ++c)
                best.x[live_cols[c]] += static_cast<int>(rational_floor(out.x[c]));
            return;
        }

        const int j = live_cols[frac_col];
        const Rational split = Rational(lower[j]) + out.x[frac_col];
        const int keep_lower = lower[j], keep_upper = upper[j];
        lower[j] = static_cast<int>(rational_ceil(split));
        self(self);
        lower[j] = keep_lower;
        upper[j] = static_cast<int>(rational_floor(split));
        self(self);
        upper[j] = keep_upper;
    };
    descend(descend);

    // The incumbent is feasible and optimal; certify the cover exactly.
    std::vector<int> check(m, 0);
    for (int j = 0; j < k; ++j)
        for (EdgeId id : sys.columns[j].to_vector()) check[id] += best.x[j];
    for (int i = 0; i < m; ++i)
        if (check[i] < rhs_s) throw std::logic_error("solve_ilp: incumbent fails to cover");
    return best;
}

/// The uniform dual point y = (1/e, ..., 1/e) with e the largest column
/// size; feasible for the dual packing program, with objective m/e.
inline std::pair<std::vector<Rational>, Rational> dual_uniform_point(const CoveringSystem& sys) {
    const int m = int(sys.rows.size());
    if (m == 0) return {std::vector<Rational>{}, Rational(0)};
    int e = 0;
    for (const EdgeSet& col : sys.columns) e = std::max(e, col.count());
    if (e == 0)
        throw std::invalid_argument("dual_uniform_point: no nonempty column");
    const Rational unit = Rational(1) / e;
    for (const EdgeSet& col : sys.columns)
        if (Rational(col.count()) * unit > 1)
            throw std::logic_error("dual_uniform_point: packing constraint violated");
    return {std::vector<Rational>(m, unit), Rational(m) / e};
}

} // namespace fracbox
