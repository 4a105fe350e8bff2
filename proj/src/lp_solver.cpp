#include "steinerlab/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "steinerlab/errors.hpp"

namespace steinerlab {

int SimplexLP::add_variable(double objective_coeff, bool nonnegative) {
    vars_.push_back({objective_coeff, nonnegative});
    return static_cast<int>(vars_.size()) - 1;
}

void SimplexLP::add_le(std::vector<std::pair<int, double>> terms, double rhs) {
    rows_.push_back({std::move(terms), rhs});
}

SimplexLP::Solution SimplexLP::minimize() const {
    // Column layout: split columns for the user variables (x = pos - neg for
    // free ones), then one slack per row, then artificials as needed.
    const int nu = static_cast<int>(vars_.size());
    std::vector<int> pos_col(nu), neg_col(nu, -1);
    int ncols = 0;
    for (int i = 0; i < nu; ++i) {
        pos_col[i] = ncols++;
        if (!vars_[i].nonneg) neg_col[i] = ncols++;
    }
    const int slack0 = ncols;
    const int m = static_cast<int>(rows_.size());
    ncols += m;

    std::vector<int> art_col(m, -1);
    int total = ncols;
    std::vector<std::vector<double>> T(m);
    std::vector<int> basis(m);
    {
        std::vector<std::vector<double>> A(m, std::vector<double>(ncols, 0.0));
        std::vector<double> b(m, 0.0);
        for (int r = 0; r < m; ++r) {
            for (const auto& [var, coeff] : rows_[r].terms) {
                A[r][pos_col[var]] += coeff;
                if (neg_col[var] >= 0) A[r][neg_col[var]] -= coeff;
            }
            A[r][slack0 + r] = 1.0;
            b[r] = rows_[r].rhs;
            if (b[r] < 0.0) {
                for (double& v : A[r]) v = -v;
                b[r] = -b[r];
            }
            if (A[r][slack0 + r] < 0.0) art_col[r] = total++;
        }
        for (int r = 0; r < m; ++r) {
            T[r].assign(total + 1, 0.0);
            std::copy(A[r].begin(), A[r].end(), T[r].begin());
            T[r][total] = b[r];
            if (art_col[r] >= 0) {
                T[r][art_col[r]] = 1.0;
                basis[r] = art_col[r];
            } else {
                basis[r] = slack0 + r;
            }
        }
    }

    constexpr double kEps = 1e-9;
    int iterations = 0;
    std::vector<double> zrow(total + 1, 0.0);

    auto pivot = [&](int row, int col) {
        const double pv = T[row][col];
        for (double& v : T[row]) v /= pv;
        for (int r = 0; r < m; ++r) {
            if (r == row) continue;
            const double f = T[r][col];
            if (f == 0.0) continue;
            for (int c = 0; c <= total; ++c) T[r][c] -= f * T[row][c];
        }
        const double zf = zrow[col];
        if (zf != 0.0)
            for (int c = 0; c <= total; ++c) zrow[c] -= zf * T[row][c];
        basis[row] = col;
        ++iterations;
    };

    auto run_phase = [&](const std::vector<double>& cost) -> bool {
        for (int c = 0; c <= total; ++c) zrow[c] = (c < total) ? cost[c] : 0.0;
        for (int r = 0; r < m; ++r) {
            const double cb = cost[basis[r]];
            if (cb == 0.0) continue;
            for (int c = 0; c <= total; ++c) zrow[c] -= cb * T[r][c];
        }
        for (int iter = 0; iter < 20000; ++iter) {
            int enter = -1;
            const bool bland = iter > 5000;
            double best = -kEps;
            for (int c = 0; c < total; ++c) {
                if (zrow[c] < -kEps) {
                    if (bland) {
                        enter = c;
                        break;
                    }
                    if (zrow[c] < best) {
                        best = zrow[c];
                        enter = c;
                    }
                }
            }
            if (enter < 0) return true;  // optimal
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m; ++r) {
                if (T[r][enter] > kEps) {
                    const double ratio = T[r][total] / T[r][enter];
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 && (leave < 0 || basis[r] < basis[leave]))) {
                        best_ratio = std::min(best_ratio, ratio);
                        leave = r;
                    }
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
        }
        return false;  // iteration cap
    };

    Solution sol;

    // Phase 1: minimize the artificial sum.
    bool need_phase1 = false;
    std::vector<double> cost1(total, 0.0);
    for (int r = 0; r < m; ++r)
        if (art_col[r] >= 0) {
            cost1[art_col[r]] = 1.0;
            need_phase1 = true;
        }
    if (need_phase1) {
        if (!run_phase(cost1)) return sol;
        double infeas = 0.0;
        for (int r = 0; r < m; ++r)
            if (basis[r] >= ncols) infeas += T[r][total];
        if (infeas > 1e-7) return sol;
        // drive any residual artificials out of the basis
        for (int r = 0; r < m; ++r) {
            if (basis[r] < ncols) continue;
            int col = -1;
            for (int c = 0; c < ncols; ++c)
                if (std::fabs(T[r][c]) > kEps) {
                    col = c;
                    break;
                }
            if (col >= 0) pivot(r, col);
        }
    }

    // Phase 2 with artificial columns penalized out of the basis.
    std::vector<double> cost2(total, 0.0);
    for (int i = 0; i < nu; ++i) {
        cost2[pos_col[i]] = vars_[i].cost;
        if (neg_col[i] >= 0) cost2[neg_col[i]] = -vars_[i].cost;
    }
    for (int c = ncols; c < total; ++c) cost2[c] = 1e9;
    if (!run_phase(cost2)) return sol;

    std::vector<double> values(total, 0.0);
    for (int r = 0; r < m; ++r) values[basis[r]] = T[r][total];
    sol.feasible = true;
    sol.x.resize(nu);
    sol.value = 0.0;
    for (int i = 0; i < nu; ++i) {
        sol.x[i] = values[pos_col[i]] - (neg_col[i] >= 0 ? values[neg_col[i]] : 0.0);
        sol.value += vars_[i].cost * sol.x[i];
    }
    sol.iterations = iterations;
    return sol;
}

}  // namespace steinerlab
