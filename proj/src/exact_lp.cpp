#include "tsirelson/exact_lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsirelson {

namespace {

// Slack dictionary for max c.x, Ax <= b, x >= 0.  Each basic variable is
// expressed as an affine function of the nonbasic ones:
//   basic[i] = con[i] + sum_j coef[i][j] * x_{nonbasic[j]}
// A dictionary is feasible when all con[i] >= 0.  Variable ids order the
// Bland rule: structural first, then slacks, then the phase-one artificial.
struct Dictionary {
    int nvars;                  // structural variable count
    std::vector<int> nonbasic;  // ids of nonbasic variables (column order)
    std::vector<int> basic;     // ids of basic variables (row order)
    std::vector<Rational> con;
    std::vector<std::vector<Rational>> coef;
    Rational obj_const;
    std::vector<Rational> obj;  // objective coefficients per column

    void pivot(int row, int col) {
        const Rational d = coef[row][col];
        const int entering = nonbasic[col];
        nonbasic[col] = basic[row];
        basic[row] = entering;

        // rewrite the pivot row as the definition of the entering variable
        std::vector<Rational>& prow = coef[row];
        Rational pc = -con[row] / d;
        for (size_t j = 0; j < prow.size(); ++j) {
            if (static_cast<int>(j) == col)
                prow[j] = Rational(1) / d;
            else
                prow[j] = -prow[j] / d;
        }
        con[row] = std::move(pc);

        for (size_t i = 0; i < coef.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            Rational f = coef[i][col];
            if (f == 0) continue;
            coef[i][col] = 0;
            con[i] += f * con[row];
            for (size_t j = 0; j < prow.size(); ++j) coef[i][j] += f * prow[j];
        }
        Rational f = obj[col];
        if (f != 0) {
            obj[col] = 0;
            obj_const += f * con[row];
            for (size_t j = 0; j < prow.size(); ++j) obj[j] += f * prow[j];
        }
    }

    // Bland: entering = eligible column of smallest variable id; leaving =
    // tightest row, ties by smallest variable id.  Returns optimal or
    // unbounded.
    LpStatus run() {
        for (;;) {
            int col = -1;
            for (size_t j = 0; j < nonbasic.size(); ++j)
                if (obj[j] > 0 && (col < 0 || nonbasic[j] < nonbasic[col]))
                    col = static_cast<int>(j);
            if (col < 0) return LpStatus::optimal;

            int row = -1;
            Rational limit;
            for (size_t i = 0; i < basic.size(); ++i) {
                if (coef[i][col] >= 0) continue;
                Rational t = con[i] / -coef[i][col];
                if (row < 0 || t < limit || (t == limit && basic[i] < basic[row])) {
                    row = static_cast<int>(i);
                    limit = std::move(t);
                }
            }
            if (row < 0) return LpStatus::unbounded;
            pivot(row, col);
        }
    }

    Rational value_of(int var) const {
        for (size_t i = 0; i < basic.size(); ++i)
            if (basic[i] == var) return con[i];
        return Rational(0);
    }
};

}  // namespace

LpSolution solve_lp_exact(const ExactLp& lp) {
    const int n = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.rows.size());
    for (const auto& r : lp.rows)
        if (static_cast<int>(r.coeffs.size()) > n)
            throw std::invalid_argument("constraint row wider than objective");

    // free x_j = u_j - v_j with u, v >= 0; ids: u_j = 2j, v_j = 2j+1,
    // slack i = 2n + i, artificial = 2n + m
    const int cols = 2 * n;
    const int art = 2 * n + m;

    Dictionary dict;
    dict.nvars = n;
    dict.nonbasic.resize(cols);
    for (int j = 0; j < cols; ++j) dict.nonbasic[j] = j;
    dict.basic.resize(m);
    dict.con.resize(m);
    dict.coef.assign(m, std::vector<Rational>(cols, Rational(0)));
    bool feasible = true;
    for (int i = 0; i < m; ++i) {
        dict.basic[i] = 2 * n + i;
        dict.con[i] = lp.rows[i].bound;
        if (dict.con[i] < 0) feasible = false;
        for (int j = 0; j < static_cast<int>(lp.rows[i].coeffs.size()); ++j) {
            dict.coef[i][2 * j] = -lp.rows[i].coeffs[j];
            dict.coef[i][2 * j + 1] = lp.rows[i].coeffs[j];
        }
    }

    auto install_objective = [&] {
        dict.obj_const = 0;
        dict.obj.assign(dict.nonbasic.size(), Rational(0));
        for (int j = 0; j < n; ++j) {
            const Rational& c = lp.objective[j];
            if (c == 0) continue;
            for (int s = 0; s < 2; ++s) {
                const int var = 2 * j + s;
                const Rational cc = s == 0 ? c : -c;
                bool placed = false;
                for (size_t col = 0; col < dict.nonbasic.size(); ++col)
                    if (dict.nonbasic[col] == var) {
                        dict.obj[col] += cc;
                        placed = true;
                        break;
                    }
                if (placed) continue;
                for (size_t row = 0; row < dict.basic.size(); ++row)
                    if (dict.basic[row] == var) {
                        dict.obj_const += cc * dict.con[row];
                        for (size_t col = 0; col < dict.nonbasic.size(); ++col)
                            dict.obj[col] += cc * dict.coef[row][col];
                        break;
                    }
            }
        }
    };

    if (!feasible) {
        // phase one: maximize -x0 with x0 added to every row
        for (int i = 0; i < m; ++i) dict.coef[i].push_back(Rational(1));
        dict.nonbasic.push_back(art);
        dict.obj.assign(dict.nonbasic.size(), Rational(0));
        dict.obj.back() = -1;
        dict.obj_const = 0;

        int worst = 0;
        for (int i = 1; i < m; ++i)
            if (dict.con[i] < dict.con[worst]) worst = i;
        dict.pivot(worst, static_cast<int>(dict.nonbasic.size()) - 1);

        if (dict.run() != LpStatus::optimal || dict.obj_const != 0)
            return {LpStatus::infeasible, Rational(0), {}};

        // drive the artificial out of the basis if it lingers at zero
        for (size_t i = 0; i < dict.basic.size(); ++i) {
            if (dict.basic[i] != art) continue;
            int col = -1;
            for (size_t j = 0; j < dict.nonbasic.size(); ++j)
                if (dict.coef[i][j] != 0 && dict.nonbasic[j] != art) {
                    col = static_cast<int>(j);
                    break;
                }
            if (col < 0) throw std::runtime_error("degenerate artificial row");
            dict.pivot(static_cast<int>(i), col);
            break;
        }
        // delete the artificial column
        int acol = -1;
        for (size_t j = 0; j < dict.nonbasic.size(); ++j)
            if (dict.nonbasic[j] == art) acol = static_cast<int>(j);
        dict.nonbasic.erase(dict.nonbasic.begin() + acol);
        for (auto& row : dict.coef) row.erase(row.begin() + acol);
        install_objective();
    } else {
        install_objective();
    }

    if (dict.run() == LpStatus::unbounded) return {LpStatus::unbounded, Rational(0), {}};

    std::vector<Rational> point(n);
    for (int j = 0; j < n; ++j) point[j] = dict.value_of(2 * j) - dict.value_of(2 * j + 1);
    return {LpStatus::optimal, dict.obj_const, std::move(point)};
}

}  // namespace tsirelson
