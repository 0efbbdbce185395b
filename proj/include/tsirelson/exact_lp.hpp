#pragma once

#include "tsirelson/rational.hpp"

#include <vector>

namespace tsirelson {

struct LpRow {
    std::vector<Rational> coeffs;  // padded with zeros up to the variable count
    Rational bound;                // coeffs . x <= bound
};

// maximize objective . x subject to the rows, x unrestricted in sign
struct ExactLp {
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status;
    Rational value;               // meaningful only when optimal
    std::vector<Rational> point;  // an optimal vertex of the lifted standard form
};

// Exact rational two-phase simplex on the slack dictionary, Bland's rule
// for anti-cycling.  Free variables are split internally.
LpSolution solve_lp_exact(const ExactLp& lp);

}  // namespace tsirelson
