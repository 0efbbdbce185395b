#pragma once

#include "tsirelson/exact_lp.hpp"
#include "tsirelson/tnorm.hpp"

#include <vector>

namespace tsirelson {

struct DualCertificatePair {
    SparseVector primal_witness;                 // ||witness||_T <= 1, <x*, witness> = value
    std::vector<NormFunctional> constraint_set;  // cutting planes active at termination
    Rational value;
};

struct TStarResult {
    Rational value;
    DualCertificatePair certificate;
};

// ||x*||_{T*} = sup { <x*, x> : ||x||_T <= 1 } by exact cutting planes: the
// LP starts from the box constraints (sound since the T norm dominates the
// sup norm) and t_norm acts as separation oracle, each violated certificate
// joining the constraint set.  By 1-unconditionality the LP runs over the
// positive orthant against |x*|; signs are restored on the witness.
TStarResult tstar_norm(const SparseVector& xstar, int iteration_cap = 10000);
Rational tstar_norm_value(const SparseVector& xstar);

// Independent oracle: one LP over every distinct norming-functional
// coefficient vector supported in [1, max supp(x*)].
Rational tstar_norm_bruteforce(const SparseVector& xstar, int position_cap = 6);

// All distinct coefficient vectors of norming functionals supported in
// [1, max_pos].  Single-child averaging nodes are omitted: they only halve
// an existing member, so they never attain the supremum.
std::vector<SparseVector> norming_set_vectors(int max_pos);

struct BlockInequalityResult {
    Rational sum_norm;
    bool holds;  // sum_norm <= 2
};

// ||sum x*_j||_{T*} for a block sequence of unit-ball functionals with
// n <= min(supp(x*_1)); violated preconditions are reported by name.
BlockInequalityResult check_block_inequality(const std::vector<SparseVector>& xstars);

}  // namespace tsirelson
