#pragma once

#include "tsirelson/sparse_vector.hpp"

#include <string>
#include <vector>

namespace tsirelson {

// True iff the pieces are nonempty, successively ordered
// (max E_{j-1} < min E_j), and n <= min(E_1).
bool is_admissible(const std::vector<FiniteSet>& pieces);

// Member of the norming set behind the T norm.  A leaf is a signed
// coordinate functional +-e*_j; a node is 1/2 times the sum of its
// children.  A valid node has children on successive blocks and at most
// min(supp(first child)) of them.
class NormFunctional {
public:
    static NormFunctional leaf(int pos, int sign);
    static NormFunctional node(std::vector<NormFunctional> children);

    bool is_leaf() const { return children_.empty(); }
    int leaf_pos() const { return pos_; }
    int leaf_sign() const { return sign_; }
    const std::vector<NormFunctional>& children() const { return children_; }

private:
    NormFunctional() = default;
    int pos_ = 0;
    int sign_ = 0;
    std::vector<NormFunctional> children_;
};

struct TNormResult {
    Rational value;
    NormFunctional certificate;  // evaluates on the input to exactly `value`
};

// ||x||_T via the implicit equation ||x|| = max(||x||_0, 1/2 sup sum ||E_j(x)||)
// over admissible partitions, computed by a memoized dynamic program over
// consecutive runs of support points.  Pieces can be restricted to interval
// hulls: hulls of successive sets stay successive with the same min(E_1), and
// the norm is monotone under coefficient domination, so no admissible family
// beats its hulled version.  Validated against t_norm_bruteforce.
TNormResult t_norm(const SparseVector& x);
Rational t_norm_value(const SparseVector& x);

// The k-th inductive norm ||x||_k, with ||x||_0 the sup norm.
Rational t_norm_level(const SparseVector& x, int k);

// Independent oracle: enumerates every admissible family of arbitrary
// finite sets (not only intervals), recursing on each piece.
Rational t_norm_bruteforce(const SparseVector& x, int support_cap = 7);

Rational evaluate_functional(const NormFunctional& f, const SparseVector& x);
bool validate_functional(const NormFunctional& f);
FiniteSet functional_support(const NormFunctional& f);
SparseVector functional_coefficients(const NormFunctional& f);
std::string functional_str(const NormFunctional& f);

}  // namespace tsirelson
