#pragma once

#include "tsirelson/metrics.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tsirelson {

// Host norms are exact: l1, c0 and the Tsirelson norms return the value
// itself, l2 returns the squared value and all l2 comparisons are made on
// squares.
enum class Host { l1, l2, c0, tsirelson, tsirelson_dual };

struct HostSpace {
    Host kind;
};

HostSpace parse_host(const std::string& name);  // l1, l2, c0, T, Tstar
std::string host_name(HostSpace space);
bool host_squared(HostSpace space);
Rational host_norm(HostSpace space, const SparseVector& x);

// Deterministic injections indexing the host basis.
struct PairingFunction {
    enum class Variant {
        pairs,        // N x N -> N, Cantor pairing shifted to range >= 1
        sets,         // finite sets -> N, graded by max element
        sets_offset,  // finite sets -> {2k, 2k+1, ...}
    };
    Variant variant;
    int k = 0;  // used by sets_offset

    static PairingFunction pairs() { return {Variant::pairs, 0}; }
    static PairingFunction sets() { return {Variant::sets, 0}; }
    static PairingFunction sets_offset(int k) { return {Variant::sets_offset, k}; }

    int index_of_pair(int i, int j) const;
    int index_of_set(const FiniteSet& s) const;
};

// f(n) = sum_i e_{n_i}
SparseVector map_symdiff(const FinitePoint& n);
// f(n) = sum over prefixes u of n (including {} and n) of e_{Phi(u)}
SparseVector map_tree_lemma(const FinitePoint& n, const PairingFunction& phi);
// f(n) = 1/2 sum_i e_{Phi(i, n_i)}
SparseVector map_hamming(const FinitePoint& n, const PairingFunction& phi);
// f_k(n) = sum_{u <= n} sum_{s <= u} e_{Phi_k(s)}; the coefficient of
// e_{Phi_k(s)} is |n| - |s| + 1 for every prefix s of n
SparseVector map_tree_c0(const FinitePoint& n, int k, const PairingFunction& phi_k);

// f_k(n) = sum_i e_{n_i}, optionally rescaled by 1/sqrt(k); the scale is
// carried as the exact square 1/k next to the integer vector
struct ScaledVector {
    SparseVector vec;
    Rational scale_sq{1};
};
ScaledVector map_johnson_l2(const FinitePoint& n, bool scaled, int k);
Rational l2_distance_sq(const ScaledVector& a, const ScaledVector& b);

using PointMap = std::function<SparseVector(const FinitePoint&)>;

// Finite-sample compression/expansion moduli: rho(t) = inf of image
// distances over pairs at source distance >= t, omega(t) = sup over pairs
// at distance <= t, both reported only at realized distances.
struct ModulusReport {
    bool squared = false;  // image values are squares (l2 host)
    std::vector<Rational> distances;
    std::vector<std::pair<Rational, Rational>> rho;
    std::vector<std::pair<Rational, Rational>> omega;
    Rational lip{0};  // squared when `squared`
};

ModulusReport compute_moduli(const PointMap& f, const std::vector<FinitePoint>& points,
                             const MetricKind& kind, HostSpace space,
                             const Rational& image_scale_sq = Rational(1));

// ||sum_{i=1}^{k} e_{offset+i}|| in the host: finite surrogate of the
// fundamental function at the canonical basis; requires offset >= k.
Rational fundamental_estimate(HostSpace space, int k, int offset);

// min over k <= ... n_1 < ... < n_k <= N and sign patterns of
// ||sum eps_i e_{n_i}||: finite surrogate of the divergence functional.
Rational psi_estimate(HostSpace space, int k, int n_max, long budget = 1000000);

}  // namespace tsirelson
