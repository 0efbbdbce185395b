#include "tsirelson/embed.hpp"

#include "tsirelson/dual_norm.hpp"
#include "tsirelson/tnorm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tsirelson {

HostSpace parse_host(const std::string& name) {
    if (name == "l1") return {Host::l1};
    if (name == "l2") return {Host::l2};
    if (name == "c0") return {Host::c0};
    if (name == "T") return {Host::tsirelson};
    if (name == "Tstar") return {Host::tsirelson_dual};
    throw std::invalid_argument("unknown host space '" + name + "'");
}

std::string host_name(HostSpace space) {
    switch (space.kind) {
        case Host::l1: return "l1";
        case Host::l2: return "l2";
        case Host::c0: return "c0";
        case Host::tsirelson: return "T";
        case Host::tsirelson_dual: return "Tstar";
    }
    throw std::logic_error("unreachable");
}

bool host_squared(HostSpace space) { return space.kind == Host::l2; }

Rational host_norm(HostSpace space, const SparseVector& x) {
    switch (space.kind) {
        case Host::l1: return l1_norm(x);
        case Host::l2: return l2_norm_sq(x);
        case Host::c0: return sup_norm(x);
        case Host::tsirelson: return t_norm_value(x);
        case Host::tsirelson_dual: return tstar_norm_value(x);
    }
    throw std::logic_error("unreachable");
}

int PairingFunction::index_of_pair(int i, int j) const {
    if (variant != Variant::pairs) throw std::invalid_argument("not a pair variant");
    if (i < 1 || j < 1) throw std::invalid_argument("pair arguments must be >= 1");
    const long a = i - 1, b = j - 1;
    const long idx = (a + b) * (a + b + 1) / 2 + b + 1;
    return static_cast<int>(idx);
}

int PairingFunction::index_of_set(const FiniteSet& s) const {
    if (variant == Variant::pairs) throw std::invalid_argument("not a set variant");
    // graded by max element; within a layer, ranked by the binary encoding
    // of the remaining elements
    long idx = 1;
    if (!s.empty()) {
        const int top = s.back();
        if (top > 30) throw std::invalid_argument("set index overflow (element > 30)");
        long rank = 0;
        for (size_t i = 0; i + 1 < s.size(); ++i) rank += 1L << (s[i] - 1);
        idx = (1L << (top - 1)) + 1 + rank;
    }
    if (variant == Variant::sets_offset) idx += 2L * k - 1;
    return static_cast<int>(idx);
}

SparseVector map_symdiff(const FinitePoint& n) {
    std::vector<VectorEntry> entries;
    entries.reserve(n.size());
    for (int v : n) entries.push_back({v, Rational(1)});
    return SparseVector::make(std::move(entries));
}

SparseVector map_tree_lemma(const FinitePoint& n, const PairingFunction& phi) {
    std::vector<VectorEntry> entries;
    for (size_t len = 0; len <= n.size(); ++len)
        entries.push_back({phi.index_of_set(FiniteSet(n.begin(), n.begin() + len)), Rational(1)});
    return SparseVector::make(std::move(entries));
}

SparseVector map_hamming(const FinitePoint& n, const PairingFunction& phi) {
    std::vector<VectorEntry> entries;
    for (size_t i = 0; i < n.size(); ++i)
        entries.push_back({phi.index_of_pair(static_cast<int>(i) + 1, n[i]), Rational(1, 2)});
    return SparseVector::make(std::move(entries));
}

SparseVector map_tree_c0(const FinitePoint& n, int k, const PairingFunction& phi_k) {
    if (static_cast<int>(n.size()) > k)
        throw std::invalid_argument("point longer than the tree height k");
    std::vector<VectorEntry> entries;
    const int len = static_cast<int>(n.size());
    for (int s = 0; s <= len; ++s)
        entries.push_back(
            {phi_k.index_of_set(FiniteSet(n.begin(), n.begin() + s)), Rational(len - s + 1)});
    return SparseVector::make(std::move(entries));
}

ScaledVector map_johnson_l2(const FinitePoint& n, bool scaled, int k) {
    if (static_cast<int>(n.size()) != k)
        throw std::invalid_argument("Johnson map needs |n| = k");
    return {map_symdiff(n), scaled ? Rational(1, k) : Rational(1)};
}

Rational l2_distance_sq(const ScaledVector& a, const ScaledVector& b) {
    if (a.scale_sq != b.scale_sq)
        throw std::invalid_argument("mixed scales in l2 distance");
    return a.scale_sq * l2_norm_sq(a.vec - b.vec);
}

ModulusReport compute_moduli(const PointMap& f, const std::vector<FinitePoint>& points,
                             const MetricKind& kind, HostSpace space,
                             const Rational& image_scale_sq) {
    if (points.size() < 2) throw std::invalid_argument("need at least 2 points");
    if (image_scale_sq != 1 && !host_squared(space))
        throw std::invalid_argument("image scale applies to the l2 host only");

    std::vector<SparseVector> images;
    images.reserve(points.size());
    for (const auto& p : points) images.push_back(f(p));

    ModulusReport report;
    report.squared = host_squared(space);
    std::vector<std::pair<Rational, Rational>> pairs;  // (source distance, image distance)
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            Rational d = metric_distance(kind, points[i], points[j]);
            Rational img = host_norm(space, images[i] - images[j]);
            if (report.squared) img *= image_scale_sq;
            if (d == 0) {
                if (img != 0)
                    throw std::domain_error("distinct images at source distance zero");
                continue;
            }
            Rational ratio;
            if (report.squared)
                ratio = img / (d * d);
            else
                ratio = img / d;
            if (ratio > report.lip) report.lip = std::move(ratio);
            pairs.emplace_back(std::move(d), std::move(img));
        }
    }
    if (pairs.empty()) throw std::invalid_argument("no pairs at positive distance");

    std::vector<Rational> ts;
    for (const auto& [d, img] : pairs) ts.push_back(d);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    report.distances = ts;
    for (const Rational& t : ts) {
        Rational lo, hi;
        bool lo_set = false, hi_set = false;
        for (const auto& [d, img] : pairs) {
            if (d >= t && (!lo_set || img < lo)) {
                lo = img;
                lo_set = true;
            }
            if (d <= t && (!hi_set || img > hi)) {
                hi = img;
                hi_set = true;
            }
        }
        report.rho.emplace_back(t, lo);
        report.omega.emplace_back(t, hi);
    }
    return report;
}

Rational fundamental_estimate(HostSpace space, int k, int offset) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (offset < k) throw std::invalid_argument("offset must be >= k");
    std::vector<VectorEntry> entries;
    for (int i = 1; i <= k; ++i) entries.push_back({offset + i, Rational(1)});
    return host_norm(space, SparseVector::make(std::move(entries)));
}

Rational psi_estimate(HostSpace space, int k, int n_max, long budget) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n_max < k) throw std::invalid_argument("N must be >= k");
    long combos = 1;
    for (int i = 0; i < k; ++i) combos = combos * (n_max - i) / (i + 1);
    if (combos * (1L << k) > budget)
        throw std::invalid_argument("combinatorial budget exceeded");

    Rational best(-1);
    for (const auto& subset :
         enumerate_points(range_set(1, n_max), k, EnumerateVariant::exactly_k)) {
        for (long signs = 0; signs < (1L << k); ++signs) {
            std::vector<VectorEntry> entries;
            for (int i = 0; i < k; ++i)
                entries.push_back({subset[i], Rational((signs >> i) & 1 ? -1 : 1)});
            Rational v = host_norm(space, SparseVector::make(std::move(entries)));
            if (best < 0 || v < best) best = std::move(v);
        }
    }
    return best;
}

}  // namespace tsirelson
