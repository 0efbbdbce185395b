// Acceptance suite: one pass/fail line per criterion, every comparison
// exact.  Returns the number of failed criteria.
#include "test_util.hpp"
#include "tsirelson/conclab.hpp"
#include "tsirelson/dual_norm.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

using namespace tsirelson;

namespace {

const HostSpace L1{Host::l1};
const HostSpace L2{Host::l2};
const HostSpace C0{Host::c0};
const HostSpace TS{Host::tsirelson_dual};

std::ostream& fail() { return std::cerr << "  detail: "; }

// 1. t_norm equals the admissible-set enumeration on ~200 random vectors.
bool norm_oracle_equivalence() {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const SparseVector x = testutil::random_vector(rng, 7, 12);
        const Rational dp = t_norm_value(x);
        const Rational brute = t_norm_bruteforce(x);
        if (dp != brute) {
            fail() << "mismatch at " << vector_str(x) << ": " << rational_str(dp) << " vs "
                   << rational_str(brute) << "\n";
            return false;
        }
        const auto [value, cert] = t_norm(x);
        if (value != dp || !validate_functional(cert) || evaluate_functional(cert, x) != dp) {
            fail() << "certificate unsound at " << vector_str(x) << "\n";
            return false;
        }
    }
    return true;
}

// 2. tstar equals the norming-set LP on ~100 random functionals, and the
//    duality bracket holds on 500 random pairs.
bool dual_oracle_equivalence() {
    std::mt19937_64 rng(20240602);
    for (int trial = 0; trial < 100; ++trial) {
        const SparseVector x = testutil::random_vector(rng, 6, 6);
        const Rational cut = tstar_norm_value(x);
        const Rational brute = tstar_norm_bruteforce(x);
        if (cut != brute) {
            fail() << "mismatch at " << vector_str(x) << ": " << rational_str(cut) << " vs "
                   << rational_str(brute) << "\n";
            return false;
        }
    }
    for (int trial = 0; trial < 500; ++trial) {
        const SparseVector xstar = testutil::random_vector(rng, 6, 8);
        const SparseVector x = testutil::random_vector(rng, 6, 8);
        if (abs(inner_product(xstar, x)) > tstar_norm_value(xstar) * t_norm_value(x)) {
            fail() << "bracket broken: x* = " << vector_str(xstar) << ", x = " << vector_str(x)
                   << "\n";
            return false;
        }
    }
    return true;
}

// 3. Block inequality: every signed run of singleton dual blocks with
//    n <= 6, plus 50 randomized normalized block sequences with n <= 4.
bool block_inequality() {
    for (int n = 1; n <= 6; ++n) {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            std::vector<SparseVector> blocks;
            for (int j = 0; j < n; ++j)
                blocks.push_back(Rational((signs >> j) & 1 ? -1 : 1) *
                                 SparseVector::basis(n + j));
            const auto r = check_block_inequality(blocks);
            if (!r.holds) {
                fail() << "n = " << n << " signs " << signs << " gave "
                       << rational_str(r.sum_norm) << "\n";
                return false;
            }
        }
    }
    std::mt19937_64 rng(20240603);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);  // 2..4
        std::vector<SparseVector> blocks;
        int next = n;
        for (int j = 0; j < n; ++j) {
            SparseVector b;
            do {
                std::vector<VectorEntry> es;
                for (int pos = next; pos <= next + 1 + static_cast<int>(rng() % 2); ++pos) {
                    const int num = static_cast<int>(rng() % 9) - 4;
                    if (num != 0) es.push_back({pos, make_rational(num, 1 + (int)(rng() % 3))});
                }
                b = SparseVector::make(std::move(es));
            } while (b.is_zero());
            b = Rational(1) / tstar_norm_value(b) * b;
            next = b.entries().back().pos + 1;
            blocks.push_back(std::move(b));
        }
        const auto r = check_block_inequality(blocks);
        if (!r.holds) {
            fail() << "randomized sequence " << trial << " gave " << rational_str(r.sum_norm)
                   << "\n";
            return false;
        }
    }
    return true;
}

// 4. Summing family into T*: full diameter at most 5 Lip on {2k..2k+7}.
bool concentration_desk_check() {
    for (int k = 1; k <= 4; ++k) {
        const FiniteSet alphabet = range_set(2 * k, 2 * k + 7);
        const auto rep =
            concentration_check(MapFamily::summing(), TS, k, alphabet, 2 * k,
                                SearchMode::exhaustive, {Metric::johnson, Rational(1)});
        if (rep.lip != 2 || rep.full_diameter > 2 || rep.full_diameter > 5 * rep.lip) {
            fail() << "k = " << k << ": lip " << rational_str(rep.lip) << ", full diameter "
                   << rational_str(rep.full_diameter) << "\n";
            return false;
        }
    }
    return true;
}

// 5. Contrast: in l2 the squared diameter of any size-2k sub-alphabet is 2k
//    against squared Lip 2 (ratio^2 = k, unbounded); in T* the ratio stays
//    below 5 for k <= 4.
bool contrast_ratios() {
    const auto rows = contrast_experiment({1, 2, 3, 4, 5, 6, 7, 8});
    for (const auto& row : rows) {
        if (row.l2_lip_sq != 2 || row.l2_diameter_sq != 2 * row.k ||
            row.l2_ratio_sq != row.k) {
            fail() << "l2 row k = " << row.k << ": diameter_sq "
                   << rational_str(row.l2_diameter_sq) << ", lip_sq "
                   << rational_str(row.l2_lip_sq) << "\n";
            return false;
        }
        if (row.k <= 4 && (!row.has_tstar || row.tstar_ratio > 5)) {
            fail() << "T* row k = " << row.k << " ratio " << rational_str(row.tstar_ratio)
                   << "\n";
            return false;
        }
    }
    // scan diameters honestly across every size-2k sub-alphabet (k <= 3)
    // and across all pairs of the minimal instance (k <= 5)
    for (int k = 2; k <= 3; ++k) {
        const FiniteSet carrier = range_set(2 * k, 2 * k + 7);
        const PointMap f = MapFamily::summing().builder(k, carrier);
        NormCache cache(L2);
        for (const auto& sub : enumerate_points(carrier, 2 * k, EnumerateVariant::exactly_k)) {
            const Rational d =
                image_diameter(f, enumerate_points(sub, k, EnumerateVariant::exactly_k), cache);
            if (d != 2 * k) {
                fail() << "k = " << k << " sub-alphabet " << point_str(sub)
                       << " has squared diameter " << rational_str(d) << "\n";
                return false;
            }
        }
    }
    for (int k = 4; k <= 5; ++k) {
        const FiniteSet alphabet = range_set(2 * k, 4 * k - 1);
        const PointMap f = MapFamily::summing().builder(k, alphabet);
        NormCache cache(L2);
        const Rational d = image_diameter(
            f, enumerate_points(alphabet, k, EnumerateVariant::exactly_k), cache);
        if (d != 2 * k) {
            fail() << "k = " << k << " full scan gave " << rational_str(d) << "\n";
            return false;
        }
    }
    // k in {6,7,8}: indicator images differ on at most 2k coordinates, so the
    // symmetric-difference scan carries the squared distances exactly
    std::mt19937_64 rng(20240605);
    for (int k = 6; k <= 8; ++k) {
        const FiniteSet alphabet = range_set(2 * k, 4 * k - 1);
        const auto points = enumerate_points(alphabet, k, EnumerateVariant::exactly_k);
        int diam = 0;
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                diam = std::max(diam, d_symdiff(points[i], points[j]));
        if (diam != 2 * k) {
            fail() << "k = " << k << " symdiff scan gave " << diam << "\n";
            return false;
        }
        for (int sample = 0; sample < 500; ++sample) {
            const auto& p = points[rng() % points.size()];
            const auto& q = points[rng() % points.size()];
            if (host_norm(L2, map_symdiff(p) - map_symdiff(q)) != d_symdiff(p, q)) {
                fail() << "identity broken at " << point_str(p) << " | " << point_str(q)
                       << "\n";
                return false;
            }
        }
    }
    return true;
}

// 6. Squared l2 distances of the Johnson maps: 2 d_J, and 2 d_J / k scaled.
bool johnson_map_formulas() {
    for (int k = 1; k <= 3; ++k) {
        const auto points = enumerate_points(range_set(1, 7), k, EnumerateVariant::exactly_k);
        for (size_t i = 0; i < points.size(); ++i) {
            for (size_t j = 0; j < points.size(); ++j) {
                const int dj = d_johnson(points[i], points[j]);
                const auto u = map_johnson_l2(points[i], false, k);
                const auto v = map_johnson_l2(points[j], false, k);
                if (l2_distance_sq(u, v) != 2 * dj) {
                    fail() << "unscaled k = " << k << " at " << point_str(points[i]) << " | "
                           << point_str(points[j]) << "\n";
                    return false;
                }
                const auto su = map_johnson_l2(points[i], true, k);
                const auto sv = map_johnson_l2(points[j], true, k);
                if (l2_distance_sq(su, sv) != make_rational(2 * dj, k)) {
                    fail() << "scaled k = " << k << " at " << point_str(points[i]) << " | "
                           << point_str(points[j]) << "\n";
                    return false;
                }
            }
        }
    }
    return true;
}

// 7. The three maps are 1-Lipschitz in l1/l2/c0/T*, and in l2 the squared
//    compression obeys the sharp forms (t, t, t/2), hence t/4 and t/64.
bool lemma_maps_bounds() {
    const FiniteSet alphabet = range_set(1, 6);
    const auto phi_sets = PairingFunction::sets();
    const auto phi_pairs = PairingFunction::pairs();
    const auto up = enumerate_points(alphabet, 3, EnumerateVariant::up_to_k);

    for (HostSpace space : {L1, L2, C0, TS}) {
        const bool sq = host_squared(space);
        for (size_t i = 0; i < up.size(); ++i) {
            for (size_t j = i + 1; j < up.size(); ++j) {
                const Rational ds(d_symdiff(up[i], up[j]));
                const Rational dt(d_tree(up[i], up[j]));
                const Rational img_s = host_norm(space, map_symdiff(up[i]) - map_symdiff(up[j]));
                const Rational img_t = host_norm(
                    space, map_tree_lemma(up[i], phi_sets) - map_tree_lemma(up[j], phi_sets));
                const bool lip_ok = sq ? (img_s <= ds * ds && img_t <= dt * dt)
                                       : (img_s <= ds && img_t <= dt);
                if (!lip_ok) {
                    fail() << host_name(space) << " Lipschitz broken at " << point_str(up[i])
                           << " | " << point_str(up[j]) << "\n";
                    return false;
                }
                if (sq) {
                    // sharp compression: squared distances equal the metrics
                    if (img_s != ds || img_t != dt) return false;
                    if (4 * img_s < ds || 64 * img_s < ds) return false;
                    if (4 * img_t < dt || 64 * img_t < dt) return false;
                }
            }
        }
        for (int k = 1; k <= 3; ++k) {
            const auto sized = enumerate_points(alphabet, k, EnumerateVariant::exactly_k);
            for (size_t i = 0; i < sized.size(); ++i) {
                for (size_t j = i + 1; j < sized.size(); ++j) {
                    const Rational dh(d_hamming(sized[i], sized[j]));
                    const Rational img = host_norm(space, map_hamming(sized[i], phi_pairs) -
                                                              map_hamming(sized[j], phi_pairs));
                    if (sq ? img > dh * dh : img > dh) {
                        fail() << host_name(space) << " Hamming map broken at "
                               << point_str(sized[i]) << " | " << point_str(sized[j]) << "\n";
                        return false;
                    }
                    if (sq) {
                        if (2 * img != dh) return false;  // sharp form t/2
                        if (4 * img < dh || 64 * img < dh) return false;
                    }
                }
            }
        }
    }
    return true;
}

// 8. Tree-into-c0: (1/2) d_T <= sup distance <= d_T on [{1..5}]^{<=3}.
bool tree_c0_distortion() {
    for (int k = 1; k <= 3; ++k) {
        const auto phi = PairingFunction::sets_offset(k);
        const auto points = enumerate_points(range_set(1, 5), k, EnumerateVariant::up_to_k);
        for (size_t i = 0; i < points.size(); ++i) {
            for (size_t j = 0; j < points.size(); ++j) {
                const Rational d(d_tree(points[i], points[j]));
                const Rational img = host_norm(
                    C0, map_tree_c0(points[i], k, phi) - map_tree_c0(points[j], k, phi));
                if (2 * img < d || img > d) {
                    fail() << "k = " << k << " at " << point_str(points[i]) << " | "
                           << point_str(points[j]) << ": image " << rational_str(img)
                           << " against d_T " << rational_str(d) << "\n";
                    return false;
                }
            }
        }
    }
    return true;
}

// 9. BFS distances equal the formulas on every realizable pair, and the
//    Hamming diameter of [{1..2k}]^k is k.
bool graph_agreement() {
    for (Metric kind : {Metric::hamming, Metric::johnson, Metric::tree}) {
        for (int k = 1; k <= 3; ++k) {
            const auto report = check_graph_agreement(kind, k, range_set(1, 7));
            if (!report.sound || !report.excluded.empty() || report.agree != report.pairs) {
                fail() << metric_name(kind) << " k = " << k << ": " << report.agree << "/"
                       << report.pairs << " agree, " << report.excluded.size()
                       << " excluded, sound = " << report.sound << "\n";
                return false;
            }
        }
    }
    for (int k = 1; k <= 3; ++k) {
        const auto points =
            enumerate_points(range_set(1, 2 * k), k, EnumerateVariant::exactly_k);
        int diam = 0;
        for (const auto& p : points)
            for (const auto& q : points) diam = std::max(diam, d_hamming(p, q));
        if (diam != k) {
            fail() << "Hamming diameter at k = " << k << " is " << diam << "\n";
            return false;
        }
    }
    return true;
}

// 10. Triangle inequality for all four metrics, exhaustive on [{1..6}]^{<=3}.
bool metric_axioms() {
    const auto points = enumerate_points(range_set(1, 6), 3, EnumerateVariant::up_to_k);
    for (const auto& p : points)
        for (const auto& q : points)
            for (const auto& r : points) {
                if (d_tree(p, q) > d_tree(p, r) + d_tree(r, q)) return false;
                if (d_symdiff(p, q) > d_symdiff(p, r) + d_symdiff(r, q)) return false;
                if (d_hamming(p, q) > d_hamming(p, r) + d_hamming(r, q)) return false;
                if (p.size() == q.size() && q.size() == r.size() &&
                    d_johnson(p, q) > d_johnson(p, r) + d_johnson(r, q))
                    return false;
            }
    return true;
}

// 11. Fundamental and psi surrogates across the hosts.
bool surrogate_values() {
    for (int k = 1; k <= 4; ++k) {
        if (fundamental_estimate(L2, k, k) != k) return false;
        if (fundamental_estimate(C0, k, k) != 1) return false;
        if (fundamental_estimate(TS, k, k) > 2) {
            fail() << "fundamental T* k = " << k << " exceeded 2\n";
            return false;
        }
        if (psi_estimate(L2, k, 8) != k) return false;
        if (psi_estimate(C0, k, 8) != 1) return false;
        if (psi_estimate(TS, k, 8) > 2) {
            fail() << "psi T* k = " << k << " exceeded 2\n";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
        {"norm oracle equivalence (200 random vectors, |supp| <= 7)",
         norm_oracle_equivalence},
        {"dual oracle equivalence (100 functionals) and duality bracket (500 pairs)",
         dual_oracle_equivalence},
        {"block inequality: signed singleton runs n <= 6 and 50 normalized sequences",
         block_inequality},
        {"summing family into T*: full diameter <= 5 Lip for k <= 4",
         concentration_desk_check},
        {"contrast: l2 ratio^2 = k for k <= 8, T* ratio <= 5 for k <= 4", contrast_ratios},
        {"Johnson maps: squared distances 2 d_J and 2 d_J / k, k <= 3",
         johnson_map_formulas},
        {"embedding maps 1-Lipschitz in l1/l2/c0/T*; l2 compression sharp forms",
         lemma_maps_bounds},
        {"tree-into-c0 distortion bound on [{1..5}]^{<=3}", tree_c0_distortion},
        {"BFS = formula metrics on {1..7}, k <= 3; Hamming diameter = k", graph_agreement},
        {"triangle inequality for all four metrics on [{1..6}]^{<=3}", metric_axioms},
        {"fundamental/psi surrogates: l2 = k (squared), c0 = 1, T* <= 2", surrogate_values},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].second();
        } catch (const std::exception& e) {
            std::cerr << "  exception: " << e.what() << "\n";
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": "
                  << criteria[i].first << "\n";
        std::cerr << "  criterion " << i + 1 << " took " << ms << " ms\n";
        if (!ok) ++failures;
    }
    return failures;
}
