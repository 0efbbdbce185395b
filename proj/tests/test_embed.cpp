#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsirelson/embed.hpp"
#include "tsirelson/tnorm.hpp"

#include <map>

using namespace tsirelson;

namespace {

const HostSpace L1{Host::l1};
const HostSpace L2{Host::l2};
const HostSpace C0{Host::c0};
const HostSpace TT{Host::tsirelson};
const HostSpace TS{Host::tsirelson_dual};

SparseVector unit_run(int lo, int hi) {
    std::vector<VectorEntry> entries;
    for (int p = lo; p <= hi; ++p) entries.push_back({p, Rational(1)});
    return SparseVector::make(std::move(entries));
}

}  // namespace

TEST_CASE("host norms") {
    CHECK(host_norm(L2, unit_run(1, 2)) == 2);  // squared
    CHECK(host_norm(C0, Rational(3) * SparseVector::basis(1) - SparseVector::basis(2)) == 3);
    CHECK(host_norm(TT, unit_run(3, 5)) == Rational(3, 2));
    CHECK(host_norm(L1, parse_vector("2:1/2 5:-2")) == Rational(5, 2));
    CHECK(host_norm(TS, unit_run(2, 3)) == 2);
    CHECK(host_squared(L2));
    CHECK_FALSE(host_squared(TS));
    CHECK(host_name(parse_host("Tstar")) == "Tstar");
    CHECK_THROWS_AS(parse_host("linf"), std::invalid_argument);
}

TEST_CASE("pairing functions are injective and land where promised") {
    const auto pairs = PairingFunction::pairs();
    std::map<int, std::pair<int, int>> seen;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            const int idx = pairs.index_of_pair(i, j);
            CHECK(idx >= 1);
            CHECK_FALSE(seen.count(idx));
            seen[idx] = {i, j};
        }

    const auto sets = PairingFunction::sets();
    std::map<int, FiniteSet> seen_sets;
    for (const auto& s : enumerate_points(range_set(1, 6), 6, EnumerateVariant::up_to_k)) {
        const int idx = sets.index_of_set(s);
        CHECK(idx >= 1);
        CHECK_FALSE(seen_sets.count(idx));
        seen_sets[idx] = s;
    }

    for (int k = 1; k <= 4; ++k) {
        const auto offset = PairingFunction::sets_offset(k);
        for (const auto& s : enumerate_points(range_set(1, 5), k, EnumerateVariant::up_to_k))
            CHECK(offset.index_of_set(s) >= 2 * k);
    }
}

TEST_CASE("map_symdiff") {
    CHECK(map_symdiff({2, 5}) == SparseVector::basis(2) + SparseVector::basis(5));
    CHECK(map_symdiff({}).is_zero());
    // squared l2 distance realizes the symmetric difference metric
    const auto points = enumerate_points(range_set(1, 5), 3, EnumerateVariant::up_to_k);
    for (const auto& p : points)
        for (const auto& q : points)
            CHECK(host_norm(L2, map_symdiff(p) - map_symdiff(q)) == d_symdiff(p, q));
}

TEST_CASE("map_tree_lemma") {
    const auto phi = PairingFunction::sets();
    const SparseVector img = map_tree_lemma({3, 7}, phi);
    CHECK(img.size() == 3);
    CHECK(img.coeff_at(phi.index_of_set({})) == 1);
    CHECK(img.coeff_at(phi.index_of_set({3})) == 1);
    CHECK(img.coeff_at(phi.index_of_set({3, 7})) == 1);
    CHECK(map_tree_lemma({}, phi) == SparseVector::basis(phi.index_of_set({})));

    const auto points = enumerate_points(range_set(1, 5), 3, EnumerateVariant::up_to_k);
    for (const auto& p : points)
        for (const auto& q : points)
            CHECK(host_norm(L2, map_tree_lemma(p, phi) - map_tree_lemma(q, phi)) ==
                  d_tree(p, q));
}

TEST_CASE("map_hamming") {
    const auto phi = PairingFunction::pairs();
    CHECK(map_hamming({4, 6}, phi).size() == 2);
    CHECK((map_hamming({4, 6}, phi) - map_hamming({4, 6}, phi)).is_zero());
    const auto points = enumerate_points(range_set(1, 6), 3, EnumerateVariant::exactly_k);
    for (const auto& p : points)
        for (const auto& q : points) {
            const Rational sq = host_norm(L2, map_hamming(p, phi) - map_hamming(q, phi));
            CHECK(sq == make_rational(d_hamming(p, q), 2));
        }
}

TEST_CASE("lemma maps are 1-Lipschitz in every host") {
    const FiniteSet alphabet = range_set(1, 5);
    const auto phi_sets = PairingFunction::sets();
    const auto phi_pairs = PairingFunction::pairs();
    for (HostSpace space : {L1, L2, C0, TS}) {
        const auto up = enumerate_points(alphabet, 2, EnumerateVariant::up_to_k);
        for (const auto& p : up)
            for (const auto& q : up) {
                const Rational dsym = Rational(d_symdiff(p, q));
                const Rational dtree = Rational(d_tree(p, q));
                const Rational img_s = host_norm(space, map_symdiff(p) - map_symdiff(q));
                const Rational img_t =
                    host_norm(space, map_tree_lemma(p, phi_sets) - map_tree_lemma(q, phi_sets));
                if (host_squared(space)) {
                    CHECK(img_s <= dsym * dsym);
                    CHECK(img_t <= dtree * dtree);
                } else {
                    CHECK(img_s <= dsym);
                    CHECK(img_t <= dtree);
                }
            }
        const auto sized = enumerate_points(alphabet, 2, EnumerateVariant::exactly_k);
        for (const auto& p : sized)
            for (const auto& q : sized) {
                const Rational dh = Rational(d_hamming(p, q));
                const Rational img =
                    host_norm(space, map_hamming(p, phi_pairs) - map_hamming(q, phi_pairs));
                if (host_squared(space))
                    CHECK(img <= dh * dh);
                else
                    CHECK(img <= dh);
            }
    }
}

TEST_CASE("map_tree_c0 coefficients count predecessors") {
    const auto phi1 = PairingFunction::sets_offset(1);
    const SparseVector img = map_tree_c0({4}, 1, phi1);
    CHECK(img.coeff_at(phi1.index_of_set({})) == 2);
    CHECK(img.coeff_at(phi1.index_of_set({4})) == 1);
    CHECK(img.size() == 2);
    CHECK((map_tree_c0({2, 4}, 2, PairingFunction::sets_offset(2)) -
           map_tree_c0({2, 4}, 2, PairingFunction::sets_offset(2)))
              .is_zero());
    CHECK_THROWS_AS(map_tree_c0({1, 2}, 1, phi1), std::invalid_argument);
}

TEST_CASE("tree into c0 is a distortion-2 embedding") {
    for (int k = 1; k <= 3; ++k) {
        const auto phi = PairingFunction::sets_offset(k);
        const auto points = enumerate_points(range_set(1, 5), k, EnumerateVariant::up_to_k);
        for (const auto& p : points)
            for (const auto& q : points) {
                const Rational img =
                    host_norm(C0, map_tree_c0(p, k, phi) - map_tree_c0(q, k, phi));
                const Rational d = Rational(d_tree(p, q));
                CHECK(2 * img >= d);
                CHECK(img <= d);
            }
    }
}

TEST_CASE("johnson maps into l2") {
    const auto points = enumerate_points(range_set(1, 6), 3, EnumerateVariant::exactly_k);
    for (const auto& p : points)
        for (const auto& q : points) {
            const auto up = map_johnson_l2(p, false, 3);
            const auto uq = map_johnson_l2(q, false, 3);
            CHECK(l2_distance_sq(up, uq) == 2 * d_johnson(p, q));
            const auto sp = map_johnson_l2(p, true, 3);
            const auto sq = map_johnson_l2(q, true, 3);
            CHECK(l2_distance_sq(sp, sq) == make_rational(2 * d_johnson(p, q), 3));
        }
    CHECK(l2_distance_sq(map_johnson_l2({1, 2}, true, 2), map_johnson_l2({1, 2}, true, 2)) == 0);
    CHECK_THROWS_AS(map_johnson_l2({1, 2}, false, 3), std::invalid_argument);
}

TEST_CASE("compute_moduli on the symdiff map under the johnson metric") {
    const auto points = enumerate_points(range_set(1, 4), 2, EnumerateVariant::exactly_k);
    const auto report = compute_moduli([](const FinitePoint& p) { return map_symdiff(p); },
                                       points, {Metric::johnson, Rational(1)}, L2);
    CHECK(report.squared);
    // image squared distance is exactly 2t at every realized t
    for (size_t i = 0; i < report.distances.size(); ++i) {
        const Rational& t = report.distances[i];
        CHECK(report.rho[i].second == 2 * t);
        CHECK(report.omega[i].second == 2 * t);
    }
    CHECK(report.lip == 2);  // squared
}

TEST_CASE("compute_moduli on a constant map") {
    const auto points = enumerate_points(range_set(1, 4), 2, EnumerateVariant::exactly_k);
    const auto report = compute_moduli([](const FinitePoint&) { return SparseVector::basis(1); },
                                       points, {Metric::johnson, Rational(1)}, C0);
    for (const auto& [t, v] : report.rho) CHECK(v == 0);
    for (const auto& [t, v] : report.omega) CHECK(v == 0);
    CHECK(report.lip == 0);
    CHECK_THROWS_AS(compute_moduli([](const FinitePoint& p) { return map_symdiff(p); },
                                   {FinitePoint{1}}, {Metric::johnson, Rational(1)}, C0),
                    std::invalid_argument);
}

TEST_CASE("moduli sandwich every pair") {
    const auto phi = PairingFunction::pairs();
    const auto points = enumerate_points(range_set(1, 5), 2, EnumerateVariant::exactly_k);
    const MetricKind kind{Metric::hamming, Rational(1)};
    const PointMap f = [&](const FinitePoint& p) { return map_hamming(p, phi); };
    const auto report = compute_moduli(f, points, kind, TS);
    auto value_at = [&](const std::vector<std::pair<Rational, Rational>>& curve,
                        const Rational& t) {
        for (const auto& [d, v] : curve)
            if (d == t) return v;
        throw std::logic_error("distance not realized");
    };
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            const Rational t = metric_distance(kind, points[i], points[j]);
            const Rational img = host_norm(TS, f(points[i]) - f(points[j]));
            CHECK(value_at(report.rho, t) <= img);
            CHECK(img <= value_at(report.omega, t));
        }
    // monotonicity of the curves
    for (size_t i = 1; i < report.rho.size(); ++i) {
        CHECK(report.rho[i].second >= report.rho[i - 1].second);
        CHECK(report.omega[i].second >= report.omega[i - 1].second);
    }
}

TEST_CASE("fundamental_estimate") {
    CHECK(fundamental_estimate(L2, 5, 5) == 5);
    CHECK(fundamental_estimate(C0, 7, 7) == 1);
    CHECK(fundamental_estimate(L1, 3, 3) == 3);
    for (int k = 1; k <= 6; ++k) CHECK(fundamental_estimate(TS, k, k) <= 2);
    CHECK_THROWS_AS(fundamental_estimate(TS, 3, 2), std::invalid_argument);
    // values never grow when the block moves right
    for (int k = 1; k <= 4; ++k) {
        const Rational at_k = fundamental_estimate(TS, k, k);
        const Rational at_2k = fundamental_estimate(TS, k, 2 * k);
        const Rational at_4k = fundamental_estimate(TS, k, 4 * k);
        CHECK(at_k >= at_2k);
        CHECK(at_2k >= at_4k);
    }
}

TEST_CASE("psi_estimate") {
    CHECK(psi_estimate(L2, 4, 7) == 4);
    CHECK(psi_estimate(C0, 3, 6) == 1);
    for (int k = 1; k <= 3; ++k) CHECK(psi_estimate(TS, k, 8) <= 2);
    CHECK_THROWS_AS(psi_estimate(TS, 5, 10, 100), std::invalid_argument);
}
