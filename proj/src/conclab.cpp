#include "tsirelson/conclab.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace tsirelson {

MapFamily MapFamily::summing() {
    return {"summing", [](int, const FiniteSet&) -> PointMap {
                return [](const FinitePoint& p) { return map_symdiff(p); };
            }};
}

MapFamily MapFamily::hamming_lemma() {
    return {"hamming-lemma", [](int, const FiniteSet&) -> PointMap {
                return [](const FinitePoint& p) {
                    return map_hamming(p, PairingFunction::pairs());
                };
            }};
}

MapFamily MapFamily::custom(std::map<FinitePoint, SparseVector> table) {
    auto shared = std::make_shared<std::map<FinitePoint, SparseVector>>(std::move(table));
    return {"custom", [shared](int, const FiniteSet&) -> PointMap {
                return [shared](const FinitePoint& p) {
                    const auto it = shared->find(p);
                    if (it == shared->end())
                        throw std::invalid_argument("custom family undefined at " + point_str(p));
                    return it->second;
                };
            }};
}

MapFamily parse_family(const std::string& name) {
    if (name == "summing") return MapFamily::summing();
    if (name == "hamming-lemma") return MapFamily::hamming_lemma();
    throw std::invalid_argument("unknown map family '" + name + "'");
}

const Rational& NormCache::distance(const SparseVector& a, const SparseVector& b) {
    SparseVector diff = a - b;
    if (!diff.is_zero() && sgn(diff.entries().front().coeff) < 0) diff = -diff;
    auto it = memo_.find(diff);
    if (it == memo_.end()) it = memo_.emplace(diff, host_norm(space_, diff)).first;
    return it->second;
}

Rational lipschitz_constant(const PointMap& f, int k, const FiniteSet& alphabet,
                            const MetricKind& kind, HostSpace space) {
    if (static_cast<int>(alphabet.size()) <= k)
        throw std::invalid_argument("degenerate instance: alphabet not larger than k");
    const auto variant = kind.kind == Metric::tree || kind.kind == Metric::symdiff
                             ? EnumerateVariant::up_to_k
                             : EnumerateVariant::exactly_k;
    const auto points = enumerate_points(alphabet, k, variant);
    const int max_size = kind.kind == Metric::tree ? k : -1;

    NormCache cache(space);
    std::map<FinitePoint, SparseVector> images;
    for (const auto& p : points) images.emplace(p, f(p));

    Rational lip(0);
    bool any_edge = false;
    for (const auto& p : points) {
        for (const auto& q : neighbors(p, kind, alphabet)) {
            if (max_size >= 0 && static_cast<int>(q.size()) > max_size) continue;
            if (!(p < q)) continue;  // each edge once
            const auto it = images.find(q);
            if (it == images.end()) continue;
            any_edge = true;
            const Rational& img = cache.distance(images.at(p), it->second);
            if (img > lip) lip = img;
        }
    }
    if (!any_edge) throw std::invalid_argument("degenerate instance: no edges");
    // edges have source distance `scale`
    return host_squared(space) ? Rational(lip / (kind.scale * kind.scale))
                               : Rational(lip / kind.scale);
}

Rational image_diameter(const PointMap& f, const std::vector<FinitePoint>& points,
                        NormCache& cache) {
    std::vector<SparseVector> images;
    images.reserve(points.size());
    for (const auto& p : points) images.push_back(f(p));
    Rational diam(0);
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) {
            const Rational& d = cache.distance(images[i], images[j]);
            if (d > diam) diam = d;
        }
    return diam;
}

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

ConcentrationReport concentration_check(const MapFamily& family, HostSpace space, int k,
                                        const FiniteSet& alphabet, int subsize, SearchMode mode,
                                        const MetricKind& kind, long budget) {
    if (kind.kind != Metric::hamming && kind.kind != Metric::johnson)
        throw std::invalid_argument("concentration domain is [alphabet]^k");
    if (subsize < 2 * k)
        throw std::invalid_argument("subsize must be >= 2k to realize diameter-k pairs");
    if (subsize > static_cast<int>(alphabet.size()))
        throw std::invalid_argument("subsize exceeds the alphabet");

    const PointMap f = family.builder(k, alphabet);
    NormCache cache(space);

    ConcentrationReport report;
    report.k = k;
    report.alphabet = alphabet;
    report.squared = host_squared(space);
    report.search_mode = mode;
    report.lip = lipschitz_constant(f, k, alphabet, kind, space);
    report.full_diameter =
        image_diameter(f, enumerate_points(alphabet, k, EnumerateVariant::exactly_k), cache);

    if (mode == SearchMode::exhaustive) {
        if (binomial(static_cast<long>(alphabet.size()), subsize) > budget)
            throw std::invalid_argument(
                "exhaustive sub-alphabet budget exceeded; use greedy mode");
        bool first = true;
        for (const auto& sub : enumerate_points(alphabet, subsize, EnumerateVariant::exactly_k)) {
            Rational d =
                image_diameter(f, enumerate_points(sub, k, EnumerateVariant::exactly_k), cache);
            if (first || d < report.sub_diameter) {
                report.sub_diameter = std::move(d);
                report.best_subalphabet = sub;
                first = false;
            }
        }
    } else {
        FiniteSet current = alphabet;
        Rational diam = report.full_diameter;
        while (static_cast<int>(current.size()) > subsize) {
            // delete the letter whose removal reduces the diameter the most
            FiniteSet best_next;
            Rational best_diam;
            bool first = true;
            for (size_t drop = 0; drop < current.size(); ++drop) {
                FiniteSet candidate = current;
                candidate.erase(candidate.begin() + drop);
                Rational d = image_diameter(
                    f, enumerate_points(candidate, k, EnumerateVariant::exactly_k), cache);
                if (first || d < best_diam) {
                    best_diam = std::move(d);
                    best_next = std::move(candidate);
                    first = false;
                }
            }
            current = std::move(best_next);
            diam = best_diam;
        }
        report.sub_diameter = std::move(diam);
        report.best_subalphabet = std::move(current);
    }

    report.bound_5lip = report.squared ? Rational(25 * report.lip) : Rational(5 * report.lip);
    report.holds = report.sub_diameter <= report.bound_5lip;
    return report;
}

ExtractionReport extraction_surrogate(const MapFamily& family, HostSpace space, int k,
                                      const FiniteSet& alphabet) {
    const PointMap f = family.builder(k, alphabet);
    const auto points = enumerate_points(alphabet, k, EnumerateVariant::exactly_k);
    if (points.empty()) throw std::invalid_argument("empty instance");

    std::vector<SparseVector> images;
    images.reserve(points.size());
    for (const auto& p : points) images.push_back(f(p));

    FiniteSet coords;
    for (const auto& img : images) {
        const FiniteSet s = support(img);
        FiniteSet merged;
        std::set_union(coords.begin(), coords.end(), s.begin(), s.end(),
                       std::back_inserter(merged));
        coords = std::move(merged);
    }

    // coordinatewise lower median over all images (absent coordinates count
    // as zero)
    std::vector<VectorEntry> center_entries;
    for (int pos : coords) {
        std::vector<Rational> column;
        column.reserve(images.size());
        for (const auto& img : images) column.push_back(img.coeff_at(pos));
        std::sort(column.begin(), column.end());
        Rational med = column[(column.size() - 1) / 2];
        if (med != 0) center_entries.push_back({pos, std::move(med)});
    }

    ExtractionReport report;
    report.subalphabet = alphabet;  // the finite instance has nothing to discard
    report.squared = host_squared(space);
    report.center = SparseVector::make(std::move(center_entries));
    for (size_t i = 0; i < points.size(); ++i) {
        ExtractionReport::Item item;
        item.point = points[i];
        item.residual = images[i] - report.center;
        // blocks: maximal runs of consecutive positions
        std::vector<VectorEntry> run;
        for (const auto& e : item.residual.entries()) {
            if (!run.empty() && e.pos != run.back().pos + 1) {
                item.blocks.push_back(SparseVector::make(run));
                run.clear();
            }
            run.push_back(e);
        }
        if (!run.empty()) item.blocks.push_back(SparseVector::make(run));
        item.residual_norm = host_norm(space, item.residual);
        if (item.residual_norm > report.max_residual_norm)
            report.max_residual_norm = item.residual_norm;
        report.items.push_back(std::move(item));
    }
    return report;
}

std::vector<ContrastRow> contrast_experiment(const std::vector<int>& ks) {
    std::vector<ContrastRow> rows;
    for (int k : ks) {
        if (k < 1 || k > 8)
            throw std::invalid_argument("contrast needs 1 <= k <= 8 for exact norms");
        ContrastRow row;
        row.k = k;

        if (k <= 4) {
            const auto rep = concentration_check(
                MapFamily::summing(), {Host::tsirelson_dual}, k, range_set(2 * k, 2 * k + 7),
                2 * k, SearchMode::exhaustive, {Metric::johnson, Rational(1)});
            row.has_tstar = true;
            row.tstar_sub_diameter = rep.sub_diameter;
            row.tstar_lip = rep.lip;
            row.tstar_ratio = rep.sub_diameter / rep.lip;
        }

        const FiniteSet alphabet = range_set(2 * k, 4 * k - 1);  // 2k letters
        const PointMap f = MapFamily::summing().builder(k, alphabet);
        row.l2_lip_sq =
            lipschitz_constant(f, k, alphabet, {Metric::johnson, Rational(1)}, {Host::l2});
        // Images are 0/1 indicators of k-subsets, so a squared distance is
        // |m \triangle n| <= 2k, attained by a disjoint pair.
        const FinitePoint lo(alphabet.begin(), alphabet.begin() + k);
        const FinitePoint hi(alphabet.end() - k, alphabet.end());
        row.l2_diameter_sq = host_norm({Host::l2}, f(lo) - f(hi));
        row.l2_ratio_sq = row.l2_diameter_sq / row.l2_lip_sq;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace tsirelson
