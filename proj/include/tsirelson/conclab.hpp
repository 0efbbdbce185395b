#pragma once

#include "tsirelson/embed.hpp"

#include <map>
#include <string>
#include <vector>

namespace tsirelson {

// A family of maps [alphabet]^k -> host, one per instance size.
struct MapFamily {
    std::string name;
    std::function<PointMap(int k, const FiniteSet& alphabet)> builder;

    // n -> sum e_{n_i} (read against the dual basis when the host is T*)
    static MapFamily summing();
    // the 1-Lipschitz Hamming map n -> 1/2 sum e_{Phi(i, n_i)}
    static MapFamily hamming_lemma();
    // user-supplied table
    static MapFamily custom(std::map<FinitePoint, SparseVector> table);
};

MapFamily parse_family(const std::string& name);

// Shared exact-norm cache for the pair loops; keys are sign-normalized
// difference vectors.
class NormCache {
public:
    explicit NormCache(HostSpace space) : space_(space) {}
    const Rational& distance(const SparseVector& a, const SparseVector& b);
    HostSpace space() const { return space_; }

private:
    HostSpace space_;
    std::map<SparseVector, Rational> memo_;
};

// Lip(f) over the finite instance: the graph structure makes this the max
// image distance over adjacent vertex pairs, divided by the edge length
// (the metric scale).
Rational lipschitz_constant(const PointMap& f, int k, const FiniteSet& alphabet,
                            const MetricKind& kind, HostSpace space);

Rational image_diameter(const PointMap& f, const std::vector<FinitePoint>& points,
                        NormCache& cache);

enum class SearchMode { exhaustive, greedy };

struct ConcentrationReport {
    int k = 0;
    FiniteSet alphabet;
    bool squared = false;     // values are squares (l2 host)
    Rational lip{0};          // over the full instance
    Rational full_diameter{0};
    FiniteSet best_subalphabet;
    Rational sub_diameter{0};
    Rational bound_5lip{0};   // 5 lip, or 25 lip^2 when squared
    bool holds = false;       // sub_diameter <= bound
    SearchMode search_mode = SearchMode::exhaustive;
};

// Finite stand-in for the extraction of an infinite sub-alphabet: search the
// sub-alphabets of the given size for the one minimizing the image diameter
// of [M']^k, and compare against 5 Lip(f).
ConcentrationReport concentration_check(const MapFamily& family, HostSpace space, int k,
                                        const FiniteSet& alphabet, int subsize, SearchMode mode,
                                        const MetricKind& kind = {Metric::hamming, Rational(1)},
                                        long budget = 200000);

// Diagnostic decomposition of each image as center + successive blocks,
// with the coordinatewise lower median as the center.
struct ExtractionReport {
    FiniteSet subalphabet;
    SparseVector center;
    bool squared = false;
    struct Item {
        FinitePoint point;
        SparseVector residual;
        std::vector<SparseVector> blocks;  // maximal runs of consecutive positions
        Rational residual_norm;
    };
    std::vector<Item> items;
    Rational max_residual_norm{0};
};

ExtractionReport extraction_surrogate(const MapFamily& family, HostSpace space, int k,
                                      const FiniteSet& alphabet);

// Summing family, per k: diameter/Lip into T* (bounded) against the same
// ratio into l2 (growing like sqrt(k), squared ratio k).
struct ContrastRow {
    int k = 0;
    bool has_tstar = false;
    Rational tstar_sub_diameter{0};
    Rational tstar_lip{0};
    Rational tstar_ratio{0};
    Rational l2_diameter_sq{0};
    Rational l2_lip_sq{0};
    Rational l2_ratio_sq{0};
};

std::vector<ContrastRow> contrast_experiment(const std::vector<int>& ks);

}  // namespace tsirelson
