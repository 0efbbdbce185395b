#pragma once

#include "tsirelson/sparse_vector.hpp"

#include <optional>
#include <vector>

namespace tsirelson {

// Point of the four metric spaces: a finite subset of N listed increasingly.
using FinitePoint = FiniteSet;

enum class Metric { tree, symdiff, hamming, johnson };

struct MetricKind {
    Metric kind;
    Rational scale{1};  // 1 for graph metrics, 1/k for the rescaled variants
};

Metric parse_metric(const std::string& name);
std::string metric_name(Metric m);

// |m| + |n| - 2|m ^ n|, with m ^ n the longest common initial segment.
int d_tree(const FinitePoint& m, const FinitePoint& n);
// |m triangle n|
int d_symdiff(const FinitePoint& m, const FinitePoint& n);
// differing coordinates among the first min(|m|,|n|), plus the length gap
int d_hamming(const FinitePoint& m, const FinitePoint& n);
// d_symdiff / 2; requires equal cardinalities
int d_johnson(const FinitePoint& m, const FinitePoint& n);

Rational metric_distance(const MetricKind& kind, const FinitePoint& m, const FinitePoint& n);

// Adjacent vertices of p inside the alphabet.  Tree: immediate predecessor
// and extensions; Hamming: single-coordinate replacements that keep the
// tuple strictly increasing in place (exactly the pairs at d_H = 1);
// Johnson: one-element swaps.
std::vector<FinitePoint> neighbors(const FinitePoint& p, const MetricKind& kind,
                                   const FiniteSet& alphabet);

// Shortest-path length in the graph induced on the alphabet; throws when
// q is unreachable from p.
int bfs_distance(const FinitePoint& p, const FinitePoint& q, const MetricKind& kind,
                 const FiniteSet& alphabet);
std::optional<int> bfs_distance_opt(const FinitePoint& p, const FinitePoint& q,
                                    const MetricKind& kind, const FiniteSet& alphabet);

enum class EnumerateVariant { exactly_k, up_to_k };

// All subsets of the alphabet of size exactly k (or <= k), size-graded and
// lexicographic within each size.
std::vector<FinitePoint> enumerate_points(const FiniteSet& alphabet, int k,
                                          EnumerateVariant variant);

struct GraphAgreementReport {
    long pairs = 0;
    long agree = 0;
    // pairs where BFS inside the alphabet exceeds the formula (no geodesic
    // realized in the finite instance) or is unreachable
    std::vector<std::pair<FinitePoint, FinitePoint>> excluded;
    bool sound = true;  // false would mean BFS beat the formula somewhere
};

// Compares bfs_distance with the formula metric on every vertex pair of the
// graph on [alphabet]^k (tree: [alphabet]^{<=k}).
GraphAgreementReport check_graph_agreement(Metric kind, int k, const FiniteSet& alphabet);

}  // namespace tsirelson
