#include "tsirelson/metrics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tsirelson {

Metric parse_metric(const std::string& name) {
    if (name == "tree") return Metric::tree;
    if (name == "symdiff") return Metric::symdiff;
    if (name == "hamming") return Metric::hamming;
    if (name == "johnson") return Metric::johnson;
    throw std::invalid_argument("unknown metric '" + name + "'");
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::tree: return "tree";
        case Metric::symdiff: return "symdiff";
        case Metric::hamming: return "hamming";
        case Metric::johnson: return "johnson";
    }
    throw std::logic_error("unreachable");
}

int d_tree(const FinitePoint& m, const FinitePoint& n) {
    size_t common = 0;
    while (common < m.size() && common < n.size() && m[common] == n[common]) ++common;
    return static_cast<int>(m.size() + n.size() - 2 * common);
}

int d_symdiff(const FinitePoint& m, const FinitePoint& n) {
    size_t i = 0, j = 0;
    int d = 0;
    while (i < m.size() || j < n.size()) {
        if (j == n.size() || (i < m.size() && m[i] < n[j])) {
            ++d;
            ++i;
        } else if (i == m.size() || n[j] < m[i]) {
            ++d;
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return d;
}

int d_hamming(const FinitePoint& m, const FinitePoint& n) {
    const size_t lo = std::min(m.size(), n.size());
    int d = 0;
    for (size_t i = 0; i < lo; ++i)
        if (m[i] != n[i]) ++d;
    return d + static_cast<int>(std::max(m.size(), n.size()) - lo);
}

int d_johnson(const FinitePoint& m, const FinitePoint& n) {
    if (m.size() != n.size())
        throw std::invalid_argument("Johnson metric requires equal cardinalities");
    return d_symdiff(m, n) / 2;
}

Rational metric_distance(const MetricKind& kind, const FinitePoint& m, const FinitePoint& n) {
    int d = 0;
    switch (kind.kind) {
        case Metric::tree: d = d_tree(m, n); break;
        case Metric::symdiff: d = d_symdiff(m, n); break;
        case Metric::hamming: d = d_hamming(m, n); break;
        case Metric::johnson: d = d_johnson(m, n); break;
    }
    return kind.scale * Rational(d);
}

std::vector<FinitePoint> neighbors(const FinitePoint& p, const MetricKind& kind,
                                   const FiniteSet& alphabet) {
    for (int v : p)
        if (!set_contains(alphabet, v))
            throw std::invalid_argument("point not inside the alphabet");

    std::vector<FinitePoint> out;
    switch (kind.kind) {
        case Metric::tree: {
            if (!p.empty()) out.push_back(FinitePoint(p.begin(), p.end() - 1));
            const int top = p.empty() ? 0 : p.back();
            for (int v : alphabet) {
                if (v <= top) continue;
                FinitePoint q = p;
                q.push_back(v);
                out.push_back(std::move(q));
            }
            break;
        }
        case Metric::symdiff: {
            // adjacency at d_symdiff = 1: drop or add one element
            for (size_t i = 0; i < p.size(); ++i) {
                FinitePoint q = p;
                q.erase(q.begin() + i);
                out.push_back(std::move(q));
            }
            for (int v : alphabet) {
                if (set_contains(p, v)) continue;
                FinitePoint q = p;
                q.insert(std::upper_bound(q.begin(), q.end(), v), v);
                out.push_back(std::move(q));
            }
            break;
        }
        case Metric::hamming: {
            // replace coordinate i keeping the tuple strictly increasing in
            // place, so the result differs from p in exactly one coordinate
            const int k = static_cast<int>(p.size());
            for (int i = 0; i < k; ++i) {
                for (int v : alphabet) {
                    if (v == p[i]) continue;
                    if (i > 0 && v <= p[i - 1]) continue;
                    if (i + 1 < k && v >= p[i + 1]) continue;
                    FinitePoint q = p;
                    q[i] = v;
                    out.push_back(std::move(q));
                }
            }
            break;
        }
        case Metric::johnson: {
            for (size_t i = 0; i < p.size(); ++i) {
                for (int v : alphabet) {
                    if (set_contains(p, v)) continue;
                    FinitePoint q = p;
                    q.erase(q.begin() + i);
                    q.insert(std::upper_bound(q.begin(), q.end(), v), v);
                    out.push_back(std::move(q));
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> bfs_distance_opt(const FinitePoint& p, const FinitePoint& q,
                                    const MetricKind& kind, const FiniteSet& alphabet) {
    if (p == q) return 0;
    std::map<FinitePoint, int> dist;
    dist[p] = 0;
    std::deque<FinitePoint> queue{p};
    while (!queue.empty()) {
        const FinitePoint cur = std::move(queue.front());
        queue.pop_front();
        const int d = dist[cur];
        for (auto& nb : neighbors(cur, kind, alphabet)) {
            if (dist.count(nb)) continue;
            if (nb == q) return d + 1;
            dist[nb] = d + 1;
            queue.push_back(std::move(nb));
        }
    }
    return std::nullopt;
}

int bfs_distance(const FinitePoint& p, const FinitePoint& q, const MetricKind& kind,
                 const FiniteSet& alphabet) {
    const auto d = bfs_distance_opt(p, q, kind, alphabet);
    if (!d) throw std::domain_error("unreachable: alphabet too small");
    return *d;
}

std::vector<FinitePoint> enumerate_points(const FiniteSet& alphabet, int k,
                                          EnumerateVariant variant) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::vector<FinitePoint> out;
    const int lo = variant == EnumerateVariant::up_to_k ? 0 : k;
    for (int size = lo; size <= k; ++size) {
        if (size > static_cast<int>(alphabet.size())) break;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            FinitePoint p(size);
            for (int i = 0; i < size; ++i) p[i] = alphabet[idx[i]];
            out.push_back(std::move(p));
            int i = size - 1;
            while (i >= 0 && idx[i] == static_cast<int>(alphabet.size()) - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

GraphAgreementReport check_graph_agreement(Metric kind, int k, const FiniteSet& alphabet) {
    const MetricKind mk{kind, Rational(1)};
    const auto variant =
        kind == Metric::tree || kind == Metric::symdiff ? EnumerateVariant::up_to_k
                                                        : EnumerateVariant::exactly_k;
    const auto points = enumerate_points(alphabet, k, variant);
    if (points.size() > 450)
        throw std::invalid_argument("graph instance too large for pairwise BFS");

    GraphAgreementReport report;
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            ++report.pairs;
            const Rational formula = metric_distance(mk, points[i], points[j]);
            const auto bfs = bfs_distance_opt(points[i], points[j], mk, alphabet);
            if (bfs && Rational(*bfs) == formula) {
                ++report.agree;
            } else if (!bfs || Rational(*bfs) > formula) {
                report.excluded.emplace_back(points[i], points[j]);
            } else {
                report.sound = false;
                report.excluded.emplace_back(points[i], points[j]);
            }
        }
    }
    return report;
}

}  // namespace tsirelson
