#include "tsirelson/tnorm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tsirelson {

bool is_admissible(const std::vector<FiniteSet>& pieces) {
    const int n = static_cast<int>(pieces.size());
    for (const auto& p : pieces)
        if (p.empty() || !is_valid_finite_set(p)) return false;
    for (int j = 1; j < n; ++j)
        if (pieces[j - 1].back() >= pieces[j].front()) return false;
    if (n > 0 && n > pieces[0].front()) return false;
    return true;
}

NormFunctional NormFunctional::leaf(int pos, int sign) {
    if (pos < 1) throw std::invalid_argument("leaf position < 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("leaf sign must be +-1");
    NormFunctional f;
    f.pos_ = pos;
    f.sign_ = sign;
    return f;
}

NormFunctional NormFunctional::node(std::vector<NormFunctional> children) {
    if (children.empty()) throw std::invalid_argument("node needs at least one child");
    NormFunctional f;
    f.children_ = std::move(children);
    return f;
}

Rational evaluate_functional(const NormFunctional& f, const SparseVector& x) {
    if (f.is_leaf()) return Rational(f.leaf_sign()) * x.coeff_at(f.leaf_pos());
    Rational s(0);
    for (const auto& c : f.children()) s += evaluate_functional(c, x);
    return s / 2;
}

FiniteSet functional_support(const NormFunctional& f) {
    if (f.is_leaf()) return {f.leaf_pos()};
    FiniteSet out;
    for (const auto& c : f.children()) {
        FiniteSet cs = functional_support(c);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool validate_functional(const NormFunctional& f) {
    if (f.is_leaf()) return f.leaf_pos() >= 1 && (f.leaf_sign() == 1 || f.leaf_sign() == -1);
    const auto& cs = f.children();
    if (cs.empty()) return false;
    for (const auto& c : cs)
        if (!validate_functional(c)) return false;
    std::vector<FiniteSet> supports;
    supports.reserve(cs.size());
    for (const auto& c : cs) supports.push_back(functional_support(c));
    for (size_t j = 1; j < supports.size(); ++j)
        if (supports[j - 1].back() >= supports[j].front()) return false;
    return static_cast<int>(cs.size()) <= supports.front().front();
}

SparseVector functional_coefficients(const NormFunctional& f) {
    if (f.is_leaf()) return Rational(f.leaf_sign()) * SparseVector::basis(f.leaf_pos());
    SparseVector s;
    for (const auto& c : f.children()) s = s + functional_coefficients(c);
    return Rational(1, 2) * s;
}

std::string functional_str(const NormFunctional& f) {
    if (f.is_leaf()) return (f.leaf_sign() < 0 ? "-e*" : "e*") + std::to_string(f.leaf_pos());
    std::string out = "(1/2)(";
    bool first = true;
    for (const auto& c : f.children()) {
        std::string cs = functional_str(c);
        if (first) {
            out += cs;
            first = false;
        } else if (cs.front() == '-') {
            out += " - " + cs.substr(1);
        } else {
            out += " + " + cs;
        }
    }
    return out + ")";
}

namespace {

// Dynamic program over consecutive runs of support points.  For support
// indices i..j (0-based into the sorted support list) the norm satisfies
//   val(i,j) = max( max |xi| over i..j,
//                   1/2 * max over t in [i..j], pos[t] >= 2, of split(t,j) )
// where split(t,j) is the best value of partitioning support points t..j
// into m consecutive nonempty chunks, 2 <= m <= min(pos[t], j-t+1), summing
// chunk norms.  Dropping the points i..t-1 realizes partitions that start
// late; chunks cover t..j without gaps (adding a skipped point to the
// preceding piece never decreases its norm).
struct NormTable {
    std::vector<int> pos;
    std::vector<Rational> coeff;
    int n = 0;

    // per (i,j): value, plus the chunk decomposition of the best split seen
    // for any start t >= i (empty chunks mean the sup-norm base wins)
    std::vector<std::vector<Rational>> val;
    std::vector<std::vector<Rational>> maxsplit;                      // -1 when no split exists
    std::vector<std::vector<std::vector<std::pair<int, int>>>> chunks;  // chunk index ranges

    explicit NormTable(const SparseVector& x) {
        for (const auto& e : x.entries()) {
            pos.push_back(e.pos);
            coeff.push_back(e.coeff);
        }
        n = static_cast<int>(pos.size());
        val.assign(n, std::vector<Rational>(n, Rational(0)));
        maxsplit.assign(n, std::vector<Rational>(n, Rational(-1)));
        chunks.assign(n, std::vector<std::vector<std::pair<int, int>>>(n));
        for (int len = 1; len <= n; ++len)
            for (int i = 0; i + len - 1 < n; ++i) fill(i, i + len - 1);
    }

    // best split of t..j into m >= 2 chunks, with admissibility m <= pos[t]
    std::pair<Rational, std::vector<std::pair<int, int>>> best_split(int t, int j) const {
        const int cnt = j - t + 1;
        const int mcap = std::min(pos[t], cnt);
        std::pair<Rational, std::vector<std::pair<int, int>>> best{Rational(-1), {}};
        if (pos[t] < 2 || mcap < 2) return best;

        const int w = cnt;  // columns indexed by u - t
        std::vector<std::vector<Rational>> m_val(mcap + 1, std::vector<Rational>(w, Rational(-1)));
        std::vector<std::vector<int>> m_cut(mcap + 1, std::vector<int>(w, -1));
        for (int u = t; u < j; ++u) m_val[1][u - t] = val[t][u];
        for (int m = 2; m <= mcap; ++m) {
            for (int u = t + m - 1; u <= j; ++u) {
                Rational& cur = m_val[m][u - t];
                for (int v = t + m - 2; v <= u - 1; ++v) {
                    const Rational& prev = m_val[m - 1][v - t];
                    if (prev < 0) continue;
                    Rational cand = prev + val[v + 1][u];
                    if (cand > cur) {
                        cur = std::move(cand);
                        m_cut[m][u - t] = v;
                    }
                }
            }
        }
        int best_m = -1;
        for (int m = 2; m <= mcap; ++m) {
            if (m_val[m][w - 1] > best.first) {
                best.first = m_val[m][w - 1];
                best_m = m;
            }
        }
        if (best_m < 0) return best;
        // walk the cut pointers back into explicit chunk ranges
        std::vector<std::pair<int, int>> cs;
        int u = j;
        for (int m = best_m; m >= 2; --m) {
            const int v = m_cut[m][u - t];
            cs.emplace_back(v + 1, u);
            u = v;
        }
        cs.emplace_back(t, u);
        std::reverse(cs.begin(), cs.end());
        best.second = std::move(cs);
        return best;
    }

    void fill(int i, int j) {
        Rational base(0);
        for (int a = i; a <= j; ++a) {
            Rational c = abs(coeff[a]);
            if (c > base) base = std::move(c);
        }
        auto own = best_split(i, j);
        // inherit the best split over starts t > i
        if (i + 1 <= j && maxsplit[i + 1][j] >= own.first) {
            maxsplit[i][j] = maxsplit[i + 1][j];
            chunks[i][j] = chunks[i + 1][j];
        } else {
            maxsplit[i][j] = own.first;
            chunks[i][j] = std::move(own.second);
        }
        if (maxsplit[i][j] > 0 && maxsplit[i][j] / 2 > base) {
            val[i][j] = maxsplit[i][j] / 2;
        } else {
            val[i][j] = std::move(base);
            chunks[i][j].clear();
        }
    }

    NormFunctional certificate(int i, int j) const {
        if (chunks[i][j].empty()) {
            int arg = i;
            Rational best(-1);
            for (int a = i; a <= j; ++a) {
                Rational c = abs(coeff[a]);
                if (c > best) {
                    best = std::move(c);
                    arg = a;
                }
            }
            return NormFunctional::leaf(pos[arg], sgn(coeff[arg]) < 0 ? -1 : 1);
        }
        std::vector<NormFunctional> children;
        children.reserve(chunks[i][j].size());
        for (const auto& [a, b] : chunks[i][j]) children.push_back(certificate(a, b));
        return NormFunctional::node(std::move(children));
    }
};

}  // namespace

TNormResult t_norm(const SparseVector& x) {
    if (x.is_zero()) return {Rational(0), NormFunctional::leaf(1, 1)};
    NormTable table(x);
    return {table.val[0][table.n - 1], table.certificate(0, table.n - 1)};
}

Rational t_norm_value(const SparseVector& x) {
    if (x.is_zero()) return Rational(0);
    NormTable table(x);
    return table.val[0][table.n - 1];
}

Rational t_norm_level(const SparseVector& x, int k) {
    if (k < 0) throw std::invalid_argument("negative level");
    if (x.is_zero()) return Rational(0);
    std::vector<int> pos;
    std::vector<Rational> coeff;
    for (const auto& e : x.entries()) {
        pos.push_back(e.pos);
        coeff.push_back(e.coeff);
    }
    const int n = static_cast<int>(pos.size());

    // level 0: interval sup norms
    std::vector<std::vector<Rational>> prev(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        Rational run(0);
        for (int j = i; j < n; ++j) {
            Rational c = abs(coeff[j]);
            if (c > run) run = c;
            prev[i][j] = run;
        }
    }

    for (int level = 1; level <= k; ++level) {
        // split(t,j) over pieces measured at the previous level
        std::vector<std::vector<Rational>> split(n, std::vector<Rational>(n, Rational(-1)));
        for (int t = 0; t < n; ++t) {
            if (pos[t] < 2) continue;
            for (int j = t + 1; j < n; ++j) {
                const int cnt = j - t + 1;
                const int mcap = std::min(pos[t], cnt);
                if (mcap < 2) continue;
                std::vector<std::vector<Rational>> m_val(mcap + 1,
                                                         std::vector<Rational>(cnt, Rational(-1)));
                for (int u = t; u <= j; ++u) m_val[1][u - t] = prev[t][u];
                Rational best(-1);
                for (int m = 2; m <= mcap; ++m) {
                    for (int u = t + m - 1; u <= j; ++u) {
                        Rational& cur = m_val[m][u - t];
                        for (int v = t + m - 2; v <= u - 1; ++v) {
                            if (m_val[m - 1][v - t] < 0) continue;
                            Rational cand = m_val[m - 1][v - t] + prev[v + 1][u];
                            if (cand > cur) cur = std::move(cand);
                        }
                    }
                    if (m_val[m][cnt - 1] > best) best = m_val[m][cnt - 1];
                }
                split[t][j] = std::move(best);
            }
        }
        std::vector<std::vector<Rational>> cur = prev;
        bool changed = false;
        for (int j = 0; j < n; ++j) {
            Rational suffix(-1);
            for (int i = j; i >= 0; --i) {
                if (split[i][j] > suffix) suffix = split[i][j];
                if (suffix > 0 && suffix / 2 > cur[i][j]) cur[i][j] = suffix / 2;
                if (cur[i][j] != prev[i][j]) changed = true;
            }
        }
        prev = std::move(cur);
        if (!changed) break;  // fixpoint: all later levels coincide
    }
    return prev[0][n - 1];
}

Rational t_norm_bruteforce(const SparseVector& x, int support_cap) {
    const int n = x.size();
    if (n > support_cap) throw std::invalid_argument("support too large for brute-force oracle");
    if (n == 0) return Rational(0);
    std::vector<int> pos;
    std::vector<Rational> coeff;
    for (const auto& e : x.entries()) {
        pos.push_back(e.pos);
        coeff.push_back(e.coeff);
    }

    std::vector<Rational> memo(size_t{1} << n, Rational(-1));
    // best(mask) = norm of the restriction to the support subset `mask`,
    // enumerating every admissible family of subsets of `mask`
    auto best = [&](auto&& self, uint32_t mask) -> const Rational& {
        Rational& out = memo[mask];
        if (out >= 0) return out;
        Rational res(0);
        for (uint32_t b = mask; b; b &= b - 1) {
            Rational c = abs(coeff[std::countr_zero(b)]);
            if (c > res) res = std::move(c);
        }
        // U = union of the pieces; a family of successive pieces covering U
        // is exactly a composition of U's elements into consecutive chunks
        for (uint32_t u_set = mask; u_set; u_set = (u_set - 1) & mask) {
            std::vector<int> elems;
            for (uint32_t b = u_set; b; b &= b - 1) elems.push_back(std::countr_zero(b));
            const int r = static_cast<int>(elems.size());
            const int first_pos = pos[elems[0]];
            for (uint32_t cuts = 0; cuts < (uint32_t{1} << (r - 1)); ++cuts) {
                const int m = std::popcount(cuts) + 1;
                if (m > first_pos) continue;
                if (m == 1 && u_set == mask) continue;  // the one non-shrinking piece
                Rational sum(0);
                uint32_t piece = 0;
                for (int g = 0; g < r; ++g) {
                    piece |= uint32_t{1} << elems[g];
                    if (g == r - 1 || (cuts >> g) & 1) {
                        sum += self(self, piece);
                        piece = 0;
                    }
                }
                sum /= 2;
                if (sum > res) res = std::move(sum);
            }
        }
        out = std::move(res);
        return out;
    };
    return best(best, (uint32_t{1} << n) - 1);
}

}  // namespace tsirelson
