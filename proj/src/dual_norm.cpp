#include "tsirelson/dual_norm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tsirelson {

TStarResult tstar_norm(const SparseVector& xstar, int iteration_cap) {
    if (xstar.is_zero())
        return {Rational(0), DualCertificatePair{SparseVector(), {}, Rational(0)}};

    const FiniteSet positions = support(xstar);
    const int n = static_cast<int>(positions.size());
    std::vector<Rational> objective;  // |x*| over the support
    objective.reserve(n);
    for (const auto& e : xstar.entries()) objective.push_back(abs(e.coeff));

    ExactLp lp;
    lp.objective = objective;
    for (int j = 0; j < n; ++j) {
        LpRow up{std::vector<Rational>(n, Rational(0)), Rational(1)};
        up.coeffs[j] = 1;
        lp.rows.push_back(std::move(up));
        LpRow down{std::vector<Rational>(n, Rational(0)), Rational(0)};
        down.coeffs[j] = -1;
        lp.rows.push_back(std::move(down));
    }

    std::vector<NormFunctional> cuts;
    for (int iter = 0; iter < iteration_cap; ++iter) {
        const LpSolution sol = solve_lp_exact(lp);
        if (sol.status != LpStatus::optimal)
            throw std::runtime_error("cutting-plane LP lost boundedness or feasibility");

        std::vector<VectorEntry> entries;
        for (int j = 0; j < n; ++j)
            if (sol.point[j] != 0) entries.push_back({positions[j], sol.point[j]});
        const SparseVector xi = SparseVector::make(std::move(entries));

        TNormResult t = t_norm(xi);
        if (t.value <= 1) {
            // restore the signs of x* on the witness
            std::vector<VectorEntry> w;
            for (const auto& e : xstar.entries()) {
                Rational v = sol.point[static_cast<int>(
                    std::lower_bound(positions.begin(), positions.end(), e.pos) -
                    positions.begin())];
                if (sgn(e.coeff) < 0) v = -v;
                if (v != 0) w.push_back({e.pos, std::move(v)});
            }
            SparseVector witness = SparseVector::make(std::move(w));
            Rational value = inner_product(xstar, witness);
            if (value != sol.value)
                throw std::runtime_error("witness value mismatch in cutting-plane loop");
            return {value, DualCertificatePair{std::move(witness), std::move(cuts), value}};
        }

        // f(xi) = t_norm(xi) > 1: a violated member of the norming set
        const SparseVector frow = functional_coefficients(t.certificate);
        LpRow cut{std::vector<Rational>(n, Rational(0)), Rational(1)};
        for (const auto& e : frow.entries()) {
            const auto it = std::lower_bound(positions.begin(), positions.end(), e.pos);
            cut.coeffs[static_cast<int>(it - positions.begin())] = e.coeff;
        }
        lp.rows.push_back(std::move(cut));
        cuts.push_back(std::move(t.certificate));
    }
    throw std::runtime_error("cutting-plane iteration cap exceeded");
}

Rational tstar_norm_value(const SparseVector& xstar) { return tstar_norm(xstar).value; }

namespace {

void append_products(const std::vector<std::vector<SparseVector>>& child_sets, size_t idx,
                     const SparseVector& acc, std::set<SparseVector>& out) {
    if (idx == child_sets.size()) {
        out.insert(Rational(1, 2) * acc);
        return;
    }
    for (const auto& c : child_sets[idx]) append_products(child_sets, idx + 1, acc + c, out);
}

// all coefficient vectors with support exactly `s`
const std::vector<SparseVector>& vectors_for_support(const FiniteSet& s,
                                                     std::map<FiniteSet, std::vector<SparseVector>>& memo) {
    auto found = memo.find(s);
    if (found != memo.end()) return found->second;

    std::set<SparseVector> out;
    const int r = static_cast<int>(s.size());
    if (r == 1) {
        out.insert(SparseVector::basis(s[0]));
        out.insert(-SparseVector::basis(s[0]));
    }
    const int mcap = std::min(s.front(), r);
    for (int m = 2; m <= mcap; ++m) {
        // compositions of s into m consecutive chunks
        std::vector<int> cuts(m - 1);
        for (int i = 0; i < m - 1; ++i) cuts[i] = i;
        for (;;) {
            std::vector<std::vector<SparseVector>> child_sets;
            int start = 0;
            bool nonempty_all = true;
            for (int piece = 0; piece < m; ++piece) {
                const int end = piece + 1 < m ? cuts[piece] + 1 : r;  // exclusive
                FiniteSet chunk(s.begin() + start, s.begin() + end);
                start = end;
                const auto& vs = vectors_for_support(chunk, memo);
                if (vs.empty()) {
                    nonempty_all = false;
                    break;
                }
                child_sets.push_back(vs);
            }
            if (nonempty_all) append_products(child_sets, 0, SparseVector(), out);

            // next composition: cut positions are an increasing (m-1)-subset
            // of {0, .., r-2}
            int i = m - 2;
            while (i >= 0 && cuts[i] == r - 2 - (m - 2 - i)) --i;
            if (i < 0) break;
            ++cuts[i];
            for (int j = i + 1; j < m - 1; ++j) cuts[j] = cuts[j - 1] + 1;
        }
    }
    auto [it, ignored] = memo.emplace(s, std::vector<SparseVector>(out.begin(), out.end()));
    return it->second;
}

void enumerate_subsets(int max_pos, int next, FiniteSet& cur,
                       std::map<FiniteSet, std::vector<SparseVector>>& memo,
                       std::set<SparseVector>& all) {
    if (!cur.empty()) {
        const auto& vs = vectors_for_support(cur, memo);
        all.insert(vs.begin(), vs.end());
    }
    for (int v = next; v <= max_pos; ++v) {
        cur.push_back(v);
        enumerate_subsets(max_pos, v + 1, cur, memo, all);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SparseVector> norming_set_vectors(int max_pos) {
    if (max_pos < 1) throw std::invalid_argument("max_pos must be >= 1");
    std::map<FiniteSet, std::vector<SparseVector>> memo;
    std::set<SparseVector> all;
    FiniteSet cur;
    enumerate_subsets(max_pos, 1, cur, memo, all);
    return {all.begin(), all.end()};
}

Rational tstar_norm_bruteforce(const SparseVector& xstar, int position_cap) {
    if (xstar.is_zero()) return Rational(0);
    const FiniteSet supp = support(xstar);
    const int maxpos = supp.back();
    if (maxpos > position_cap)
        throw std::invalid_argument("support bound exceeded for brute-force oracle");

    ExactLp lp;
    lp.objective.assign(maxpos, Rational(0));
    for (const auto& e : xstar.entries()) lp.objective[e.pos - 1] = e.coeff;
    for (const auto& f : norming_set_vectors(maxpos)) {
        LpRow row{std::vector<Rational>(maxpos, Rational(0)), Rational(1)};
        for (const auto& e : f.entries()) row.coeffs[e.pos - 1] = e.coeff;
        lp.rows.push_back(std::move(row));
    }
    const LpSolution sol = solve_lp_exact(lp);
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("norming-set LP lost boundedness or feasibility");
    return sol.value;
}

BlockInequalityResult check_block_inequality(const std::vector<SparseVector>& xstars) {
    if (xstars.empty()) throw std::invalid_argument("empty block sequence");
    for (const auto& x : xstars)
        if (x.is_zero()) throw std::invalid_argument("zero functional in block sequence");
    if (!is_block(xstars)) throw std::invalid_argument("not a block sequence");
    const int n = static_cast<int>(xstars.size());
    if (n > xstars.front().entries().front().pos)
        throw std::invalid_argument("admissibility violated: n > min(supp(x*_1))");
    for (int j = 0; j < n; ++j)
        if (tstar_norm_value(xstars[j]) > 1)
            throw std::invalid_argument("functional " + std::to_string(j + 1) +
                                        " lies outside the dual unit ball");
    SparseVector sum;
    for (const auto& x : xstars) sum = sum + x;
    const Rational norm = tstar_norm_value(sum);
    return {norm, norm <= 2};
}

}  // namespace tsirelson
