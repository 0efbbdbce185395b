#include "tsirelson/sparse_vector.hpp"

#include <algorithm>
#include <sstream>

namespace tsirelson {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_valid_finite_set(const FiniteSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) return false;
        if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    return true;
}

FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
    FiniteSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

FiniteSet range_set(int lo, int hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad range");
    FiniteSet out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

bool set_contains(const FiniteSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

FiniteSet parse_point(const std::string& text) {
    FiniteSet out;
    std::string token;
    std::stringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty element in point");
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed point element '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("malformed point element '" + token + "'");
        out.push_back(v);
    }
    if (!is_valid_finite_set(out))
        throw std::invalid_argument("point elements must be >= 1 and strictly increasing");
    return out;
}

std::string point_str(const FiniteSet& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

SparseVector SparseVector::make(std::vector<VectorEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const VectorEntry& a, const VectorEntry& b) { return a.pos < b.pos; });
    SparseVector x;
    for (auto& e : entries) {
        if (e.pos < 1) throw std::invalid_argument("vector position < 1");
        if (!x.entries_.empty() && x.entries_.back().pos == e.pos)
            throw std::invalid_argument("duplicate position " + std::to_string(e.pos));
        if (e.coeff != 0) x.entries_.push_back(std::move(e));
    }
    return x;
}

SparseVector SparseVector::basis(int pos) {
    return make({{pos, Rational(1)}});
}

Rational SparseVector::coeff_at(int pos) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), pos,
                               [](const VectorEntry& e, int p) { return e.pos < p; });
    if (it != entries_.end() && it->pos == pos) return it->coeff;
    return Rational(0);
}

bool operator==(const SparseVector& a, const SparseVector& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i].pos != b.entries_[i].pos || a.entries_[i].coeff != b.entries_[i].coeff)
            return false;
    return true;
}

bool operator<(const SparseVector& a, const SparseVector& b) {
    const size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.entries_[i].pos != b.entries_[i].pos) return a.entries_[i].pos < b.entries_[i].pos;
        const int c = cmp(a.entries_[i].coeff, b.entries_[i].coeff);
        if (c != 0) return c < 0;
    }
    return a.entries_.size() < b.entries_.size();
}

namespace {

SparseVector merge(const SparseVector& a, const SparseVector& b, int bsign) {
    std::vector<VectorEntry> out;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].pos < eb[j].pos)) {
            out.push_back(ea[i++]);
        } else if (i == ea.size() || eb[j].pos < ea[i].pos) {
            out.push_back({eb[j].pos, bsign * eb[j].coeff});
            ++j;
        } else {
            Rational c = ea[i].coeff + bsign * eb[j].coeff;
            if (c != 0) out.push_back({ea[i].pos, std::move(c)});
            ++i;
            ++j;
        }
    }
    return SparseVector::make(std::move(out));
}

}  // namespace

SparseVector operator+(const SparseVector& a, const SparseVector& b) { return merge(a, b, 1); }
SparseVector operator-(const SparseVector& a, const SparseVector& b) { return merge(a, b, -1); }
SparseVector operator-(const SparseVector& a) { return Rational(-1) * a; }

SparseVector operator*(const Rational& q, const SparseVector& a) {
    if (q == 0) return SparseVector();
    std::vector<VectorEntry> out = a.entries();
    for (auto& e : out) e.coeff *= q;
    return SparseVector::make(std::move(out));
}

SparseVector parse_vector(const std::string& text) {
    std::vector<VectorEntry> entries;
    std::stringstream in(text);
    std::string token;
    while (in >> token) {
        const auto colon = token.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw std::invalid_argument("malformed vector token '" + token + "'");
        int pos = 0;
        size_t used = 0;
        try {
            pos = std::stoi(token.substr(0, colon), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed vector token '" + token + "'");
        }
        if (used != colon) throw std::invalid_argument("malformed vector token '" + token + "'");
        if (pos < 1) throw std::invalid_argument("vector position < 1 in '" + token + "'");
        Rational c = parse_rational(token.substr(colon + 1));
        entries.push_back({pos, std::move(c)});
    }
    // make() rejects duplicate positions
    return SparseVector::make(std::move(entries));
}

std::string vector_str(const SparseVector& x) {
    std::string out;
    for (const auto& e : x.entries()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e.pos) + ":" + rational_str(e.coeff);
    }
    return out;
}

SparseVector restrict(const SparseVector& x, const FiniteSet& e) {
    std::vector<VectorEntry> out;
    for (const auto& en : x.entries())
        if (set_contains(e, en.pos)) out.push_back(en);
    return SparseVector::make(std::move(out));
}

FiniteSet support(const SparseVector& x) {
    FiniteSet s;
    for (const auto& e : x.entries()) s.push_back(e.pos);
    return s;
}

bool is_block(const std::vector<SparseVector>& xs) {
    for (const auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("zero vector in block sequence");
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1].entries().back().pos >= xs[i].entries().front().pos) return false;
    return true;
}

Rational sup_norm(const SparseVector& x) {
    Rational m(0);
    for (const auto& e : x.entries()) {
        Rational a = abs(e.coeff);
        if (a > m) m = a;
    }
    return m;
}

Rational l1_norm(const SparseVector& x) {
    Rational s(0);
    for (const auto& e : x.entries()) s += abs(e.coeff);
    return s;
}

Rational l2_norm_sq(const SparseVector& x) {
    Rational s(0);
    for (const auto& e : x.entries()) s += e.coeff * e.coeff;
    return s;
}

Rational inner_product(const SparseVector& a, const SparseVector& b) {
    Rational s(0);
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].pos < eb[j].pos)
            ++i;
        else if (eb[j].pos < ea[i].pos)
            ++j;
        else
            s += ea[i++].coeff * eb[j++].coeff;
    }
    return s;
}

}  // namespace tsirelson
