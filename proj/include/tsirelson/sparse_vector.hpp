#pragma once

#include "tsirelson/rational.hpp"

#include <string>
#include <vector>

namespace tsirelson {

// Sorted, duplicate-free list of integers >= 1.  {} is the empty set.
// Convention from the admissibility bookkeeping: max({}) = 0.
using FiniteSet = std::vector<int>;

bool is_valid_finite_set(const FiniteSet& s);
FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b);
FiniteSet range_set(int lo, int hi);  // {lo, lo+1, ..., hi}
bool set_contains(const FiniteSet& s, int v);

// "1,3,5"; the empty string is the empty set.
FiniteSet parse_point(const std::string& text);
std::string point_str(const FiniteSet& s);

struct VectorEntry {
    int pos;         // >= 1
    Rational coeff;  // nonzero
};

// Finitely supported vector x = sum xi_j e_j with exact rational
// coefficients, positions starting at 1.  Entries are strictly increasing
// in position and never zero; the empty entry list is the zero vector.
class SparseVector {
public:
    SparseVector() = default;

    // Entries may arrive unsorted; zero coefficients are dropped and
    // duplicate positions are an error.
    static SparseVector make(std::vector<VectorEntry> entries);
    static SparseVector basis(int pos);

    const std::vector<VectorEntry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    int size() const { return static_cast<int>(entries_.size()); }
    Rational coeff_at(int pos) const;  // 0 when absent

    friend bool operator==(const SparseVector& a, const SparseVector& b);
    friend bool operator<(const SparseVector& a, const SparseVector& b);  // lexicographic, for map keys

private:
    std::vector<VectorEntry> entries_;
};

SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a);
SparseVector operator*(const Rational& q, const SparseVector& a);

// Whitespace-separated "pos:num" / "pos:num/den" tokens; "" parses to zero.
SparseVector parse_vector(const std::string& text);
std::string vector_str(const SparseVector& x);

// E(x): the entries of x whose positions lie in E.
SparseVector restrict(const SparseVector& x, const FiniteSet& e);
FiniteSet support(const SparseVector& x);

// True iff supp(x_{j-1}) < supp(x_j) for all consecutive pairs; a zero
// vector anywhere in the list is an error.
bool is_block(const std::vector<SparseVector>& xs);

Rational sup_norm(const SparseVector& x);
Rational l1_norm(const SparseVector& x);
Rational l2_norm_sq(const SparseVector& x);
Rational inner_product(const SparseVector& a, const SparseVector& b);

}  // namespace tsirelson
