#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "ehk/characters.h"
#include "ehk/field.h"
#include "ehk/partition.h"
#include "ehk/series.h"

namespace ehk {

// Finite linear combination of modified Macdonald basis elements, indexed by
// partitions. Zero coefficients are dropped eagerly, so structural equality
// is semantic equality.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(const Partition& p) { add(p, FieldElement::one(Context::qt())); }

    const std::map<Partition, FieldElement>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    FieldElement coeff(const Partition& p) const;
    void add(const Partition& p, const FieldElement& c);

    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(const FieldElement& c) const;
    bool operator==(const FockVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const FockVector& o) const { return !(*this == o); }

private:
    std::map<Partition, FieldElement> entries_;
};

std::string to_string(const FockVector& v);

// Graded operator on the Fock space: the entry <row|A|col> can be nonzero
// only when |row| = |col| + shift. Entries are computed lazily from a rule
// and memoized; copies share the cache.
class FockOperator {
public:
    using EntryFn = std::function<FieldElement(const Partition& row, const Partition& col)>;

    // The strictly zero operator (absorbing element for + at any shift).
    FockOperator() = default;

    static FockOperator identity();
    static FockOperator diagonal(std::function<FieldElement(const Partition&)> eigenvalue);
    static FockOperator make(int shift, EntryFn rule);

    int shift() const { return shift_; }
    bool is_strictly_zero() const { return !rule_; }
    // Conservative zero test used by the series plumbing.
    bool is_zero() const { return is_strictly_zero(); }

    FieldElement entry(const Partition& row, const Partition& col) const;

    FockOperator operator+(const FockOperator& o) const;
    FockOperator operator-(const FockOperator& o) const;
    FockOperator operator-() const;
    // Composition: (A*B) v = A (B v).
    FockOperator operator*(const FockOperator& o) const;
    FockOperator operator*(const FieldElement& c) const;
    FockOperator operator*(const Rational& c) const;

    FockVector apply(const FockVector& v) const;
    FockVector apply(const Partition& p) const { return apply(FockVector(p)); }

private:
    int shift_ = 0;
    EntryFn rule_;
    std::shared_ptr<std::map<std::pair<Partition, Partition>, FieldElement>> cache_;
};

inline FockOperator op_commutator(const FockOperator& a, const FockOperator& b) {
    return a * b - b * a;
}

// Entrywise agreement on all column degrees 0..max_degree.
bool op_equal_on(const FockOperator& a, const FockOperator& b, int max_degree);

struct OpMatrix {
    int degree = 0;
    int shift = 0;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<FieldElement>> entries;
};

// Rows index partitions of degree+shift, columns partitions of degree, both
// in descending lexicographic order.
OpMatrix op_matrix(const FockOperator& a, int degree);

// Box-adding operator family: <mu|f_plus(r)|nu> for mu = nu + s is
// q^((r+1)x(s)) t^((r+1)y(s)) L_{nu,mu} / ((1-q)(1-t)) with L the product
// over the column and row cells of nu through s.
FockOperator f_plus(int r);
// Box-removing family: <lambda|f_minus(k)|nu> for nu = lambda + s is
// q^(k x(s)) t^(k y(s)) L_{nu,lambda}.
FockOperator f_minus(int k);
// Diagonal family with eigenvalue b_stat(nu, l); l must be nonzero.
FockOperator f_zero(int l);
// Diagonal family with eigenvalue e_|l| of the box monomials (inverted
// monomials for negative l); l must be nonzero.
FockOperator e_zero(int l);
// Renormalized generators: h(1,l) = t^(1/2) f_plus(l-1),
// h(-1,k) = -q^(1/2) f_minus(k), h(0,±n) = ±(f_zero(±n) - scalar).
FockOperator h_op(int i, int l);
// Diagonal t^(n(lambda)) q^(n(lambda')).
FockOperator nabla();
// Entrywise multiplication by sum of box monomials of lambda \ mu to the
// l-th power. Requires nonnegative shift; support violations (a nonzero
// entry at mu not contained in lambda) surface lazily as DomainError.
FockOperator hecke_twist(int l, const FockOperator& a);

// Generating series whose z^k coefficient is the degree-k exterior-power
// operator of the tautological difference bundle (shift +k on the plus
// side, -k on the minus side). Implemented over the lattice generators, so
// these live in the translation unit that knows omega.
FormalSeries<FockOperator> virtual_plus_series(int order);
FormalSeries<FockOperator> virtual_minus_series(int order);

} // namespace ehk
