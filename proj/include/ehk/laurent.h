#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehk/context.h"
#include "ehk/rational.h"

namespace ehk {

// Monomial order: total degree first, then lexicographic on the exponent
// vector. This is a group order on Laurent exponents, so leading terms are
// well defined even with negative entries.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Laurent polynomial over Q in the generators of a Context. Exponents are
// stored in half steps: entry n for a generator g means g^(n/2), so q^(1/2)
// is representable exactly and q itself is exponent 2.
//
// Terms are kept ascending under GradedLex with no zero coefficients. The
// exponent keys live back to back in one flat int buffer, each as
// [total degree, e_0, .., e_{n-1}]; caching the degree turns the order into
// a plain lexicographic compare of key slices.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using Term = std::pair<Exponents, Rational>;
    using TermList = std::vector<Term>;

    LaurentPoly() : ctx_(Context::qt()) {}
    explicit LaurentPoly(const Context* ctx) : ctx_(ctx) {}
    LaurentPoly(const Context* ctx, const Rational& c);

    // g_gen ^ (half_steps/2), e.g. gen_pow(ctx, 0, 2) is q.
    static LaurentPoly gen_pow(const Context* ctx, int gen, int half_steps);
    // Single monomial c * prod g_i^(e_i/2).
    static LaurentPoly monomial(const Context* ctx, const Exponents& e, const Rational& c);

    const Context* ctx() const { return ctx_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return coeffs_.size() == 1; }
    // All exponents nonnegative (true polynomial, possibly in half powers).
    bool is_true_poly() const;
    Rational constant_value() const;

    // Terms are indexed 0..term_count()-1 in ascending graded lex.
    size_t term_count() const { return coeffs_.size(); }
    const Rational& coeff_at(size_t i) const { return coeffs_[i]; }
    int exp_at(size_t i, int gen) const { return key(i)[gen + 1]; }
    Exponents exponents_at(size_t i) const;
    // Materialized (exponents, coefficient) pairs, ascending.
    TermList terms() const;

    // Leading term under graded lex; poly must be nonzero.
    Term leading() const;

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly pow(unsigned e) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Componentwise minimum of exponent vectors over all terms (nonzero poly).
    Exponents min_exponents() const;
    // Multiply by the monomial with exponent vector delta.
    LaurentPoly shifted(const Exponents& delta) const;

    // Half-step degree bounds in one generator (poly must be nonzero).
    int degree_in(int gen) const;
    int low_degree_in(int gen) const;
    // Coefficient of gen^(e/2), a polynomial with that generator's exponent
    // zeroed out.
    LaurentPoly coeff_of(int gen, int e) const;

    // Signed rational c such that *this / c has coprime integer coefficients
    // and positive leading coefficient. Zero poly gives 1.
    Rational signed_content() const;

    // Substitute rationals for every generator. Odd half-step exponents need
    // the value to be a perfect rational square; otherwise DomainError.
    Rational eval(const std::vector<Rational>& values) const;
    // Substitute a rational for one generator, keeping the others symbolic.
    LaurentPoly eval_partial(int gen, const Rational& v) const;

    // g_gen -> g_gen^(-1).
    LaurentPoly invert_gen(int gen) const;
    // Reinterpret generators into another context: exponent of generator i
    // becomes the exponent of target generator where[i].
    LaurentPoly map_gens(const Context* target, const std::vector<int>& where) const;

private:
    size_t width() const { return static_cast<size_t>(ctx_->arity()) + 1; }
    int* key(size_t i) { return keys_.data() + i * width(); }
    const int* key(size_t i) const { return keys_.data() + i * width(); }
    void push_key(const int* k, Rational c);
    // Restores the term invariants after bulk construction: sorts, fuses
    // equal keys, drops zeros.
    void normalize_terms();
    template <typename U>
    void normalize_packed();

    const Context* ctx_;
    std::vector<int> keys_;
    std::vector<Rational> coeffs_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

std::string to_string(const LaurentPoly& p);

// Exact division of true polynomials; throws DomainError when b does not
// divide a.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

// Gcd of true polynomials, integer-primitive with positive leading
// coefficient (primitive pseudo-remainder sequences).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace ehk
