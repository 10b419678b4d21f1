#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehk/laurent.h"

namespace ehk {

// Element of the fraction field Q(g_1^(1/2), ..., g_n^(1/2)), kept in a
// canonical form so that structural equality is semantic equality:
//   - the denominator is a true polynomial whose per-generator minimum
//     exponent is zero, with coprime integer coefficients and a positive
//     leading coefficient under graded lex (so a monomial denominator is
//     always exactly 1);
//   - numerator and denominator share no polynomial or monomial factor; the
//     numerator carries the overall rational content and any monomial part.
class FieldElement {
public:
    FieldElement() : num_(Context::qt()), den_(Context::qt(), Rational(1)) {}
    explicit FieldElement(const Context* ctx)
        : num_(ctx), den_(ctx, Rational(1)) {}
    FieldElement(const Context* ctx, const Rational& c)
        : num_(ctx, c), den_(ctx, Rational(1)) {}
    // Reduces num/den to canonical form; throws DivisionByZeroError on a
    // zero denominator.
    FieldElement(const LaurentPoly& num, const LaurentPoly& den);
    explicit FieldElement(const LaurentPoly& num)
        : num_(num), den_(num.ctx(), Rational(1)) {}

    static FieldElement zero(const Context* ctx) { return FieldElement(ctx); }
    static FieldElement one(const Context* ctx) { return FieldElement(ctx, Rational(1)); }
    // The generator itself (a full step, g^1).
    static FieldElement gen(const Context* ctx, int i);
    static FieldElement gen(const Context* ctx, const std::string& name);
    // g_i^(half_steps/2).
    static FieldElement gen_pow(const Context* ctx, int i, int half_steps);

    const Context* ctx() const { return num_.ctx(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    Rational rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
    FieldElement operator*(const Rational& c) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inv() const;
    // Integer powers, negative allowed; 0^0 = 1.
    FieldElement pow(long e) const;
    // Square root of a monomial element (the result must again have
    // half-step exponents); DomainError otherwise.
    FieldElement sqrt() const;

    // Substitute rationals for all generators in context order. Throws
    // PoleError when the denominator vanishes and DomainError when an odd
    // half power needs an irrational square root.
    Rational eval(const std::vector<Rational>& values) const;
    Rational eval_named(const std::map<std::string, Rational>& values) const;

    // g_i -> g_i^(-1).
    FieldElement invert_gen(int i) const;
    // Move to another context, sending generator i to target generator
    // where[i].
    FieldElement map_gens(const Context* target, const std::vector<int>& where) const;

private:
    struct raw_tag {};
    FieldElement(raw_tag, LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

inline FieldElement operator*(const Rational& c, const FieldElement& f) { return f * c; }

std::string to_string(const FieldElement& f);

// Balanced summation; noticeably cheaper than a left fold for long sums of
// entries with related denominators.
FieldElement fe_sum(std::vector<FieldElement> items, const Context* ctx);

} // namespace ehk
