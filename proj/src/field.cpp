#include "ehk/field.h"

#include <sstream>

#include "ehk/errors.h"

namespace ehk {

namespace {

void require_same_ctx(const Context* a, const Context* b) {
    if (a != b) throw DomainError("mixed generator contexts in field arithmetic");
}

LaurentPoly::Exponents negated(const LaurentPoly::Exponents& e) {
    LaurentPoly::Exponents n(e.size());
    for (size_t i = 0; i < e.size(); ++i) n[i] = -e[i];
    return n;
}

} // namespace

FieldElement::FieldElement(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num.ctx()), den_(num.ctx()) {
    require_same_ctx(num.ctx(), den.ctx());
    const Context* ctx = num.ctx();
    if (den.is_zero()) throw DivisionByZeroError();
    if (num.is_zero()) {
        num_ = LaurentPoly(ctx);
        den_ = LaurentPoly(ctx, Rational(1));
        return;
    }
    LaurentPoly::Exponents mnum = num.min_exponents();
    LaurentPoly::Exponents mden = den.min_exponents();
    LaurentPoly n = num.shifted(negated(mnum));
    LaurentPoly d = den.shifted(negated(mden));
    if (!n.is_monomial() && !d.is_monomial()) {
        LaurentPoly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = poly_divexact(n, g);
            d = poly_divexact(d, g);
        }
    }
    Rational c = d.signed_content();
    if (c != 1) {
        Rational ic = Rational(1) / c;
        d *= ic;
        n *= ic;
    }
    LaurentPoly::Exponents shift(mnum.size());
    for (size_t i = 0; i < shift.size(); ++i) shift[i] = mnum[i] - mden[i];
    num_ = n.shifted(shift);
    den_ = d;
}

FieldElement FieldElement::gen(const Context* ctx, int i) {
    return FieldElement(LaurentPoly::gen_pow(ctx, i, 2));
}

FieldElement FieldElement::gen(const Context* ctx, const std::string& name) {
    int i = ctx->index(name);
    if (i < 0) throw DomainError("unknown generator: " + name);
    return gen(ctx, i);
}

FieldElement FieldElement::gen_pow(const Context* ctx, int i, int half_steps) {
    return FieldElement(LaurentPoly::gen_pow(ctx, i, half_steps));
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw DomainError("rational_value on non-constant element");
    return num_.constant_value();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_ctx(ctx(), o.ctx());
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        LaurentPoly n = num_ + o.num_;
        if (den_.is_one()) return FieldElement(raw_tag{}, std::move(n), den_);
        return FieldElement(n, den_);
    }
    if (den_.is_one() && o.den_.is_one())
        return FieldElement(raw_tag{}, num_ + o.num_, den_);
    LaurentPoly g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    LaurentPoly da = poly_divexact(den_, g);
    LaurentPoly db = poly_divexact(o.den_, g);
    return FieldElement(num_ * db + o.num_ * da, den_ * db);
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    return FieldElement(raw_tag{}, -num_, den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_ctx(ctx(), o.ctx());
    if (is_zero() || o.is_zero()) return zero(ctx());
    // Monomial factors multiply without disturbing canonicity.
    if (den_.is_one() && num_.is_monomial())
        return FieldElement(raw_tag{}, o.num_ * num_, o.den_);
    if (o.den_.is_one() && o.num_.is_monomial())
        return FieldElement(raw_tag{}, num_ * o.num_, den_);
    // Cross-cancellation: each numerator is already coprime to its own
    // denominator, so after removing gcds across the pair the product is
    // canonical by construction.
    LaurentPoly::Exponents ma = num_.min_exponents();
    LaurentPoly::Exponents mb = o.num_.min_exponents();
    LaurentPoly na = num_.shifted(negated(ma));
    LaurentPoly nb = o.num_.shifted(negated(mb));
    LaurentPoly da = den_;
    LaurentPoly db = o.den_;
    if (!na.is_monomial() && !db.is_monomial()) {
        LaurentPoly g = poly_gcd(na, db);
        if (!g.is_one()) {
            na = poly_divexact(na, g);
            db = poly_divexact(db, g);
        }
    }
    if (!nb.is_monomial() && !da.is_monomial()) {
        LaurentPoly g = poly_gcd(nb, da);
        if (!g.is_one()) {
            nb = poly_divexact(nb, g);
            da = poly_divexact(da, g);
        }
    }
    LaurentPoly d = da * db;
    Rational c = d.signed_content();
    LaurentPoly n = na * nb;
    if (c != 1) {
        Rational ic = Rational(1) / c;
        d *= ic;
        n *= ic;
    }
    LaurentPoly::Exponents shift(ma.size());
    for (size_t i = 0; i < shift.size(); ++i) shift[i] = ma[i] + mb[i];
    return FieldElement(raw_tag{}, n.shifted(shift), std::move(d));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::operator*(const Rational& c) const {
    if (rat_is_zero(c)) return zero(ctx());
    return FieldElement(raw_tag{}, num_ * c, den_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(long e) const {
    if (e == 0) return one(ctx());
    FieldElement base = e < 0 ? inv() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement r = one(ctx());
    while (k > 0) {
        if (k & 1ul) r *= base;
        k >>= 1ul;
        if (k > 0) base *= base;
    }
    return r;
}

FieldElement FieldElement::sqrt() const {
    if (is_zero()) return *this;
    if (!den_.is_one() || !num_.is_monomial())
        throw DomainError("square root only supported for monomial elements");
    const auto& [e, c] = num_.leading();
    LaurentPoly::Exponents h(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] % 2 != 0)
            throw DomainError("square root leaves the half-step exponent lattice");
        h[i] = e[i] / 2;
    }
    return FieldElement(LaurentPoly::monomial(ctx(), h, rat_sqrt(c)));
}

Rational FieldElement::eval(const std::vector<Rational>& values) const {
    Rational dv = den_.eval(values);
    if (rat_is_zero(dv)) throw PoleError();
    return num_.eval(values) / dv;
}

Rational FieldElement::eval_named(const std::map<std::string, Rational>& values) const {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(ctx()->arity()));
    for (int i = 0; i < ctx()->arity(); ++i) {
        auto it = values.find(ctx()->name(i));
        if (it == values.end())
            throw DomainError("no value for generator " + ctx()->name(i));
        v.push_back(it->second);
    }
    return eval(v);
}

FieldElement FieldElement::invert_gen(int i) const {
    return FieldElement(num_.invert_gen(i), den_.invert_gen(i));
}

FieldElement FieldElement::map_gens(const Context* target, const std::vector<int>& where) const {
    return FieldElement(num_.map_gens(target, where), den_.map_gens(target, where));
}

std::string to_string(const FieldElement& f) {
    std::string n = to_string(f.num());
    if (f.den().is_one()) return n;
    std::ostringstream out;
    if (f.num().term_count() > 1)
        out << '(' << n << ')';
    else
        out << n;
    out << "/(" << to_string(f.den()) << ')';
    return out.str();
}

FieldElement fe_sum(std::vector<FieldElement> items, const Context* ctx) {
    if (items.empty()) return FieldElement::zero(ctx);
    // Pairwise balanced reduction keeps intermediate denominators small.
    while (items.size() > 1) {
        std::vector<FieldElement> next;
        next.reserve(items.size() / 2 + 1);
        for (size_t i = 0; i + 1 < items.size(); i += 2)
            next.push_back(items[i] + items[i + 1]);
        if (items.size() % 2 == 1) next.push_back(items.back());
        items.swap(next);
    }
    return items[0];
}

} // namespace ehk
