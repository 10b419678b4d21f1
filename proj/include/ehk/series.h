#pragma once

#include <vector>

#include "ehk/errors.h"
#include "ehk/rational.h"

namespace ehk {

// Truncated formal power series with coefficients in any ring type T that
// supports +, -, * and scaling by Rational, plus is_zero(). Coefficients are
// kept for powers 0..order inclusive. Multiplication preserves the left to
// right order of factors, so T need not be commutative; exp and log are only
// ever applied to series whose coefficients are powers of a single series
// and therefore commute among themselves.
template <class T>
class FormalSeries {
public:
    FormalSeries(int order, const T& zero)
        : order_(order), zero_(zero), c_(static_cast<size_t>(order + 1), zero) {
        if (order < 0) throw DomainError("series order must be nonnegative");
    }

    int order() const { return order_; }
    const T& zero_value() const { return zero_; }

    const T& coeff(int k) const {
        if (k < 0 || k > order_) throw DomainError("series coefficient out of range");
        return c_[static_cast<size_t>(k)];
    }

    void set_coeff(int k, T v) {
        if (k < 0 || k > order_) throw DomainError("series coefficient out of range");
        c_[static_cast<size_t>(k)] = std::move(v);
    }

    FormalSeries truncated(int order) const {
        FormalSeries r(order, zero_);
        for (int k = 0; k <= std::min(order, order_); ++k) r.set_coeff(k, coeff(k));
        return r;
    }

    FormalSeries operator+(const FormalSeries& o) const {
        FormalSeries r(std::min(order_, o.order_), zero_);
        for (int k = 0; k <= r.order_; ++k) r.set_coeff(k, coeff(k) + o.coeff(k));
        return r;
    }

    FormalSeries operator-(const FormalSeries& o) const {
        FormalSeries r(std::min(order_, o.order_), zero_);
        for (int k = 0; k <= r.order_; ++k) r.set_coeff(k, coeff(k) - o.coeff(k));
        return r;
    }

    FormalSeries operator*(const FormalSeries& o) const {
        FormalSeries r(std::min(order_, o.order_), zero_);
        for (int i = 0; i <= order_ && i <= r.order_; ++i) {
            if (coeff(i).is_zero()) continue;
            for (int j = 0; j <= o.order_ && i + j <= r.order_; ++j) {
                if (o.coeff(j).is_zero()) continue;
                r.set_coeff(i + j, r.coeff(i + j) + coeff(i) * o.coeff(j));
            }
        }
        return r;
    }

    FormalSeries scale(const Rational& s) const {
        FormalSeries r(order_, zero_);
        for (int k = 0; k <= order_; ++k) r.set_coeff(k, coeff(k) * s);
        return r;
    }

    bool operator==(const FormalSeries& o) const {
        if (order_ != o.order_) return false;
        for (int k = 0; k <= order_; ++k)
            if (!(coeff(k) - o.coeff(k)).is_zero()) return false;
        return true;
    }

private:
    int order_;
    T zero_;
    std::vector<T> c_;
};

// exp of a series with vanishing constant term; `one` is the multiplicative
// identity of T.
template <class T>
FormalSeries<T> ps_exp(const FormalSeries<T>& s, const T& one) {
    if (!s.coeff(0).is_zero())
        throw DomainError("exp needs a series with zero constant term");
    FormalSeries<T> acc(s.order(), s.zero_value());
    acc.set_coeff(0, one);
    FormalSeries<T> p = acc;
    for (int k = 1; k <= s.order(); ++k) {
        p = (p * s).scale(Rational(1, k));
        acc = acc + p;
    }
    return acc;
}

// log(1 + x) for a series x with zero constant term. Unlike ps_log this
// never has to recognize `one - one` as zero, so it also works for
// coefficient types whose zero test is conservative (operators).
template <class T>
FormalSeries<T> ps_log1p(const FormalSeries<T>& x, const T& one) {
    if (!x.coeff(0).is_zero())
        throw DomainError("log1p needs a series with zero constant term");
    FormalSeries<T> acc(x.order(), x.zero_value());
    FormalSeries<T> p(x.order(), x.zero_value());
    p.set_coeff(0, one);
    for (int k = 1; k <= x.order(); ++k) {
        p = p * x;
        Rational c(1, k);
        if (k % 2 == 0) c = -c;
        acc = acc + p.scale(c);
    }
    return acc;
}

// log of a series with constant term `one`.
template <class T>
FormalSeries<T> ps_log(const FormalSeries<T>& s, const T& one) {
    if (!(s.coeff(0) - one).is_zero())
        throw DomainError("log needs a series with unit constant term");
    FormalSeries<T> x = s;
    x.set_coeff(0, s.zero_value());
    return ps_log1p(x, one);
}

} // namespace ehk
