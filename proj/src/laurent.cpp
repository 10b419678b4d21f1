#include "ehk/laurent.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "ehk/errors.h"

namespace ehk {

namespace {

void require_same_ctx(const Context* a, const Context* b) {
    if (a != b) throw DomainError("mixed generator contexts in polynomial arithmetic");
}

// Keys are degree-prefixed slices, so the graded lex order is a plain
// lexicographic compare of w ints.
int cmp_key(const int* a, const int* b, size_t w) {
    for (size_t i = 0; i < w; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

void LaurentPoly::push_key(const int* k, Rational c) {
    keys_.insert(keys_.end(), k, k + width());
    coeffs_.push_back(std::move(c));
}

// Sorts (packed key, index) pairs instead of indices with an indirect slice
// comparator; biased 16-bit fields per slot keep the packing order-faithful.
template <typename U>
void LaurentPoly::normalize_packed() {
    const size_t w = width();
    const size_t m = coeffs_.size();
    std::vector<std::pair<U, uint32_t>> order(m);
    for (size_t i = 0; i < m; ++i) {
        const int* k = key(i);
        U packed = 0;
        for (size_t s = 0; s < w; ++s)
            packed = (packed << 16) | static_cast<uint16_t>(k[s] + 32768);
        order[i] = {packed, static_cast<uint32_t>(i)};
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> nk;
    nk.reserve(keys_.size());
    std::vector<Rational> nc;
    nc.reserve(m);
    size_t i = 0;
    while (i < m) {
        Rational c = std::move(coeffs_[order[i].second]);
        size_t j = i + 1;
        while (j < m && order[j].first == order[i].first) {
            c += coeffs_[order[j].second];
            ++j;
        }
        if (!rat_is_zero(c)) {
            const int* k = key(order[i].second);
            nk.insert(nk.end(), k, k + w);
            nc.push_back(std::move(c));
        }
        i = j;
    }
    keys_ = std::move(nk);
    coeffs_ = std::move(nc);
}

void LaurentPoly::normalize_terms() {
    const size_t w = width();
    const size_t m = coeffs_.size();
    if (m <= 1) {
        if (m == 1 && rat_is_zero(coeffs_[0])) {
            keys_.clear();
            coeffs_.clear();
        }
        return;
    }
    bool packable = std::all_of(keys_.begin(), keys_.end(),
                                [](int x) { return x >= -32768 && x <= 32767; });
    if (packable && w <= 4) {
        normalize_packed<uint64_t>();
        return;
    }
    if (packable && w <= 8) {
        normalize_packed<unsigned __int128>();
        return;
    }
    std::vector<uint32_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0u);
    const int* base = keys_.data();
    std::sort(idx.begin(), idx.end(), [base, w](uint32_t a, uint32_t b) {
        return cmp_key(base + a * w, base + b * w, w) < 0;
    });
    std::vector<int> nk;
    nk.reserve(keys_.size());
    std::vector<Rational> nc;
    nc.reserve(m);
    size_t i = 0;
    while (i < m) {
        const int* k = base + idx[i] * w;
        Rational c = std::move(coeffs_[idx[i]]);
        size_t j = i + 1;
        while (j < m && cmp_key(base + idx[j] * w, k, w) == 0) {
            c += coeffs_[idx[j]];
            ++j;
        }
        if (!rat_is_zero(c)) {
            nk.insert(nk.end(), k, k + w);
            nc.push_back(std::move(c));
        }
        i = j;
    }
    keys_ = std::move(nk);
    coeffs_ = std::move(nc);
}

LaurentPoly::LaurentPoly(const Context* ctx, const Rational& c) : ctx_(ctx) {
    if (!rat_is_zero(c)) {
        keys_.assign(width(), 0);
        coeffs_.push_back(c);
    }
}

LaurentPoly LaurentPoly::gen_pow(const Context* ctx, int gen, int half_steps) {
    if (gen < 0 || gen >= ctx->arity()) throw DomainError("generator index out of range");
    Exponents e(static_cast<size_t>(ctx->arity()), 0);
    e[static_cast<size_t>(gen)] = half_steps;
    return monomial(ctx, e, Rational(1));
}

LaurentPoly LaurentPoly::monomial(const Context* ctx, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != ctx->arity())
        throw DomainError("exponent vector arity mismatch");
    LaurentPoly p(ctx);
    if (!rat_is_zero(c)) {
        p.keys_.reserve(p.width());
        p.keys_.push_back(std::accumulate(e.begin(), e.end(), 0));
        p.keys_.insert(p.keys_.end(), e.begin(), e.end());
        p.coeffs_.push_back(c);
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    if (coeffs_.empty()) return true;
    if (coeffs_.size() > 1) return false;
    const int* k = key(0);
    return std::all_of(k, k + width(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_one() const {
    return is_constant() && !coeffs_.empty() && coeffs_.front() == 1;
}

bool LaurentPoly::is_true_poly() const {
    // A negative degree slot implies a negative exponent, so scanning the
    // whole buffer gives the same answer.
    return std::all_of(keys_.begin(), keys_.end(), [](int x) { return x >= 0; });
}

Rational LaurentPoly::constant_value() const {
    if (coeffs_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("constant_value on non-constant polynomial");
    return coeffs_.front();
}

LaurentPoly::Exponents LaurentPoly::exponents_at(size_t i) const {
    const int* k = key(i);
    return Exponents(k + 1, k + width());
}

LaurentPoly::TermList LaurentPoly::terms() const {
    TermList out;
    out.reserve(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out.emplace_back(exponents_at(i), coeffs_[i]);
    return out;
}

LaurentPoly::Term LaurentPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading term of zero polynomial");
    return {exponents_at(coeffs_.size() - 1), coeffs_.back()};
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != ctx_->arity())
        throw DomainError("exponent vector arity mismatch");
    if (rat_is_zero(c)) return;
    const size_t w = width();
    std::vector<int> k(w);
    k[0] = std::accumulate(e.begin(), e.end(), 0);
    std::copy(e.begin(), e.end(), k.begin() + 1);
    size_t lo = 0, hi = coeffs_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (cmp_key(key(mid), k.data(), w) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < coeffs_.size() && cmp_key(key(lo), k.data(), w) == 0) {
        coeffs_[lo] += c;
        if (rat_is_zero(coeffs_[lo])) {
            coeffs_.erase(coeffs_.begin() + static_cast<ptrdiff_t>(lo));
            keys_.erase(keys_.begin() + static_cast<ptrdiff_t>(lo * w),
                        keys_.begin() + static_cast<ptrdiff_t>((lo + 1) * w));
        }
    } else {
        keys_.insert(keys_.begin() + static_cast<ptrdiff_t>(lo * w), k.begin(), k.end());
        coeffs_.insert(coeffs_.begin() + static_cast<ptrdiff_t>(lo), c);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    if (&o == this) {
        *this *= Rational(2);
        return *this;
    }
    if (o.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
        *this = o;
        return *this;
    }
    const size_t w = width();
    std::vector<int> nk;
    nk.reserve(keys_.size() + o.keys_.size());
    std::vector<Rational> nc;
    nc.reserve(coeffs_.size() + o.coeffs_.size());
    size_t a = 0, b = 0;
    const size_t na = coeffs_.size(), nb = o.coeffs_.size();
    while (a < na && b < nb) {
        int cmp = cmp_key(key(a), o.key(b), w);
        if (cmp == 0) {
            Rational c = std::move(coeffs_[a]);
            c += o.coeffs_[b];
            if (!rat_is_zero(c)) {
                nk.insert(nk.end(), key(a), key(a) + w);
                nc.push_back(std::move(c));
            }
            ++a;
            ++b;
        } else if (cmp < 0) {
            nk.insert(nk.end(), key(a), key(a) + w);
            nc.push_back(std::move(coeffs_[a]));
            ++a;
        } else {
            nk.insert(nk.end(), o.key(b), o.key(b) + w);
            nc.push_back(o.coeffs_[b]);
            ++b;
        }
    }
    for (; a < na; ++a) {
        nk.insert(nk.end(), key(a), key(a) + w);
        nc.push_back(std::move(coeffs_[a]));
    }
    for (; b < nb; ++b) {
        nk.insert(nk.end(), o.key(b), o.key(b) + w);
        nc.push_back(o.coeffs_[b]);
    }
    keys_ = std::move(nk);
    coeffs_ = std::move(nc);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this += -o;
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ctx_);
    r.keys_ = keys_;
    r.coeffs_.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_ctx(ctx_, o.ctx_);
    LaurentPoly r(ctx_);
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    const size_t w = width();
    // Monomial factors keep the term order: shifting every key by the same
    // delta (degree slot included) preserves graded lex.
    if (o.coeffs_.size() == 1) {
        const int* kb = o.key(0);
        const Rational& cb = o.coeffs_.front();
        const size_t m = coeffs_.size();
        r.keys_.resize(keys_.size());
        r.coeffs_.reserve(m);
        for (size_t i = 0; i < m; ++i) {
            const int* ka = key(i);
            int* ko = r.keys_.data() + i * w;
            for (size_t x = 0; x < w; ++x) ko[x] = ka[x] + kb[x];
            r.coeffs_.push_back(coeffs_[i] * cb);
        }
        return r;
    }
    if (coeffs_.size() == 1) return o * *this;
    const size_t na = coeffs_.size(), nb = o.coeffs_.size();
    r.keys_.resize(na * nb * w);
    r.coeffs_.reserve(na * nb);
    int* out = r.keys_.data();
    for (size_t i = 0; i < na; ++i) {
        const int* ka = key(i);
        for (size_t j = 0; j < nb; ++j) {
            const int* kb = o.key(j);
            for (size_t x = 0; x < w; ++x) out[x] = ka[x] + kb[x];
            out += w;
            r.coeffs_.push_back(coeffs_[i] * o.coeffs_[j]);
        }
    }
    r.normalize_terms();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(ctx_);
    if (rat_is_zero(c)) return r;
    r.keys_ = keys_;
    r.coeffs_.reserve(coeffs_.size());
    for (const Rational& v : coeffs_) r.coeffs_.push_back(v * c);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (rat_is_zero(c)) {
        keys_.clear();
        coeffs_.clear();
        return *this;
    }
    for (Rational& v : coeffs_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r(ctx_, Rational(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return ctx_ == o.ctx_ && keys_ == o.keys_ && coeffs_ == o.coeffs_;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
    if (coeffs_.empty()) throw DomainError("min_exponents of zero polynomial");
    const size_t n = static_cast<size_t>(ctx_->arity());
    Exponents m = exponents_at(0);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        const int* k = key(i) + 1;
        for (size_t j = 0; j < n; ++j) m[j] = std::min(m[j], k[j]);
    }
    return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
    if (static_cast<int>(delta.size()) != ctx_->arity())
        throw DomainError("shift arity mismatch");
    LaurentPoly r(ctx_);
    r.keys_ = keys_;
    r.coeffs_ = coeffs_;
    const int d0 = std::accumulate(delta.begin(), delta.end(), 0);
    const size_t w = width();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int* k = r.keys_.data() + i * w;
        k[0] += d0;
        for (size_t j = 0; j + 1 < w; ++j) k[j + 1] += delta[j];
    }
    return r;
}

int LaurentPoly::degree_in(int gen) const {
    if (coeffs_.empty()) throw DomainError("degree of zero polynomial");
    int d = exp_at(0, gen);
    for (size_t i = 1; i < coeffs_.size(); ++i) d = std::max(d, exp_at(i, gen));
    return d;
}

int LaurentPoly::low_degree_in(int gen) const {
    if (coeffs_.empty()) throw DomainError("degree of zero polynomial");
    int d = exp_at(0, gen);
    for (size_t i = 1; i < coeffs_.size(); ++i) d = std::min(d, exp_at(i, gen));
    return d;
}

LaurentPoly LaurentPoly::coeff_of(int gen, int e) const {
    // Zeroing one coordinate on terms that all share its value keeps their
    // relative order, so the result is already sorted.
    LaurentPoly r(ctx_);
    const size_t w = width();
    std::vector<int> k(w);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const int* src = key(i);
        if (src[gen + 1] != e) continue;
        std::copy(src, src + w, k.begin());
        k[0] -= e;
        k[static_cast<size_t>(gen) + 1] = 0;
        r.push_key(k.data(), coeffs_[i]);
    }
    return r;
}

Rational LaurentPoly::signed_content() const {
    if (coeffs_.empty()) return Rational(1);
    Rational g(0);
    for (const Rational& c : coeffs_) {
        g = rat_gcd(g, c);
        if (g == 1) break;
    }
    if (sgn(coeffs_.back()) < 0) g = -g;
    return g;
}

Rational LaurentPoly::eval(const std::vector<Rational>& values) const {
    const size_t n = static_cast<size_t>(ctx_->arity());
    if (values.size() != n) throw DomainError("evaluation arity mismatch");
    // Square roots are computed once per generator that actually appears
    // with an odd half-step exponent.
    std::vector<bool> have_sqrt(n, false);
    std::vector<Rational> sqrts(n);
    Rational total(0);
    for (size_t t = 0; t < coeffs_.size(); ++t) {
        Rational m = coeffs_[t];
        const int* e = key(t) + 1;
        for (size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (e[i] % 2 == 0) {
                m *= rat_pow(values[i], e[i] / 2);
            } else {
                if (!have_sqrt[i]) {
                    sqrts[i] = rat_sqrt(values[i]);
                    have_sqrt[i] = true;
                }
                m *= rat_pow(sqrts[i], e[i]);
            }
        }
        total += m;
    }
    return total;
}

LaurentPoly LaurentPoly::eval_partial(int gen, const Rational& v) const {
    const size_t g = static_cast<size_t>(gen);
    const size_t w = width();
    bool have_sqrt = false;
    Rational sq;
    LaurentPoly r(ctx_);
    r.keys_.reserve(keys_.size());
    r.coeffs_.reserve(coeffs_.size());
    std::vector<int> k(w);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Rational m = coeffs_[i];
        const int* src = key(i);
        int eg = src[g + 1];
        if (eg != 0) {
            if (eg % 2 == 0) {
                m *= rat_pow(v, eg / 2);
            } else {
                if (!have_sqrt) {
                    sq = rat_sqrt(v);
                    have_sqrt = true;
                }
                m *= rat_pow(sq, eg);
            }
        }
        std::copy(src, src + w, k.begin());
        k[0] -= eg;
        k[g + 1] = 0;
        r.push_key(k.data(), std::move(m));
    }
    r.normalize_terms();
    return r;
}

LaurentPoly LaurentPoly::invert_gen(int gen) const {
    const size_t g = static_cast<size_t>(gen);
    const size_t w = width();
    LaurentPoly r(ctx_);
    r.keys_ = keys_;
    r.coeffs_ = coeffs_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int* k = r.keys_.data() + i * w;
        k[0] -= 2 * k[g + 1];
        k[g + 1] = -k[g + 1];
    }
    r.normalize_terms();
    return r;
}

LaurentPoly LaurentPoly::map_gens(const Context* target, const std::vector<int>& where) const {
    if (static_cast<int>(where.size()) != ctx_->arity())
        throw DomainError("map_gens arity mismatch");
    for (int wh : where)
        if (wh < 0 || wh >= target->arity()) throw DomainError("map_gens target out of range");
    const size_t n = static_cast<size_t>(ctx_->arity());
    const size_t w2 = static_cast<size_t>(target->arity()) + 1;
    LaurentPoly r(target);
    r.keys_.assign(coeffs_.size() * w2, 0);
    r.coeffs_ = coeffs_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const int* src = key(i);
        int* dst = r.keys_.data() + i * w2;
        dst[0] = src[0];
        for (size_t j = 0; j < n; ++j) dst[static_cast<size_t>(where[j]) + 1] += src[j + 1];
    }
    r.normalize_terms();
    return r;
}

namespace {

void append_monomial(std::ostringstream& out, const Context* ctx,
                     const LaurentPoly::Exponents& e, const Rational& coeff_abs) {
    std::vector<std::string> factors;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::ostringstream f;
        f << ctx->name(static_cast<int>(i));
        if (e[i] != 2) {
            f << '^';
            if (e[i] % 2 == 0) {
                int p = e[i] / 2;
                if (p < 0)
                    f << "(-" << -p << ')';
                else
                    f << p;
            } else {
                f << '(' << e[i] << "/2)";
            }
        }
        factors.push_back(f.str());
    }
    if (factors.empty()) {
        out << coeff_abs.get_str();
        return;
    }
    bool wrote = false;
    if (coeff_abs != 1) {
        out << coeff_abs.get_str();
        wrote = true;
    }
    for (const std::string& f : factors) {
        if (wrote) out << '*';
        out << f;
        wrote = true;
    }
}

} // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending graded lex, matching how humans write these.
    for (size_t i = p.term_count(); i-- > 0;) {
        const Rational& c = p.coeff_at(i);
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        append_monomial(out, p.ctx(), p.exponents_at(i), neg ? Rational(-c) : c);
    }
    return out.str();
}

} // namespace ehk
