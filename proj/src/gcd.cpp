#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ehk/errors.h"
#include "ehk/laurent.h"

// Multivariate gcd over Q via primitive pseudo-remainder sequences. The
// generators are treated as independent variables in half-step exponents, so
// reductions like (q - 1)/(q^(1/2) - 1) come out right.
//
// Operator entries reuse the same denominators over and over, so gcd and
// exact-division results are memoized in fingerprint-keyed tables (exact
// key comparison resolves fingerprint collisions). Single-threaded use.

namespace ehk {

namespace {

LaurentPoly int_primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Rational c = p.signed_content();
    if (c == 1) return p;
    return p * (Rational(1) / c);
}

LaurentPoly monomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly::Exponents ma = a.min_exponents();
    LaurentPoly::Exponents mb = b.min_exponents();
    for (size_t i = 0; i < ma.size(); ++i) ma[i] = std::min(ma[i], mb[i]);
    return LaurentPoly::monomial(a.ctx(), ma, Rational(1));
}

uint64_t poly_fingerprint(const LaurentPoly& p) {
    uint64_t h = 1469598103934665603ull ^ reinterpret_cast<uintptr_t>(p.ctx());
    auto mix = [&h](uint64_t v) { h = (h ^ v) * 1099511628211ull; };
    const int n = p.ctx()->arity();
    for (size_t i = 0; i < p.term_count(); ++i) {
        for (int g = 0; g < n; ++g)
            mix(static_cast<uint64_t>(static_cast<int64_t>(p.exp_at(i, g))) + 0x9e3779b9ull);
        const Rational& c = p.coeff_at(i);
        mix(mpz_fdiv_ui(c.get_num_mpz_t(), 0xfffffffbull));
        mix(static_cast<uint64_t>(mpz_sgn(c.get_num_mpz_t()) + 2));
        mix(mpz_fdiv_ui(c.get_den_mpz_t(), 0xfffffffbull));
    }
    return h;
}

// Coprimality certificate: project both polynomials to one variable by
// fixing every other generator at a deterministic residue mod a 61-bit
// prime, then run univariate Euclid. The image of any common factor divides
// the univariate gcd, so gcd 1 in each shared variable proves the symbolic
// gcd is constant; a degenerate projection only ever falls back to the
// symbolic path. This skips the pseudo-remainder sequences for the common
// case of coprime operands.

constexpr uint64_t kP = 2305843009213693951ull;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % kP);
}

uint64_t powmod(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    b %= kP;
    while (e) {
        if (e & 1u) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1u;
    }
    return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kP - 2); }

uint64_t fixed_residue(int var, int attempt) {
    uint64_t z = 0x9e3779b97f4a7c15ull *
                 (static_cast<uint64_t>(var) * 0x100000001b3ull + static_cast<uint64_t>(attempt) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return 2 + z % (kP - 4);
}

bool project_to_var(const LaurentPoly& p, int v, int attempt, std::vector<uint64_t>& out) {
    out.assign(static_cast<size_t>(p.degree_in(v)) + 1, 0);
    const int n = p.ctx()->arity();
    for (size_t i = 0; i < p.term_count(); ++i) {
        const Rational& c = p.coeff_at(i);
        uint64_t dn = mpz_fdiv_ui(c.get_den_mpz_t(), kP);
        if (dn == 0) return false;
        uint64_t r = mpz_fdiv_ui(c.get_num_mpz_t(), kP);
        if (dn != 1) r = mulmod(r, invmod(dn));
        for (int g = 0; g < n; ++g) {
            if (g == v) continue;
            int e = p.exp_at(i, g);
            if (e > 0)
                r = mulmod(r, powmod(fixed_residue(g, attempt), static_cast<uint64_t>(e)));
            else if (e < 0)
                r = mulmod(r, powmod(invmod(fixed_residue(g, attempt)), static_cast<uint64_t>(-e)));
        }
        size_t ev = static_cast<size_t>(p.exp_at(i, v));
        out[ev] = (out[ev] + r) % kP;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return !out.empty();
}

bool univariate_coprime(const LaurentPoly& a, const LaurentPoly& b, int v, int attempt) {
    std::vector<uint64_t> A, B;
    if (!project_to_var(a, v, attempt, A) || !project_to_var(b, v, attempt, B)) return false;
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        uint64_t lcinv = invmod(B.back());
        while (A.size() >= B.size()) {
            uint64_t f = mulmod(A.back(), lcinv);
            size_t off = A.size() - B.size();
            if (f != 0)
                for (size_t i = 0; i + 1 < B.size(); ++i) {
                    uint64_t sub = mulmod(f, B[i]);
                    uint64_t& t = A[off + i];
                    t = t >= sub ? t - sub : t + kP - sub;
                }
            A.pop_back();
            while (!A.empty() && A.back() == 0) A.pop_back();
            if (A.empty()) break;
        }
        std::swap(A, B);
    }
    return A.size() == 1;
}

bool modular_coprime(const LaurentPoly& a, const LaurentPoly& b) {
    const int n = a.ctx()->arity();
    for (int v = 0; v < n; ++v) {
        // The gcd divides both sides, so it can involve a variable only when
        // both sides do.
        if (a.degree_in(v) <= 0 || b.degree_in(v) <= 0) continue;
        bool proved = false;
        for (int attempt = 0; attempt < 2 && !proved; ++attempt)
            proved = univariate_coprime(a, b, v, attempt);
        if (!proved) return false;
    }
    return true;
}

struct CacheEntry {
    LaurentPoly a, b, result;
};

struct Memo {
    std::unordered_map<uint64_t, std::vector<CacheEntry>> table;
    size_t count = 0;

    void insert(uint64_t key, CacheEntry entry) {
        // Crude size bound: dump everything rather than track recency.
        if (count >= (1u << 17)) {
            table.clear();
            count = 0;
        }
        table[key].push_back(std::move(entry));
        ++count;
    }
};

Memo& gcd_memo() {
    static Memo m;
    return m;
}

Memo& div_memo() {
    static Memo m;
    return m;
}

// Both true polynomials, both integer-primitive.
LaurentPoly core_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Gcd of the coefficients of p viewed as a polynomial in generator k.
LaurentPoly content_in(const LaurentPoly& p, int k);

LaurentPoly core_gcd_impl(LaurentPoly a, LaurentPoly b) {
    const Context* ctx = a.ctx();
    int k = -1;
    for (int i = 0; i < ctx->arity(); ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            k = i;
            break;
        }
    }
    if (k < 0) return LaurentPoly(ctx, Rational(1));

    if (a.degree_in(k) == 0) return core_gcd(a, content_in(b, k));
    if (b.degree_in(k) == 0) return core_gcd(content_in(a, k), b);

    LaurentPoly cont_a = content_in(a, k);
    LaurentPoly cont_b = content_in(b, k);
    LaurentPoly pa = poly_divexact(a, cont_a);
    LaurentPoly pb = poly_divexact(b, cont_b);
    LaurentPoly g = core_gcd(cont_a, cont_b);

    if (pa.degree_in(k) < pb.degree_in(k)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(k) > 0) {
        // Pseudo-remainder: multiply by the leading coefficient of pb before
        // each cancellation step so everything stays polynomial.
        int db = pb.degree_in(k);
        LaurentPoly lcb = pb.coeff_of(k, db);
        LaurentPoly r = pa;
        while (!r.is_zero() && r.degree_in(k) >= db) {
            int dr = r.degree_in(k);
            LaurentPoly lcr = r.coeff_of(k, dr);
            LaurentPoly::Exponents sh(static_cast<size_t>(ctx->arity()), 0);
            sh[static_cast<size_t>(k)] = dr - db;
            r = r * lcb - lcr.shifted(sh) * pb;
        }
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            LaurentPoly cr = content_in(r, k);
            pb = int_primitive(poly_divexact(r, cr));
        }
    }
    LaurentPoly tail = pb.is_zero() ? pa : LaurentPoly(ctx, Rational(1));
    return int_primitive(g * tail);
}

LaurentPoly core_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant())
        return LaurentPoly(a.ctx(), Rational(1));
    if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);

    uint64_t key = poly_fingerprint(a) ^ poly_fingerprint(b);
    Memo& memo = gcd_memo();
    if (auto it = memo.table.find(key); it != memo.table.end())
        for (const CacheEntry& e : it->second)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.result;

    LaurentPoly g = modular_coprime(a, b) ? LaurentPoly(a.ctx(), Rational(1))
                                          : core_gcd_impl(a, b);
    memo.insert(key, {a, b, g});
    return g;
}

LaurentPoly content_in(const LaurentPoly& p, int k) {
    LaurentPoly g(p.ctx());
    std::vector<int> exps;
    for (size_t i = 0; i < p.term_count(); ++i) {
        int ek = p.exp_at(i, k);
        if (std::find(exps.begin(), exps.end(), ek) == exps.end()) exps.push_back(ek);
    }
    for (int e : exps) {
        g = core_gcd(int_primitive(g), int_primitive(p.coeff_of(k, e)));
        if (g.is_constant()) break;
    }
    return int_primitive(g);
}

LaurentPoly divexact_impl(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q(a.ctx());
    LaurentPoly r = a;
    const auto& [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        LaurentPoly::Exponents e(er.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) throw DomainError("inexact polynomial division");
        }
        LaurentPoly m = LaurentPoly::monomial(a.ctx(), e, cr / cb);
        q += m;
        r -= m * b;
    }
    return q;
}

} // namespace

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.ctx() != b.ctx()) throw DomainError("mixed contexts in division");
    if (a.is_zero()) return LaurentPoly(a.ctx());
    if (!a.is_true_poly() || !b.is_true_poly())
        throw DomainError("exact division expects true polynomials");
    if (b.is_monomial()) {
        const auto& [eb, cb] = b.leading();
        LaurentPoly::Exponents ma = a.min_exponents();
        LaurentPoly::Exponents neg(eb.size());
        for (size_t i = 0; i < eb.size(); ++i) {
            if (ma[i] < eb[i]) throw DomainError("inexact polynomial division");
            neg[i] = -eb[i];
        }
        return a.shifted(neg) * (Rational(1) / cb);
    }

    uint64_t key = poly_fingerprint(a) * 1099511628211ull ^ poly_fingerprint(b);
    Memo& memo = div_memo();
    if (auto it = memo.table.find(key); it != memo.table.end())
        for (const CacheEntry& e : it->second)
            if (e.a == a && e.b == b) return e.result;

    LaurentPoly q = divexact_impl(a, b);
    memo.insert(key, {a, b, q});
    return q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.ctx() != b.ctx()) throw DomainError("mixed contexts in gcd");
    if (a.is_zero()) return int_primitive(b);
    if (b.is_zero()) return int_primitive(a);
    if (!a.is_true_poly() || !b.is_true_poly())
        throw DomainError("gcd expects true polynomials");
    if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);
    // Split off the common monomial factor first; the structural gcd then
    // runs on polynomials whose per-generator minimum exponent is zero.
    LaurentPoly::Exponents ma = a.min_exponents();
    LaurentPoly::Exponents mb = b.min_exponents();
    LaurentPoly::Exponents mg(ma.size()), na(ma.size()), nb(ma.size());
    for (size_t i = 0; i < ma.size(); ++i) {
        mg[i] = std::min(ma[i], mb[i]);
        na[i] = -ma[i];
        nb[i] = -mb[i];
    }
    LaurentPoly g = core_gcd(int_primitive(a.shifted(na)), int_primitive(b.shifted(nb)));
    return int_primitive(g.shifted(mg));
}

} // namespace ehk
