#include "ehk/fock.h"

#include <sstream>

#include "ehk/errors.h"

namespace ehk {

namespace {

const Context* QT() { return Context::qt(); }

FieldElement fe_zero() { return FieldElement::zero(QT()); }
FieldElement fe_one() { return FieldElement::one(QT()); }

} // namespace

FieldElement FockVector::coeff(const Partition& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? fe_zero() : it->second;
}

void FockVector::add(const Partition& p, const FieldElement& c) {
    if (c.is_zero()) return;
    require_partition(p);
    auto [it, inserted] = entries_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector r = *this;
    for (const auto& [p, c] : o.entries_) r.add(p, c);
    return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector r = *this;
    for (const auto& [p, c] : o.entries_) r.add(p, -c);
    return r;
}

FockVector FockVector::operator*(const FieldElement& c) const {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [p, v] : entries_) r.entries_.emplace(p, v * c);
    return r;
}

std::string to_string(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) {
        if (!first) out << " + ";
        out << '(' << to_string(it->second) << ")*H" << p_to_string(it->first);
        first = false;
    }
    return out.str();
}

FockOperator FockOperator::identity() {
    return diagonal([](const Partition&) { return fe_one(); });
}

FockOperator FockOperator::diagonal(std::function<FieldElement(const Partition&)> eigenvalue) {
    return make(0, [eig = std::move(eigenvalue)](const Partition& row, const Partition& col) {
        return row == col ? eig(row) : fe_zero();
    });
}

FockOperator FockOperator::make(int shift, EntryFn rule) {
    FockOperator a;
    a.shift_ = shift;
    a.rule_ = std::move(rule);
    a.cache_ = std::make_shared<std::map<std::pair<Partition, Partition>, FieldElement>>();
    return a;
}

FieldElement FockOperator::entry(const Partition& row, const Partition& col) const {
    if (!rule_) return fe_zero();
    if (p_weight(row) != p_weight(col) + shift_) return fe_zero();
    auto key = std::make_pair(row, col);
    auto it = cache_->find(key);
    if (it != cache_->end()) return it->second;
    FieldElement value = rule_(row, col);
    cache_->emplace(std::move(key), value);
    return value;
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
    if (is_strictly_zero()) return o;
    if (o.is_strictly_zero()) return *this;
    if (shift_ != o.shift_)
        throw DomainError("cannot add operators of different shifts");
    FockOperator a = *this, b = o;
    return make(shift_, [a, b](const Partition& row, const Partition& col) {
        return a.entry(row, col) + b.entry(row, col);
    });
}

FockOperator FockOperator::operator-() const {
    if (is_strictly_zero()) return *this;
    FockOperator a = *this;
    return make(shift_, [a](const Partition& row, const Partition& col) {
        return -a.entry(row, col);
    });
}

FockOperator FockOperator::operator-(const FockOperator& o) const { return *this + (-o); }

FockOperator FockOperator::operator*(const FockOperator& o) const {
    if (is_strictly_zero() || o.is_strictly_zero()) return FockOperator();
    FockOperator a = *this, b = o;
    return make(shift_ + o.shift_, [a, b](const Partition& row, const Partition& col) {
        int mid = p_weight(col) + b.shift();
        if (mid < 0) return fe_zero();
        std::vector<FieldElement> parts;
        for (const Partition& nu : partitions_of(mid)) {
            FieldElement right = b.entry(nu, col);
            if (right.is_zero()) continue;
            FieldElement left = a.entry(row, nu);
            if (left.is_zero()) continue;
            parts.push_back(left * right);
        }
        return fe_sum(std::move(parts), QT());
    });
}

FockOperator FockOperator::operator*(const FieldElement& c) const {
    if (is_strictly_zero() || c.is_zero()) return FockOperator();
    FockOperator a = *this;
    return make(shift_, [a, c](const Partition& row, const Partition& col) {
        return a.entry(row, col) * c;
    });
}

FockOperator FockOperator::operator*(const Rational& c) const {
    return *this * FieldElement(QT(), c);
}

FockVector FockOperator::apply(const FockVector& v) const {
    FockVector out;
    if (is_strictly_zero()) return out;
    for (const auto& [mu, c] : v.entries()) {
        int target = p_weight(mu) + shift_;
        if (target < 0) continue;
        for (const Partition& lam : partitions_of(target)) {
            FieldElement e = entry(lam, mu);
            if (!e.is_zero()) out.add(lam, e * c);
        }
    }
    return out;
}

bool op_equal_on(const FockOperator& a, const FockOperator& b, int max_degree) {
    if (!a.is_strictly_zero() && !b.is_strictly_zero() && a.shift() != b.shift())
        return false;
    int shift = a.is_strictly_zero() ? b.shift() : a.shift();
    for (int d = 0; d <= max_degree; ++d) {
        if (d + shift < 0) continue;
        for (const Partition& col : partitions_of(d))
            for (const Partition& row : partitions_of(d + shift))
                if (a.entry(row, col) != b.entry(row, col)) return false;
    }
    return true;
}

OpMatrix op_matrix(const FockOperator& a, int degree) {
    if (degree < 0 || degree + a.shift() < 0)
        throw DomainError("matrix degree out of range");
    OpMatrix m;
    m.degree = degree;
    m.shift = a.shift();
    m.rows = partitions_of(degree + a.shift());
    m.cols = partitions_of(degree);
    m.entries.reserve(m.rows.size());
    for (const Partition& row : m.rows) {
        std::vector<FieldElement> line;
        line.reserve(m.cols.size());
        for (const Partition& col : m.cols) line.push_back(a.entry(row, col));
        m.entries.push_back(std::move(line));
    }
    return m;
}

namespace {

FieldElement qt_factor(int tleg, int qarm) {
    // t^tleg - q^qarm as a field element.
    LaurentPoly p = LaurentPoly::gen_pow(QT(), 1, 2 * tleg) - LaurentPoly::gen_pow(QT(), 0, 2 * qarm);
    return FieldElement(p);
}

} // namespace

FockOperator f_plus(int r) {
    // Interned per parameter so every use shares one memo cache.
    static std::map<int, FockOperator> pool;
    if (auto it = pool.find(r); it != pool.end()) return it->second;
    FockOperator a = FockOperator::make(1, [r](const Partition& mu, const Partition& nu) {
        if (!p_contains(mu, nu)) return fe_zero();
        Cell s = p_cell_diff(mu, nu);
        FieldElement val = FieldElement(box_monomial(s, r + 1));
        // Column and row of the new box inside nu; arms and legs in nu.
        for (const auto& [i, j] : p_cells(nu)) {
            if (j == s.second) {
                int a = p_arm(nu, i, j), l = p_leg(nu, i, j);
                val *= qt_factor(l, a + 1) / qt_factor(l + 1, a + 1);
            } else if (i == s.first) {
                int a = p_arm(nu, i, j), l = p_leg(nu, i, j);
                val *= qt_factor(l + 1, a) / qt_factor(l + 1, a + 1);
            }
        }
        FieldElement denom = (fe_one() - FieldElement::gen(QT(), 0)) *
                             (fe_one() - FieldElement::gen(QT(), 1));
        return val / denom;
    });
    pool.emplace(r, a);
    return a;
}

FockOperator f_minus(int k) {
    static std::map<int, FockOperator> pool;
    if (auto it = pool.find(k); it != pool.end()) return it->second;
    FockOperator a = FockOperator::make(-1, [k](const Partition& lam, const Partition& nu) {
        if (!p_contains(nu, lam)) return fe_zero();
        Cell s = p_cell_diff(nu, lam);
        FieldElement val = FieldElement(box_monomial(s, k));
        for (const auto& [i, j] : p_cells(nu)) {
            if (i == s.first && j == s.second) continue;
            if (j == s.second) {
                int a = p_arm(nu, i, j), l = p_leg(nu, i, j);
                val *= qt_factor(l + 1, a) / qt_factor(l, a);
            } else if (i == s.first) {
                int a = p_arm(nu, i, j), l = p_leg(nu, i, j);
                val *= qt_factor(l, a + 1) / qt_factor(l, a);
            }
        }
        return val;
    });
    pool.emplace(k, a);
    return a;
}

FockOperator f_zero(int l) {
    if (l == 0) throw DomainError("f_zero needs a nonzero index");
    static std::map<int, FockOperator> pool;
    if (auto it = pool.find(l); it != pool.end()) return it->second;
    FockOperator a = FockOperator::diagonal([l](const Partition& nu) {
        return FieldElement(b_stat(nu, l));
    });
    pool.emplace(l, a);
    return a;
}

FockOperator e_zero(int l) {
    if (l == 0) throw DomainError("e_zero needs a nonzero index");
    static std::map<int, FockOperator> pool;
    if (auto it = pool.find(l); it != pool.end()) return it->second;
    FockOperator a = FockOperator::diagonal([l](const Partition& nu) {
        // Elementary symmetric polynomial of the (possibly inverted) box
        // monomials, by the usual one-box-at-a-time recurrence.
        size_t k = static_cast<size_t>(l > 0 ? l : -l);
        int sign = l > 0 ? 1 : -1;
        std::vector<LaurentPoly> e(k + 1, LaurentPoly(QT()));
        e[0] = LaurentPoly(QT(), Rational(1));
        for (const Cell& s : p_cells(nu)) {
            LaurentPoly m = box_monomial(s, sign);
            for (size_t d = std::min(k, static_cast<size_t>(p_weight(nu))); d >= 1; --d)
                e[d] += e[d - 1] * m;
        }
        return FieldElement(e[k]);
    });
    pool.emplace(l, a);
    return a;
}

static FockOperator h_op_build(int i, int l);

FockOperator h_op(int i, int l) {
    static std::map<std::pair<int, int>, FockOperator> pool;
    if (auto it = pool.find({i, l}); it != pool.end()) return it->second;
    FockOperator a = h_op_build(i, l);
    pool.emplace(std::make_pair(i, l), a);
    return a;
}

static FockOperator h_op_build(int i, int l) {
    if (i == 1) {
        return f_plus(l - 1) * FieldElement::gen_pow(QT(), 1, 1);
    }
    if (i == -1) {
        return f_minus(l) * (-FieldElement::gen_pow(QT(), 0, 1));
    }
    if (i != 0) throw DomainError("h_op row must be -1, 0 or 1");
    if (l == 0) throw DomainError("h_op(0,0) is not a generator");
    FieldElement q = FieldElement::gen(QT(), 0), t = FieldElement::gen(QT(), 1);
    FieldElement scalar =
        (fe_one() - q.pow(l)).inv() * (fe_one() - t.pow(l)).inv();
    if (l > 0) return f_zero(l) - FockOperator::identity() * scalar;
    return -f_zero(l) + FockOperator::identity() * scalar;
}

FockOperator nabla() {
    static FockOperator a = FockOperator::diagonal([](const Partition& lam) {
        LaurentPoly m = LaurentPoly::gen_pow(QT(), 1, 2 * p_nstat(lam)) *
                        LaurentPoly::gen_pow(QT(), 0, 2 * p_nstat(p_conjugate(lam)));
        return FieldElement(m);
    });
    return a;
}

FockOperator hecke_twist(int l, const FockOperator& a) {
    if (a.is_strictly_zero()) return a;
    if (a.shift() < 0) throw DomainError("hecke twist needs a nonnegative shift");
    FockOperator base = a;
    return FockOperator::make(a.shift(), [l, base](const Partition& lam, const Partition& mu) {
        FieldElement e = base.entry(lam, mu);
        if (e.is_zero()) return e;
        if (!p_contains(lam, mu))
            throw DomainError("hecke twist: operator support leaves the containment order");
        LaurentPoly w(QT());
        for (const Cell& s : p_skew_cells(lam, mu)) w += box_monomial(s, l);
        return e * FieldElement(w);
    });
}

} // namespace ehk
