#include "ehk/hall.h"

#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "ehk/errors.h"
#include "ehk/series.h"

namespace ehk {

namespace {

using nlohmann::json;

const Context* QT() { return Context::qt(); }

FieldElement fe_one() { return FieldElement::one(QT()); }

} // namespace

CentralCharge standard_charge() {
    return {fe_one(),
            FieldElement::gen_pow(QT(), 0, 1) * FieldElement::gen_pow(QT(), 1, 1)};
}

FieldElement kappa(const CentralCharge& c, LatticePoint x) {
    return c.c2.pow(x.r) * c.c1.pow(x.d);
}

FieldElement alpha_n(int n) {
    if (n == 0) throw DomainError("alpha_n needs a nonzero index");
    FieldElement q = FieldElement::gen(QT(), 0);
    FieldElement t = FieldElement::gen(QT(), 1);
    FieldElement v =
        (fe_one() - (q * t).pow(n)) * (fe_one() - q.pow(-n)) * (fe_one() - t.pow(-n));
    // Keep the denominator positive; mpq_class(1, n) with n < 0 would not be
    // canonical and GMP assumes canonical inputs.
    Rational inv_n(1, std::abs(n));
    return v * (n < 0 ? -inv_n : inv_n);
}

namespace {

long long mod_inverse(long long a, long long n) {
    long long t0 = 0, t1 = 1, r0 = n, r1 = ((a % n) + n) % n;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
    }
    if (r0 != 1) throw DomainError("mod inverse of a non-unit");
    return ((t0 % n) + n) % n;
}

// The unique w with det(w, z) = 1 whose first coordinate lies strictly
// between 0 and z.r. The complement z - w then has the same property, so
// the commutator recursion always moves toward the generator rows.
LatticePoint bezout_split(LatticePoint z) {
    int n = std::abs(z.r);
    long long binv = mod_inverse(z.d, n);
    int wr = z.r > 0 ? int(binv) : int(binv) - n;
    long long num = (long long)wr * z.d - 1;
    if (num % z.r != 0) throw CalcError("bezout split lost the determinant equation");
    return {wr, int(num / z.r)};
}

// A point w with det(w, z0) = 1, for the theta elements along the ray of
// z0. Any such w works: the triangle (0, w, k z0) has area k/2 and Pick's
// count forces both an empty interior and a primitive complement.
LatticePoint ray_witness(LatticePoint z0) {
    if (z0.r == 0) return {z0.d, 0};
    if (z0.r == 1 || z0.r == -1) return {0, -z0.r};
    return bezout_split(z0);
}

FockOperator omega_build(LatticePoint z);

const FockOperator& omega_op(LatticePoint z) {
    static std::map<LatticePoint, FockOperator> pool;
    auto it = pool.find(z);
    if (it == pool.end()) it = pool.emplace(z, omega_build(z)).first;
    return it->second;
}

// Extract u_{w+y} from the empty-triangle bracket
//   [u_y, u_w] = eps_{w,y} kappa_{alpha(w,y)} theta_{w+y} / alpha_1
// when w + y is primitive, so that theta_{w+y} = alpha_1 u_{w+y}.
FockOperator split_value(LatticePoint w, LatticePoint y) {
    FieldElement k = kappa(standard_charge(), alpha_vec(w, y));
    return op_commutator(omega_op(y), omega_op(w)) * (k.inv() * Rational(eps_pair(w, y)));
}

FockOperator omega_build(LatticePoint z) {
    if (z.is_zero()) throw DomainError("the origin indexes no generator");
    if (z.r >= -1 && z.r <= 1) return h_op(z.r, z.d);
    int g = gcd_d(z);
    if (g == 1) {
        LatticePoint w = bezout_split(z);
        return split_value(w, z - w);
    }
    LatticePoint z0{z.r / g, z.d / g};
    LatticePoint w = ray_witness(z0);
    FormalSeries<FockOperator> theta(g, FockOperator());
    for (int k = 1; k <= g; ++k) {
        LatticePoint y = k * z0 - w;
        FieldElement kap = kappa(standard_charge(), alpha_vec(w, y));
        FieldElement scale = alpha_n(1) * kap.inv() * Rational(eps_pair(w, y));
        theta.set_coeff(k, op_commutator(omega_op(y), omega_op(w)) * scale);
    }
    // theta(s) = exp(sum_m alpha_m u_{m z0} s^m) along a commuting ray, so
    // the top u falls out of the series logarithm.
    FormalSeries<FockOperator> logs = ps_log1p(theta, FockOperator::identity());
    return logs.coeff(g) * alpha_n(g).inv();
}

} // namespace

HallElement omega_generator(LatticePoint x) {
    return {omega_op(x), "u" + lp_to_string(x)};
}

FockOperator omega_theta(LatticePoint z) {
    if (z.is_zero()) throw DomainError("the origin has no theta element");
    int g = gcd_d(z);
    LatticePoint z0{z.r / g, z.d / g};
    FormalSeries<FockOperator> arg(g, FockOperator());
    for (int m = 1; m <= g; ++m) arg.set_coeff(m, omega_op(m * z0) * alpha_n(m));
    return ps_exp(arg, FockOperator::identity()).coeff(g);
}

HallElement heisenberg_u(int mu_num, int mu_den, int l) {
    if (mu_den < 1) throw DomainError("heisenberg slope must be finite, denominator >= 1");
    if (std::gcd(std::abs(mu_num), mu_den) != 1)
        throw DomainError("heisenberg slope must be in lowest terms");
    if (l == 0) throw DomainError("heisenberg index must be nonzero");
    return omega_generator({l * mu_den, l * mu_num});
}

FockOperator casimir(int mu_num, int mu_den, int max_degree) {
    if (mu_den < 1) throw DomainError("casimir slope must be finite, denominator >= 1");
    if (std::gcd(std::abs(mu_num), mu_den) != 1)
        throw DomainError("casimir slope must be in lowest terms");
    if (max_degree < 0) throw DomainError("casimir degree bound must be nonnegative");
    FockOperator acc = FockOperator::identity();
    for (int m = 1; m * mu_den <= max_degree; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            // 1/<u_lambda, u_lambda> = prod over part sizes i of
            // alpha_i^{m_i} / m_i!.
            FieldElement coeff = fe_one();
            for (size_t a = 0; a < lam.size();) {
                size_t b = a;
                while (b < lam.size() && lam[b] == lam[a]) ++b;
                int mult = int(b - a);
                long fact = 1;
                for (int j = 2; j <= mult; ++j) fact *= j;
                coeff *= alpha_n(lam[a]).pow(mult) * Rational(1, fact);
                a = b;
            }
            FockOperator raise = FockOperator::identity();
            FockOperator lower = FockOperator::identity();
            for (int part : lam) {
                raise = raise * heisenberg_u(mu_num, mu_den, part).realization;
                lower = lower * heisenberg_u(mu_num, mu_den, -part).realization;
            }
            acc = acc + raise * lower * coeff;
        }
    }
    return acc;
}

namespace {

std::optional<json> first_mismatch(const FockOperator& a, const FockOperator& b, int degree) {
    if (!a.is_strictly_zero() && !b.is_strictly_zero() && a.shift() != b.shift())
        return json{{"kind", "shift mismatch"}, {"lhs", a.shift()}, {"rhs", b.shift()}};
    int shift = !a.is_strictly_zero() ? a.shift() : (!b.is_strictly_zero() ? b.shift() : 0);
    for (int d = 0; d <= degree; ++d) {
        if (d + shift < 0) continue;
        for (const Partition& col : partitions_of(d))
            for (const Partition& row : partitions_of(d + shift)) {
                FieldElement l = a.entry(row, col);
                FieldElement r = b.entry(row, col);
                if (l != r)
                    return json{{"degree", d},
                                {"row", p_to_string(row)},
                                {"col", p_to_string(col)},
                                {"lhs", to_string(l)},
                                {"rhs", to_string(r)}};
            }
    }
    return std::nullopt;
}

void push_entry(json& suite, const std::string& relation, json params,
                const FockOperator& lhs, const FockOperator& rhs, int degree) {
    json e{{"relation", relation}, {"parameters", std::move(params)}, {"degrees", degree}};
    if (auto w = first_mismatch(lhs, rhs, degree)) {
        e["status"] = "fail";
        e["witness"] = *w;
        suite["status"] = "fail";
    } else {
        e["status"] = "pass";
    }
    suite["entries"].push_back(std::move(e));
}

} // namespace

json verify_row_relations(int range, int degree) {
    json suite{{"suite", "row relations"},
               {"range", range},
               {"degree", degree},
               {"status", "pass"},
               {"entries", json::array()}};
    CentralCharge c = standard_charge();
    for (int d = -range; d <= range; ++d) {
        if (d == 0) continue;
        for (int l = -range; l <= range; ++l) {
            FockOperator lhs = op_commutator(omega_op({0, d}), omega_op({1, l}));
            FockOperator rhs = omega_op({1, l + d});
            if (d < 0) rhs = -(rhs * kappa(c, {0, d}));
            push_entry(suite, "[u(0,d),u(1,l)]", json{{"d", d}, {"l", l}}, lhs, rhs, degree);

            FockOperator lhs2 = op_commutator(omega_op({-1, l}), omega_op({0, d}));
            FockOperator rhs2 = omega_op({-1, l + d});
            rhs2 = d > 0 ? rhs2 * kappa(c, {0, -d}) : -rhs2;
            push_entry(suite, "[u(-1,k),u(0,d)]", json{{"d", d}, {"k", l}}, lhs2, rhs2, degree);
        }
    }
    return suite;
}

json verify_mixed_relations(int range, int degree) {
    json suite{{"suite", "mixed relations"},
               {"range", range},
               {"degree", degree},
               {"status", "pass"},
               {"entries", json::array()}};
    CentralCharge c = standard_charge();
    for (int k = -range; k <= range; ++k) {
        for (int l = -range; l <= range; ++l) {
            FockOperator lhs = op_commutator(omega_op({-1, k}), omega_op({1, l}));
            FockOperator rhs;
            int m = k + l;
            if (m > 0) {
                rhs = omega_theta({0, m}) * (kappa(c, {1, -k}) / alpha_n(1));
            } else if (m == 0) {
                FieldElement kap = kappa(c, {1, -k});
                rhs = FockOperator::identity() * ((kap - kap.inv()) / alpha_n(1));
            } else {
                rhs = -(omega_theta({0, m}) * (kappa(c, {-1, -l}) / alpha_n(1)));
            }
            push_entry(suite, "[u(-1,k),u(1,l)]", json{{"k", k}, {"l", l}}, lhs, rhs, degree);
        }
    }
    return suite;
}

json verify_plane_relations(int coord_bound, int degree) {
    if (coord_bound < 1) throw DomainError("plane suite needs a positive coordinate bound");
    json suite{{"suite", "plane relations"},
               {"bound", coord_bound},
               {"degree", degree},
               {"status", "pass"},
               {"entries", json::array()}};
    CentralCharge c = standard_charge();
    std::vector<LatticePoint> pts;
    for (int r = -coord_bound; r <= coord_bound; ++r)
        for (int d = -coord_bound; d <= coord_bound; ++d)
            if (r != 0 || d != 0) pts.push_back({r, d});
    for (const LatticePoint& x : pts) {
        for (const LatticePoint& y : pts) {
            json params{{"x", lp_to_string(x)}, {"y", lp_to_string(y)}};
            if (lp_det(x, y) == 0) {
                FockOperator lhs = op_commutator(omega_op(y), omega_op(x));
                if ((x + y).is_zero()) {
                    FieldElement kap = kappa(c, x);
                    FockOperator rhs =
                        FockOperator::identity() * ((kap - kap.inv()) / alpha_n(gcd_d(x)));
                    push_entry(suite, "same line, opposite", params, lhs, rhs, degree);
                } else {
                    push_entry(suite, "same line, commuting", params, lhs, FockOperator(),
                               degree);
                }
            } else if (gcd_d(x) == 1 && triangle_interior_empty(x, y)) {
                FockOperator lhs = op_commutator(omega_op(y), omega_op(x));
                FieldElement scale =
                    kappa(c, alpha_vec(x, y)) * Rational(eps_pair(x, y)) / alpha_n(1);
                FockOperator rhs = omega_theta(x + y) * scale;
                push_entry(suite, "empty triangle", params, lhs, rhs, degree);
            }
        }
    }
    return suite;
}

// Exterior-power generating series of the tautological difference bundle.
// The plus side exponentiates the ray through (1,1), the minus side the ray
// through (-1,0); both weights carry 1 - (qt)^n and the half-step monomial
// that renormalizes the lattice generator to the bundle class.
FormalSeries<FockOperator> virtual_plus_series(int order) {
    FormalSeries<FockOperator> arg(order, FockOperator());
    for (int n = 1; n <= order; ++n) {
        FieldElement qt_n = (FieldElement::gen(QT(), 0) * FieldElement::gen(QT(), 1)).pow(n);
        FieldElement w = (fe_one() - qt_n) * FieldElement::gen_pow(QT(), 1, -n) *
                         Rational(n % 2 == 0 ? -1 : 1, n);
        arg.set_coeff(n, omega_op({n, n}) * w);
    }
    return ps_exp(arg, FockOperator::identity());
}

FormalSeries<FockOperator> virtual_minus_series(int order) {
    FormalSeries<FockOperator> arg(order, FockOperator());
    for (int n = 1; n <= order; ++n) {
        FieldElement qt_n = (FieldElement::gen(QT(), 0) * FieldElement::gen(QT(), 1)).pow(n);
        FieldElement w = (fe_one() - qt_n) * FieldElement::gen_pow(QT(), 0, -n) *
                         Rational(-1, n);
        arg.set_coeff(n, omega_op({-n, 0}) * w);
    }
    return ps_exp(arg, FockOperator::identity());
}

} // namespace ehk
