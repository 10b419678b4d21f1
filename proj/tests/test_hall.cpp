#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ehk/errors.h"
#include "ehk/hall.h"
#include "ehk/parse.h"
#include "ehk/series.h"

using namespace ehk;

namespace {

const Context* QT = Context::qt();

FieldElement fe(const std::string& s) { return parse_field(s, QT); }

FockVector basis(const Partition& lam) {
    FockVector v;
    v.add(lam, FieldElement::one(QT));
    return v;
}

FockVector scaled(const std::string& c, const Partition& lam) {
    FockVector v;
    v.add(lam, fe(c));
    return v;
}

FockOperator scalar_op(const std::string& c) { return FockOperator::identity() * fe(c); }

} // namespace

TEST_CASE("alpha scalars") {
    CHECK(alpha_n(1) == fe("(1 - q*t)*(1 - q^(-1))*(1 - t^(-1))"));
    CHECK(alpha_n(2) == fe("(1 - q^2*t^2)*(1 - q^(-2))*(1 - t^(-2))/2"));
    for (int n = 1; n <= 4; ++n) CHECK(alpha_n(-n) == alpha_n(n));
    CHECK_THROWS_AS(alpha_n(0), DomainError);
}

TEST_CASE("lattice helpers") {
    CHECK(gcd_d({2, -4}) == 2);
    CHECK(gcd_d({0, 3}) == 3);
    CHECK(eps({0, 3}) == 1);
    CHECK(eps({-1, 5}) == -1);
    CHECK(eps({1, -7}) == 1);
    CHECK_THROWS_AS(eps({0, 0}), DomainError);
    CHECK(eps_pair({1, 0}, {0, 1}) == 1);
    CHECK(eps_pair({0, 1}, {1, 0}) == -1);
    CHECK_THROWS_AS(eps_pair({1, 1}, {-2, -2}), DomainError);

    // kappa is multiplicative with the horizontal unit carrying c2: the
    // opposite-pair bracket [u(-1,0), u(1,0)] = (c2 - c2^(-1))/alpha_1 is
    // nonzero on the Fock space, which fixes this assignment.
    CentralCharge c = standard_charge();
    CHECK(kappa(c, {1, 0}) == fe("q^(1/2)*t^(1/2)"));
    CHECK(kappa(c, {0, 7}) == fe("1"));
    CHECK(kappa(c, {2, 3}) == fe("q*t"));
    CHECK(kappa(c, {-1, 4}) == fe("q^(-1/2)*t^(-1/2)"));

    // The three orientation branches of the bracket exponent.
    CHECK(alpha_vec({1, 2}, {-1, -1}) == LatticePoint{1, 1});
    CHECK(alpha_vec({1, 0}, {-1, -2}) == LatticePoint{-1, 0});
    CHECK(alpha_vec({1, 0}, {1, 1}) == LatticePoint{0, 0});
    CHECK_THROWS_AS(alpha_vec({1, 0}, {2, 0}), DomainError);

    CHECK(triangle_interior_empty({0, 1}, {2, 0}));
    CHECK(triangle_interior_empty({1, 0}, {1, 2}));
    CHECK(!triangle_interior_empty({1, 0}, {2, 4}));
    CHECK_THROWS_AS(triangle_interior_empty({1, 0}, {2, 0}), DomainError);
}

TEST_CASE("generator rows and splits") {
    CHECK_THROWS_AS(omega_generator({0, 0}), DomainError);
    CHECK(omega_generator({2, 1}).label == "u(2,1)");

    // The rows themselves and the first split point (1,1) = (1,0) + (0,1).
    CHECK(op_equal_on(omega_generator({1, 1}).realization,
                      f_plus(0) * fe("t^(1/2)"), 6));
    CHECK(op_equal_on(omega_generator({0, 2}).realization, h_op(0, 2), 6));

    // Hand-multiplied matrix entries of u(2,1) = [u(1,1), u(1,0)].
    FockOperator u21 = omega_generator({2, 1}).realization;
    CHECK(u21.shift() == 2);
    CHECK(u21.entry({2}, {}) == fe("t/((t - q)*(1 - q)^2)"));
    CHECK(u21.entry({1, 1}, {}) == fe("-t/((t - q)*(1 - t)^2)"));

    // The same point through a triangle with a nontrivial central factor:
    // (2,1) = (3,1) + (-1,0) gives u(2,1) = (qt)^(-1/2) [u(-1,0), u(3,1)].
    FockOperator alt = op_commutator(omega_generator({-1, 0}).realization,
                                     omega_generator({3, 1}).realization) *
                       fe("q^(-1/2)*t^(-1/2)");
    CHECK(op_equal_on(u21, alt, 5));

    // A rank-2 route through the theta inversion: [u(0,1), u(2,0)] = u(2,1).
    FockOperator via_theta = op_commutator(omega_generator({0, 1}).realization,
                                           omega_generator({2, 0}).realization);
    CHECK(op_equal_on(u21, via_theta, 5));

    // Primitive theta elements collapse to alpha_1 u.
    CHECK(op_equal_on(omega_theta({2, 1}), u21 * alpha_n(1), 4));
    CHECK_THROWS_AS(omega_theta({0, 0}), DomainError);
}

TEST_CASE("decomposition independence") {
    // Every split of a primitive z into w + y with det(w, z) = 1 gives the
    // same operator back through the empty-triangle bracket.
    std::vector<LatticePoint> targets = {{2, 1},  {2, -1}, {-2, 1}, {-2, -1},
                                         {3, 2},  {-3, 2}, {3, -1}, {2, 3},
                                         {-2, -3}};
    for (const LatticePoint& z : targets) {
        CAPTURE(lp_to_string(z));
        int routes = 0;
        for (int wr = -4; wr <= 4; ++wr) {
            for (int wd = -4; wd <= 4; ++wd) {
                LatticePoint w{wr, wd};
                LatticePoint y = z - w;
                if (w.is_zero() || y.is_zero()) continue;
                if (lp_det(w, z) != 1) continue;
                FieldElement k = kappa(standard_charge(), alpha_vec(w, y));
                FockOperator route =
                    op_commutator(omega_generator(y).realization,
                                  omega_generator(w).realization) *
                    k.inv();
                CHECK(op_equal_on(route, omega_generator(z).realization, 4));
                ++routes;
            }
        }
        CHECK(routes >= 2);
    }
}

TEST_CASE("relation suites") {
    auto row = verify_row_relations(2, 4);
    CHECK(row["status"] == "pass");
    CHECK(row["entries"].size() == 40);
    for (const auto& e : row["entries"]) {
        CHECK(e["status"] == "pass");
        CHECK(!e.contains("witness"));
    }

    auto mixed = verify_mixed_relations(2, 4);
    CHECK(mixed["status"] == "pass");
    CHECK(mixed["entries"].size() == 25);

    auto plane = verify_plane_relations(2, 3);
    CHECK(plane["status"] == "pass");
    CHECK(plane["entries"].size() > 100);
    CHECK_THROWS_AS(verify_plane_relations(0, 3), DomainError);
}

TEST_CASE("mixed bracket scalar") {
    // [h(-1,0), h(1,0)] in closed form, two ways.
    FockOperator lhs = op_commutator(h_op(-1, 0), h_op(1, 0));
    CHECK(op_equal_on(lhs, scalar_op("-q^(1/2)*t^(1/2)/((1 - q)*(1 - t))"), 5));
    CHECK(fe("q^(1/2)*t^(1/2) - q^(-1/2)*t^(-1/2)") / alpha_n(1) ==
          fe("-q^(1/2)*t^(1/2)/((1 - q)*(1 - t))"));
}

TEST_CASE("heisenberg elements") {
    CHECK(op_equal_on(heisenberg_u(0, 1, 1).realization, h_op(1, 0), 5));
    CHECK(op_equal_on(heisenberg_u(1, 2, 1).realization,
                      omega_generator({2, 1}).realization, 4));
    CHECK_THROWS_AS(heisenberg_u(1, 0, 1), DomainError);
    CHECK_THROWS_AS(heisenberg_u(2, 2, 1), DomainError);
    CHECK_THROWS_AS(heisenberg_u(0, 1, 0), DomainError);

    // One central value per level on every slope-mu ladder:
    // [u^mu_{-l}, u^mu_l] = ((qt)^(l/2) - (qt)^(-l/2))/alpha_l.
    for (int mu : {0, 1}) {
        for (int l : {1, 2}) {
            FockOperator br = op_commutator(heisenberg_u(mu, 1, -l).realization,
                                            heisenberg_u(mu, 1, l).realization);
            FieldElement kap = kappa(standard_charge(), {l, l * mu});
            FockOperator rhs = FockOperator::identity() * ((kap - kap.inv()) / alpha_n(l));
            CHECK(op_equal_on(br, rhs, 4));
        }
    }
    // Same-sign and non-opposite levels commute.
    CHECK(op_equal_on(op_commutator(heisenberg_u(0, 1, 1).realization,
                                    heisenberg_u(0, 1, 2).realization),
                      FockOperator(), 4));
    CHECK(op_equal_on(op_commutator(heisenberg_u(0, 1, -1).realization,
                                    heisenberg_u(0, 1, 2).realization),
                      FockOperator(), 4));
}

TEST_CASE("casimir operators") {
    FockOperator c0 = casimir(0, 1, 4);
    CHECK(c0.apply(basis({})) == basis({}));
    CHECK(c0.apply(basis({1})) ==
          scaled("1 + q^(1/2)*t^(1/2) - q^(-1/2)*t^(-1/2)", {1}));
    CHECK_THROWS_AS(casimir(1, 0, 3), DomainError);
    CHECK_THROWS_AS(casimir(0, 1, -1), DomainError);

    // Conjugating by nabla shifts the slope by one.
    FockOperator c1 = casimir(1, 1, 4);
    FockOperator nab_inv = FockOperator::diagonal([](const Partition& lam) {
        return FieldElement(LaurentPoly::gen_pow(QT, 1, -2 * p_nstat(lam)) *
                            LaurentPoly::gen_pow(QT, 0, -2 * p_nstat(p_conjugate(lam))));
    });
    CHECK(op_equal_on(c1, nabla() * c0 * nab_inv, 4));
}

TEST_CASE("virtual series") {
    auto plus = virtual_plus_series(3);
    auto minus = virtual_minus_series(3);
    CHECK(op_equal_on(plus.coeff(0), FockOperator::identity(), 4));
    CHECK(op_equal_on(plus.coeff(1), f_plus(0) * fe("1 - q*t"), 4));
    CHECK(op_equal_on(minus.coeff(1), f_minus(0) * fe("1 - q*t"), 4));

    // Wedge coefficients stay supported on nested pairs.
    for (int k = 1; k <= 3; ++k) {
        for (int dg = 0; dg <= 3; ++dg) {
            for (const Partition& col : partitions_of(dg)) {
                for (const Partition& row : partitions_of(dg + k)) {
                    if (!plus.coeff(k).entry(row, col).is_zero())
                        CHECK(p_contains(row, col));
                    if (!minus.coeff(k).entry(col, row).is_zero())
                        CHECK(p_contains(row, col));
                }
            }
        }
    }

    // The tautological commutation characterizes the plus series given its
    // first coefficient: [f_{0,1}, A(z)] = z (A(z) f_{1,1} - qt f_{1,1} A(z)).
    for (int k = 1; k <= 3; ++k) {
        FockOperator lhs = op_commutator(f_zero(1), plus.coeff(k));
        FockOperator rhs = plus.coeff(k - 1) * f_plus(1) -
                           f_plus(1) * plus.coeff(k - 1) * fe("q*t");
        CHECK(op_equal_on(lhs, rhs, 4));
    }
}
