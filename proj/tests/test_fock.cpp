#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ehk/errors.h"
#include "ehk/fock.h"
#include "ehk/parse.h"

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

} // namespace

TEST_CASE("fock vectors") {
    FockVector v = basis({2}) + scaled("q", {1, 1});
    CHECK(v.coeff({2}) == fe("1"));
    CHECK(v.coeff({1, 1}) == fe("q"));
    CHECK(v.coeff({3}).is_zero());
    CHECK((v - v).is_zero());
    CHECK(v * fe("q^(-1)") == scaled("q^(-1)", {2}) + basis({1, 1}));
    CHECK(to_string(v) == "(1)*H(2) + (q)*H(1,1)");
    CHECK(to_string(FockVector()) == "0");
}

TEST_CASE("diagonal operators") {
    FockOperator f0 = f_zero(1);
    CHECK(f0.apply(basis({2, 1})) == scaled("1 + q + t", {2, 1}));
    CHECK(f0.apply(basis({})).is_zero());
    CHECK(f0.apply(basis({1})) == basis({1}));
    CHECK(f_zero(-1).apply(basis({2})) == scaled("1 + t^(-1)", {2}));
    CHECK_THROWS_AS(f_zero(0), DomainError);

    OpMatrix m = op_matrix(f0, 2);
    REQUIRE(m.rows == std::vector<Partition>{{2}, {1, 1}});
    REQUIRE(m.cols == m.rows);
    CHECK(m.entries[0][0] == fe("1 + t"));
    CHECK(m.entries[0][1].is_zero());
    CHECK(m.entries[1][0].is_zero());
    CHECK(m.entries[1][1] == fe("1 + q"));

    // e_{0,1} = f_{0,1}; higher l take elementary symmetric functions of the
    // same box monomials.
    for (int d = 0; d <= 5; ++d)
        CHECK(op_equal_on(e_zero(1), f_zero(1), d));
    CHECK(e_zero(2).apply(basis({2})) == scaled("t", {2}));
    CHECK(e_zero(3).apply(basis({2})).is_zero());
    CHECK(e_zero(-2).apply(basis({2})) == scaled("t^(-1)", {2}));
    CHECK_THROWS_AS(e_zero(0), DomainError);

    FockOperator nab = nabla();
    CHECK(nab.apply(basis({1})) == basis({1}));
    CHECK(nab.apply(basis({2})) == scaled("q", {2}));
    CHECK(nab.apply(basis({1, 1})) == scaled("t", {1, 1}));
    CHECK(nab.apply(basis({2, 1})) == scaled("q*t", {2, 1}));
}

TEST_CASE("raising operator") {
    FockOperator fp = f_plus(0);
    CHECK(fp.entry({2}, {1}) == fe("t/((q - t)*(1 - q))"));
    CHECK(fp.entry({1, 1}, {1}) == fe("-q/((q - t)*(1 - t))"));
    CHECK(fp.entry({2, 1}, {1}).is_zero());
    CHECK(fp.entry({1}, {}) == fe("1/((1 - q)*(1 - t))"));

    // Multiplication by p_1 is (1-q)(1-t) f_{1,-1}: check the classical
    // expansion p_1 * H(1) against the two-box transition coefficients.
    FockOperator p1 = f_plus(-1) * fe("(1 - q)*(1 - t)");
    FockVector got = p1.apply(basis({1}));
    CHECK(got.coeff({2}) == fe("(1 - t)/(q - t)"));
    CHECK(got.coeff({1, 1}) == fe("(1 - q)/(t - q)"));
}

TEST_CASE("lowering operator") {
    FockOperator fm = f_minus(0);
    CHECK(fm.apply(basis({1})) == basis({}));
    CHECK(fm.apply(basis({})).is_zero());
    // f_{-1,0} acts as d/dp_1: on H(2) = ((1+q) p_1^2 + (1-q) p_2)/2 this
    // gives (1+q) p_1 = (1+q) H(1).
    CHECK(fm.apply(basis({2})) == scaled("1 + q", {1}));
    CHECK(fm.apply(basis({1, 1})) == scaled("1 + t", {1}));
    CHECK(f_minus(1).apply(basis({2})) == scaled("t*(1 + q)", {1}));

    // gamma_0 = [f_{-1,0}, f_{1,-1}] is the scalar 1/((1-q)(1-t)).
    FockOperator gamma0 = op_commutator(f_minus(0), f_plus(-1));
    FieldElement c = fe("1/((1 - q)*(1 - t))");
    for (int n = 0; n <= 5; ++n) {
        OpMatrix m = op_matrix(gamma0, n);
        for (size_t i = 0; i < m.rows.size(); ++i)
            for (size_t j = 0; j < m.cols.size(); ++j)
                CHECK(m.entries[i][j] == (i == j ? c : FieldElement::zero(QT)));
    }
}

TEST_CASE("transition commutators") {
    // [f_{0,l}, f_{1,k}] = f_{1,k+l} and [f_{0,l}, f_{-1,k}] picks up a sign,
    // both driven by the one-box difference of the diagonal eigenvalues.
    for (int l = -2; l <= 2; ++l) {
        if (l == 0) continue;
        for (int k = -1; k <= 1; ++k) {
            FockOperator lhs = op_commutator(f_zero(l), f_plus(k));
            CHECK(op_equal_on(lhs, f_plus(k + l), 4));
            FockOperator mhs = op_commutator(f_zero(l), f_minus(k));
            CHECK(op_equal_on(mhs, f_minus(k + l) * Rational(-1), 4));
        }
    }
}

TEST_CASE("half twisted generators") {
    CHECK(op_equal_on(h_op(1, 1), f_plus(0) * fe("t^(1/2)"), 4));
    CHECK(op_equal_on(h_op(-1, 0), f_minus(0) * fe("-q^(1/2)"), 4));
    CHECK_THROWS_AS(h_op(0, 0), DomainError);

    FockVector v = h_op(0, 1).apply(basis({1}));
    CHECK(v == scaled("1 - 1/((1 - q)*(1 - t))", {1}));
    FockVector w = h_op(0, -1).apply(basis({1}));
    CHECK(w == scaled("-1 + 1/((1 - q^(-1))*(1 - t^(-1)))", {1}));

    // The degree-zero Heisenberg pairing: [h_{-1,0}, h_{1,0}] has vacuum
    // entry -(qt)^(1/2)/((1-q)(1-t)).
    FockOperator comm = op_commutator(h_op(-1, 0), h_op(1, 0));
    CHECK(comm.entry({}, {}) == fe("-(q*t)^(1/2)/((1 - q)*(1 - t))"));
}

TEST_CASE("hecke twist") {
    // Twisting by the box monomials of the added cells reproduces the
    // commutator with the diagonal generator.
    for (int l = -2; l <= 2; ++l) {
        if (l == 0) continue;
        for (int k = -1; k <= 1; ++k) {
            FockOperator tw = hecke_twist(l, f_plus(k));
            CHECK(op_equal_on(tw, op_commutator(f_zero(l), f_plus(k)), 4));
            CHECK(op_equal_on(tw, f_plus(k + l), 4));
        }
        FockOperator prod = f_plus(0) * f_plus(-1);
        CHECK(op_equal_on(hecke_twist(l, prod), op_commutator(f_zero(l), prod), 4));
    }
    CHECK(op_equal_on(hecke_twist(1, f_zero(2)), FockOperator(), 4));
    CHECK(op_equal_on(hecke_twist(2, FockOperator::identity()), FockOperator(), 4));
    CHECK_THROWS_AS(hecke_twist(1, f_minus(0)), DomainError);
    FockOperator bad = hecke_twist(1, FockOperator::make(1, [](const Partition&, const Partition&) {
        return FieldElement::one(QT);
    }));
    CHECK_THROWS_AS(bad.entry({1, 1, 1}, {2}), DomainError);
}

TEST_CASE("operator algebra plumbing") {
    FockOperator a = f_plus(0);
    CHECK_THROWS_AS(a + f_minus(0), DomainError);
    CHECK(op_equal_on(a - a, FockOperator(), 4));
    CHECK(FockOperator().is_strictly_zero());
    CHECK(!a.is_strictly_zero());
    CHECK((a * FockOperator()).is_strictly_zero());
    CHECK((FockOperator() + a).entry({1}, {}) == a.entry({1}, {}));
    CHECK_THROWS_AS(op_matrix(a, -1), DomainError);

    OpMatrix m = op_matrix(a, 2);
    CHECK(m.rows == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(m.cols == std::vector<Partition>{{2}, {1, 1}});
}
