#include "ehk/characters.h"

#include <algorithm>

#include "ehk/errors.h"

namespace ehk {

namespace {

const Context* QT() { return Context::qt(); }

LaurentPoly qt_monomial(int qpow, int tpow) {
    return LaurentPoly::monomial(QT(), {2 * qpow, 2 * tpow}, Rational(1));
}

} // namespace

LaurentPoly box_monomial(const Cell& s, int l) {
    return qt_monomial(l * (s.first - 1), l * (s.second - 1));
}

LaurentPoly b_stat(const Partition& lambda, int l) {
    require_partition(lambda);
    LaurentPoly sum(QT());
    for (const Cell& s : p_cells(lambda)) sum += box_monomial(s, l);
    return sum;
}

LaurentPoly tangent_char(const Partition& lambda) {
    require_partition(lambda);
    LaurentPoly sum(QT());
    for (const auto& [i, j] : p_cells(lambda)) {
        int a = p_arm(lambda, i, j);
        int l = p_leg(lambda, i, j);
        sum += qt_monomial(-a - 1, l);
        sum += qt_monomial(a, -l - 1);
    }
    return sum;
}

LaurentPoly taut_char(const Partition& lambda) {
    require_partition(lambda);
    LaurentPoly sum(QT());
    for (const auto& [i, j] : p_cells(lambda)) sum += qt_monomial(i - 1, j - 1);
    return sum;
}

LaurentPoly normal_char(const Partition& mu, const Partition& lambda) {
    require_partition(mu);
    require_partition(lambda);
    if (!p_contains(lambda, mu) || p_weight(lambda) != p_weight(mu) + 1)
        throw DomainError("normal character needs nested diagrams differing by one box");
    LaurentPoly sum(QT());
    for (const auto& [i, j] : p_cells(mu)) {
        sum += qt_monomial(-p_arm(lambda, i, j) - 1, p_leg(mu, i, j));
        sum += qt_monomial(p_arm(mu, i, j), -p_leg(lambda, i, j) - 1);
    }
    return sum;
}

LaurentPoly virtual_char(const Partition& lambda, const Partition& mu) {
    require_partition(lambda);
    require_partition(mu);
    LaurentPoly sum(QT());
    for (const auto& [i, j] : p_cells(mu))
        sum += qt_monomial(-p_arm(mu, i, j), p_leg(lambda, i, j) + 1);
    for (const auto& [i, j] : p_cells(lambda))
        sum += qt_monomial(p_arm(lambda, i, j) + 1, -p_leg(mu, i, j));
    return sum;
}

LaurentPoly char_dual(const LaurentPoly& c) {
    return c.invert_gen(0).invert_gen(1);
}

FieldElement lambda_of(const LaurentPoly& c) {
    FieldElement result = FieldElement::one(QT());
    for (size_t i = 0; i < c.term_count(); ++i) {
        const Rational& coeff = c.coeff_at(i);
        if (coeff.get_den() != 1)
            throw DomainError("lambda operation needs integer multiplicities");
        Integer m = coeff.get_num();
        if (!m.fits_slong_p()) throw DomainError("character multiplicity too large");
        long mult = m.get_si();
        FieldElement factor = FieldElement::one(QT()) -
                              FieldElement(LaurentPoly::monomial(QT(), c.exponents_at(i), Rational(1)));
        result *= factor.pow(mult);
    }
    return result;
}

FieldElement lambda_T_star(const Partition& lambda) {
    require_partition(lambda);
    FieldElement result = FieldElement::one(QT());
    FieldElement one = FieldElement::one(QT());
    for (const auto& [i, j] : p_cells(lambda)) {
        int a = p_arm(lambda, i, j);
        int l = p_leg(lambda, i, j);
        result *= one - FieldElement(qt_monomial(a + 1, -l));
        result *= one - FieldElement(qt_monomial(-a, l + 1));
    }
    return result;
}

FieldElement lambda_N_star(const Partition& mu, const Partition& lambda) {
    require_partition(mu);
    require_partition(lambda);
    if (!p_contains(lambda, mu) || p_weight(lambda) != p_weight(mu) + 1)
        throw DomainError("normal character needs nested diagrams differing by one box");
    FieldElement result = FieldElement::one(QT());
    FieldElement one = FieldElement::one(QT());
    for (const auto& [i, j] : p_cells(mu)) {
        result *= one - FieldElement(qt_monomial(p_arm(lambda, i, j) + 1, -p_leg(mu, i, j)));
        result *= one - FieldElement(qt_monomial(-p_arm(mu, i, j), p_leg(lambda, i, j) + 1));
    }
    return result;
}

GTFrame garsia_tesler(const Partition& lambda) {
    require_partition(lambda);
    // The interleaving x_1, u_1, ..., x_r needs the removable boxes by
    // increasing row, the reverse of the public increasing-column order.
    std::vector<Cell> rem = p_removable(lambda);
    std::reverse(rem.begin(), rem.end());
    const size_t r = rem.size();
    std::vector<int> alpha(r + 2), beta(r + 1);
    beta[0] = -1;
    alpha[r + 1] = -1;
    for (size_t k = 1; k <= r; ++k) {
        alpha[k] = rem[k - 1].second - 1;
        beta[k] = rem[k - 1].first - 1;
    }
    GTFrame frame;
    for (size_t k = 1; k <= r; ++k)
        frame.x.push_back(FieldElement(qt_monomial(beta[k], alpha[k])));
    for (size_t l = 0; l <= r; ++l)
        frame.u.push_back(FieldElement(qt_monomial(beta[l], alpha[l + 1])));
    return frame;
}

} // namespace ehk
