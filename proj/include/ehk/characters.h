#pragma once

#include "ehk/field.h"
#include "ehk/partition.h"

namespace ehk {

// Equivariant character combinatorics over the {q, t} context. Characters
// are Laurent polynomials in q, t with integer coefficients; their lambda
// operation Prod (1 - monomial)^coeff lands in the fraction field.

// Box monomial q^(x(s)) t^(y(s)) = q^(i-1) t^(j-1), to the l-th power.
LaurentPoly box_monomial(const Cell& s, int l = 1);

// Sum of l-th powers of box monomials over lambda.
LaurentPoly b_stat(const Partition& lambda, int l);

// Tangent character: sum over s in lambda of
// t^(l(s)) q^(-a(s)-1) + t^(-l(s)-1) q^(a(s)).
LaurentPoly tangent_char(const Partition& lambda);

// Tautological character: sum over s in lambda of t^(j-1) q^(i-1).
LaurentPoly taut_char(const Partition& lambda);

// Normal character of a pair: sum over s in mu of
// t^(l_mu(s)) q^(-a_lambda(s)-1) + t^(-l_lambda(s)-1) q^(a_mu(s)).
LaurentPoly normal_char(const Partition& mu, const Partition& lambda);

// Virtual character with shift -1 built into lambda-duality bookkeeping:
// sum over s in mu of t^(l_lambda(s)+1) q^(-a_mu(s)) plus
// sum over s in lambda of t^(-l_mu(s)) q^(a_lambda(s)+1).
LaurentPoly virtual_char(const Partition& lambda, const Partition& mu);

// Monomial-wise dual: q -> q^(-1), t -> t^(-1).
LaurentPoly char_dual(const LaurentPoly& c);

// Lambda operation on a virtual character with integer coefficients:
// Prod over monomials m of (1 - m)^coeff. DomainError on non-integer
// coefficients or a constant term (1 - 1 contributes a plain zero factor
// only when the coefficient is positive; negative constant coefficients
// are poles).
FieldElement lambda_of(const LaurentPoly& c);

// Lambda of the dual tangent character, as the explicit hook product
// Prod over s in lambda of (1 - t^(-l) q^(a+1)) (1 - t^(l+1) q^(-a)).
FieldElement lambda_T_star(const Partition& lambda);

// Lambda of the dual normal character: Prod over s in mu of
// (1 - t^(-l_mu) q^(a_lambda+1)) (1 - t^(l_lambda+1) q^(-a_mu)).
FieldElement lambda_N_star(const Partition& mu, const Partition& lambda);

// Eigenvalue frame of a partition: monomials x_1..x_r of the removable
// boxes (ordered by increasing row) and the interleaved u_0..u_r with
// x_k = t^(alpha_k) q^(beta_k), u_l = t^(alpha_(l+1)) q^(beta_l), where
// alpha_k = y(A_k), beta_k = x(A_k), beta_0 = alpha_(r+1) = -1. The
// addable-box monomials are exactly qt * u_l.
struct GTFrame {
    std::vector<FieldElement> x;
    std::vector<FieldElement> u;
};

GTFrame garsia_tesler(const Partition& lambda);

} // namespace ehk
