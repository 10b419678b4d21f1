#pragma once

#include <string>

#include "json.hpp"

#include "ehk/fock.h"
#include "ehk/lattice.h"

namespace ehk {

// Central charge pair. kappa is multiplicative on the lattice with the
// horizontal unit carrying c2 and the vertical unit carrying c1; the
// Heisenberg bracket [u(-1,0), u(1,0)] = (c2 - c2^(-1))/alpha_1 pins this
// orientation.
struct CentralCharge {
    FieldElement c1;
    FieldElement c2;
};

// (1, (qt)^(1/2)): the charge realized on the Fock space.
CentralCharge standard_charge();

// kappa_{(a,b)} = c2^a c1^b.
FieldElement kappa(const CentralCharge& c, LatticePoint x);

// (1 - (qt)^n)(1 - q^(-n))(1 - t^(-n))/n; invariant under n -> -n.
FieldElement alpha_n(int n);

// A lattice algebra element seen through its Fock realization. The
// representation is faithful, so operator agreement on a degree range is
// how element identities are decided; every verification report records
// the range used.
struct HallElement {
    FockOperator realization;
    std::string label;
};

// u_x for arbitrary nonzero x. Rows r in {-1, 0, 1} are the generator
// families h(r, d); a primitive point with |r| >= 2 splits along the unique
// minimal triangle (0, w, x) whose apex w has first coordinate strictly
// between 0 and x.r, giving u_x = eps^(-1) kappa^(-1) [u_{x-w}, u_w]; an
// imprimitive x = g x0 takes the theta elements theta_{k x0}, k <= g, from
// det-k triangles over one witness w and inverts the exponential
//   sum_k theta_{k x0} s^k = exp(sum_m alpha_m u_{m x0} s^m).
// Results are memoized per point.
HallElement omega_generator(LatticePoint x);

// theta_z for z = g z0, z0 primitive: the s^g coefficient of the
// exponential above, built from the realized u_{m z0}.
FockOperator omega_theta(LatticePoint z);

// u^mu_l = u_{(l r, l d)} for mu = d/r in lowest terms with r >= 1.
HallElement heisenberg_u(int mu_num, int mu_den, int l);

// Casimir operator of finite slope mu = mu_num/mu_den, correct on degrees
// <= max_degree: identity plus the sum over nonempty partitions lambda with
// r |lambda| <= max_degree of
//   (prod_i alpha_i^{m_i(lambda)} / m_i(lambda)!) u^mu_lambda u^mu_{-lambda}.
FockOperator casimir(int mu_num, int mu_den, int max_degree);

// Relation verification suites over the standard charge. Each returns
//   {suite, range or bound, degree, status, entries}
// where every entry is {relation, parameters, degrees, status} plus the
// first differing matrix entry as witness when the identity fails.
nlohmann::json verify_row_relations(int range, int degree);
nlohmann::json verify_mixed_relations(int range, int degree);
nlohmann::json verify_plane_relations(int coord_bound, int degree);

} // namespace ehk
