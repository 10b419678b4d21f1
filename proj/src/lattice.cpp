#include "ehk/lattice.h"

#include <cstdlib>
#include <numeric>

#include "ehk/errors.h"

namespace ehk {

int gcd_d(LatticePoint x) { return std::gcd(std::abs(x.r), std::abs(x.d)); }

long long lp_det(LatticePoint x, LatticePoint y) {
    return (long long)x.r * y.d - (long long)x.d * y.r;
}

int eps(LatticePoint x) {
    if (x.is_zero()) throw DomainError("the origin lies in neither half plane");
    if (x.r != 0) return x.r > 0 ? 1 : -1;
    return x.d > 0 ? 1 : -1;
}

int eps_pair(LatticePoint x, LatticePoint y) {
    long long det = lp_det(x, y);
    if (det == 0) throw DomainError("eps_pair needs a non-collinear pair");
    return det > 0 ? 1 : -1;
}

LatticePoint alpha_vec(LatticePoint x, LatticePoint y) {
    int orient = eps_pair(x, y);
    LatticePoint z = x + y;
    int vr = eps(x) * x.r + eps(y) * y.r - eps(z) * z.r;
    int vd = eps(x) * x.d + eps(y) * y.d - eps(z) * z.d;
    // The combination is always even: each term is its point mod 2.
    int s = orient == 1 ? eps(x) : eps(y);
    return {s * vr / 2, s * vd / 2};
}

bool triangle_interior_empty(LatticePoint x, LatticePoint y) {
    long long area2 = lp_det(x, y);
    if (area2 < 0) area2 = -area2;
    if (area2 == 0) throw DomainError("degenerate triangle");
    // Pick: interior = area - boundary/2 + 1 with boundary the sum of the
    // three edge gcds, so emptiness reads 2*area + 2 = boundary.
    long long boundary = gcd_d(x) + gcd_d(y) + gcd_d(x + y);
    return area2 + 2 == boundary;
}

std::string lp_to_string(LatticePoint x) {
    return "(" + std::to_string(x.r) + "," + std::to_string(x.d) + ")";
}

} // namespace ehk
