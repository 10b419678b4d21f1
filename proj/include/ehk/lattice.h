#pragma once

#include <string>

namespace ehk {

// Integer point of the rank-degree plane. The first coordinate is the rank
// direction (Fock degree shift of the realized operator), the second the
// degree direction.
struct LatticePoint {
    int r = 0;
    int d = 0;

    bool is_zero() const { return r == 0 && d == 0; }
    bool operator==(const LatticePoint& o) const { return r == o.r && d == o.d; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const { return r != o.r ? r < o.r : d < o.d; }
    LatticePoint operator+(const LatticePoint& o) const { return {r + o.r, d + o.d}; }
    LatticePoint operator-(const LatticePoint& o) const { return {r - o.r, d - o.d}; }
    LatticePoint operator-() const { return {-r, -d}; }
};

inline LatticePoint operator*(int k, const LatticePoint& x) { return {k * x.r, k * x.d}; }

// d(x): gcd of the absolute coordinates; zero only at the origin.
int gcd_d(LatticePoint x);
// Determinant of the 2x2 matrix with rows x, y.
long long lp_det(LatticePoint x, LatticePoint y);
// +1 on the half plane {r > 0 or (r = 0, d > 0)}, -1 on its negative;
// DomainError at the origin.
int eps(LatticePoint x);
// sgn det(x, y); DomainError when x, y are collinear.
int eps_pair(LatticePoint x, LatticePoint y);
// Exponent of the central element attached to the minimal-triangle bracket
// of (x, y): (eps_x x + eps_y y - eps_{x+y}(x+y))/2 weighted by eps_x or
// eps_y according to the orientation of the pair.
LatticePoint alpha_vec(LatticePoint x, LatticePoint y);
// True when the triangle (0, x, x+y) has no interior lattice point, by
// Pick's theorem on the boundary gcd counts; DomainError on a degenerate
// (collinear) triangle.
bool triangle_interior_empty(LatticePoint x, LatticePoint y);

std::string lp_to_string(LatticePoint x);

} // namespace ehk
