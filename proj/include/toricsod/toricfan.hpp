#pragma once
#include <vector>

#include "toricsod/abelian.hpp"

namespace toricsod {

struct Ray {
    long long x = 0, y = 0;
    bool operator==(const Ray& o) const { return x == o.x && y == o.y; }
};

inline long long det2(const Ray& u, const Ray& v) { return u.x * v.y - u.y * v.x; }

/* A complete fan in Z^2 given by its rays in counterclockwise cyclic order;
 * cone i is spanned by (v_i, v_{i+1}) indices mod n.  Each cone corresponds
 * to a torus-fixed point x_i of the projective toric surface. */
struct Fan {
    std::vector<Ray> rays;
    int size() const { return static_cast<int>(rays.size()); }
    const Ray& ray(int i) const { return rays[((i % size()) + size()) % size()]; }
};

/* Cyclic quotient type of a torus-fixed point: the cone is lattice-equivalent
 * to the cone over 1/r(1, a).  Smooth points are (1, 0). */
struct PointData {
    long long r = 1, a = 0;
    bool gorenstein = true;
};

/* Validates rays as a complete counterclockwise fan.  Errors (all kind-tagged):
 *   TooFewRays            n < 3
 *   NonPrimitiveRay       gcd(x, y) != 1 (or a zero ray)
 *   NonConvexOrClockwise  det(v_i, v_{i+1}) <= 0 for some i
 *   WrongWinding          the rays wrap the origin more than once */
Fan validate_fan(const std::vector<Ray>& rays);

/* Type of the fixed point on cone i (0-based). */
PointData singularity_type(const Fan& f, int i);

/* Fan of the weighted projective plane P(w1, w2, w3), weights positive and
 * pairwise coprime, normalised so that the point x_i has order w_i and the
 * boundary divisors C_1, C_2, C_3 have classes of degree w_2, w_3, w_1. */
Fan wpp_fan(long long w1, long long w2, long long w3);

/* Divisor class group Cl(X) = Z^n / (column span of the 2 relation columns
 * given by the ray coordinates). */
FgAbelianGroup class_group(const Fan& f);

/* Cl(X) together with the rank of Pic(X) = ker(rays: Z^n -> Z^2), which is
 * n - 2 for every complete fan. */
struct ClassGroups {
    FgAbelianGroup cl;
    int pic_rank = 0;
};
ClassGroups divisor_class_groups(const Fan& f);

/* Brauer group Br(X) = Z^2 / (span of the rays as columns); its order equals
 * gcd of the fixed-point orders. */
FgAbelianGroup brauer_from_rays(const Fan& f);

/* Class [C_i] of the i-th boundary divisor in Cl(X) (0-based i). */
GroupElement ray_divisor_class(const Fan& f, const FgAbelianGroup& cl, int i);

}  // namespace toricsod
