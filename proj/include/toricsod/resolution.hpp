#pragma once
#include <array>
#include <vector>

#include "toricsod/toricfan.hpp"

namespace toricsod {

/* Label of a ray of the resolved fan: block i (1-based, one block per fixed
 * point of the base surface), position p.  p = 0 is the strict transform of
 * the base ray v_i; p = 1..m_i walk the exceptional chain over x_i, with
 * E_{i,1} adjacent to E_{i,0}. */
struct RayLabel {
    int i = 0, p = 0;
    bool operator==(const RayLabel& o) const { return i == o.i && p == o.p; }
};

/* Divisors on the resolved surface are integer vectors over its rays. */
using Divisor = std::vector<mpz_class>;

/* Minimal resolution X~ -> X of the toric surface of a complete fan:
 * every singular cone is subdivided along the bounded part of the convex
 * hull of its nonzero lattice points. Rays are kept in counterclockwise
 * cyclic order starting at v_1, so the labels read
 * (1,0),(1,1),..,(1,m_1),(2,0),.. and exceptional curves inherit the
 * flattened order (i asc, p asc). */
struct ResolvedSurface {
    Fan base;                             // the fan that was resolved
    std::vector<Ray> rays;                // refined fan, cyclic CCW
    std::vector<RayLabel> labels;         // parallel to rays
    std::vector<long long> minus_self;    // d(rho) = -E_rho^2 per refined ray
    std::vector<PointData> points;        // per base point x_i
    std::vector<std::vector<long long>> ds;  // chain digits d_{i,1..m_i}
    std::vector<int> exceptional;         // ray indices with p >= 1, flattened order

    int n() const { return base.size(); }
    int total_rays() const { return static_cast<int>(rays.size()); }
    int index_of(int i, int p) const;     // 1-based block i
    Divisor zero_divisor() const { return Divisor(rays.size()); }
};

ResolvedSurface minimal_resolution(const Fan& f);

/* Intersection numbers on the smooth surface: boundary divisors meet by
 * adjacency in the cyclic ray order, E^2 = -minus_self. */
mpz_class intersection_number(const ResolvedSurface& s, const Divisor& a, const Divisor& b);

Divisor canonical_divisor(const ResolvedSurface& s);  // -sum of all boundary divisors

/* (h^0, h^1, h^2) of O(D): h^0 and h^2 by exact lattice-point counts of the
 * (rational) section polytopes, h^1 from Riemann-Roch.  Throws on a negative
 * h^1, which would signal an inconsistency. */
std::array<mpz_class, 3> cohomology(const ResolvedSurface& s, const Divisor& d);

mpz_class euler_characteristic(const ResolvedSurface& s, const Divisor& d);  // Riemann-Roch

/* Class of the pushforward of D along the resolution: forget exceptional
 * coefficients and project the strict-transform part into Cl(X). */
GroupElement pushforward_class(const ResolvedSurface& s, const FgAbelianGroup& cl_base,
                               const Divisor& d);

/* Degrees of a divisor along one exceptional chain, with the chain's digits:
 * the data consumed by the reflexivity/descent predicates. */
struct ChainDegrees {
    std::vector<long long> ds;
    std::vector<mpz_class> ls;
};
ChainDegrees chain_degrees(const ResolvedSurface& s, const Divisor& d, int i);  // 1-based i

}  // namespace toricsod
