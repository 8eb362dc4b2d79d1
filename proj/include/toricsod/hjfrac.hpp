#pragma once
#include <utility>
#include <vector>

namespace toricsod {

/* Hirzebruch-Jung (negative-regular) continued fractions.  A cyclic
 * quotient singularity of type (r, a) — the cone over 1/r(1, a) — has
 *     r/a = d_1 - 1/(d_2 - 1/(... - 1/d_m)),   all d_p >= 2,
 * and the d_p are the self-intersection numbers (negated) of the chain of
 * exceptional curves in its minimal resolution. */

/* Digits of r/a.  Requires r >= 1 and, for r >= 2, 0 < a < r coprime to r.
 * The smooth type (1, 0) yields the empty expansion. */
std::vector<long long> hj_expand(long long r, long long a);

/* Determinant of the tridiagonal matrix with diagonal ds and off-diagonal
 * entries 1 (the continuant).  tridet({}) = 1, tridet(hj_expand(r,a)) = r,
 * and the tail continuant recovers a. */
long long tridet(const std::vector<long long>& ds);

/* Evaluate digits back to the type: (tridet(ds), tridet(tail of ds)).
 * Inverse of hj_expand; the empty expansion evaluates to (1, 0). */
std::pair<long long, long long> hj_eval(const std::vector<long long>& ds);

/* Digits of r/(r-a); these are the socle exponents c_j of the singularity
 * algebra K(r, a).  Requires r >= 2. */
std::vector<long long> dual_fraction(long long r, long long a);

/* (r, a') with a*a' = 1 mod r, normalised to 0 <= a' < r; the type of the
 * same cone read with the opposite orientation. inverse_type(1,0) = (1,0). */
std::pair<long long, long long> inverse_type(long long r, long long a);

/* A cyclic quotient point is Gorenstein exactly for a = r-1 (A-type) or r=1. */
bool is_gorenstein(long long r, long long a);

/* Least s >= 0 with s = 0 mod r1 and s = -1 mod rn; requires gcd(r1,rn)=1.
 * This is the twist shift that simultaneously trivialises the untwisting
 * bundle at the first point and shifts it correctly at the last one. */
long long crt_shift(long long r1, long long rn);

}  // namespace toricsod
