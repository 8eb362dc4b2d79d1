#pragma once
#include <vector>

#include "toricsod/resolution.hpp"

namespace toricsod {

/* Functions on the exceptional set, flattened in chain order (i asc, p asc);
 * delta functions are the coordinate vectors. */
using DeltaFunction = std::vector<mpz_class>;

DeltaFunction delta_function(const ResolvedSurface& s, int i, int p);  // 1-based

/* The intersection-pairing map IP : Cl(X~) -> Z^{exceptional},
 * L |-> (L . E_{i,p})_{i,p}, presented on a lifted basis of the free group
 * Cl(X~), together with its cokernel: the Brauer group Br(X) of the base
 * surface, with B the projection Z^{exceptional} ->> Br(X). */
struct IPData {
    IntMatrix ip;                     // (#exceptional) x (rank Cl(X~)) columns = IP of basis
    std::vector<Divisor> class_basis; // divisor representatives of that basis
    FgAbelianGroup br;                // cokernel(ip), ambient Z^{exceptional}
};

IPData ip_cokernel(const ResolvedSurface& s);

/* B(f): the class of a function on the exceptional set in Br(X). */
GroupElement brauer_class_of(const IPData& d, const DeltaFunction& f);

/* beta = B(delta_{E_{n, m_n}}), the obstruction class of the standard
 * ordering (zero when the last point is smooth).  It generates Br(X). */
GroupElement standard_beta(const ResolvedSurface& s, const IPData& d);

/* beta_i and beta_i' for every point: the obstruction classes of the linear
 * orders that put x_i last with the standard / opposite cyclic orientation:
 * beta_i = B(delta_{E_{i,m_i}}), beta_i' = B(delta_{E_{i,1}}); both are zero
 * for smooth x_i.  They satisfy beta_i = a_i beta_i' and
 * beta_{i+1} = -a_{i+1} beta_i (indices cyclic, a = 0 read as the smooth case
 * giving the zero class). */
struct BetaFamily {
    std::vector<GroupElement> beta, beta_prime;
};
BetaFamily beta_relations(const ResolvedSurface& s, const IPData& d);

/* Mukai vectors (rank, class on X~, Euler characteristic) with the pairing
 * <(r,D,s),(r',D',s')> = r s' + r' s - D.D'. */
struct MukaiVector {
    mpz_class rank;
    Divisor cls;
    mpz_class chi;
};
mpz_class mukai_pairing(const ResolvedSurface& s, const MukaiVector& v, const MukaiVector& w);

/* Grothendieck group of the base surface: G0(X) = Z^2 + Cl(X). */
FgAbelianGroup g0_untwisted(const Fan& f);

/* Twisted variant: (Z + Cl(X~) + Z) / <(0, [E_{i,p}], b_{i,p})>, one relation
 * per exceptional curve, where b is a twist vector on the exceptional set. */
FgAbelianGroup g0_twisted(const ResolvedSurface& s, const std::vector<mpz_class>& twist);

/* Torsion of the twisted group must match Br(X)/<B(twist)>: the twist vector
 * induces the Brauer class B(twist) (twists differing by IP-images give the
 * same class), and the torsion of the twisted Grothendieck group is the
 * quotient of Br(X) by it.  For the standard twist B(twist) = beta and the
 * quotient vanishes; for the zero twist it is all of Br(X). */
bool g0_ext1_check(const ResolvedSurface& s, const IPData& d, const std::vector<mpz_class>& twist);

}  // namespace toricsod
