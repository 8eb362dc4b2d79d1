#pragma once
#include <array>

#include "toricsod/hjfrac.hpp"
#include "toricsod/sodbuilder.hpp"

namespace toricsod {

/* Predicates on the chain data of one singular point (digits d_j plus degrees
 * l_j = L.E_j of a line bundle L on the resolution), deciding properties of
 * the pushforward of L to the singular surface.  All three are the sufficient
 * degree criteria; borderline cases simply come out false ("not certified"),
 * never guessed. */

/* The pushforward is a reflexive rank-1 sheaf at the point provided
 * L(D).E_j <= 0 for every j and sum_j L(D).E_j < 0, where D = E_1 + ... + E_m
 * so that D.E_j = 2 - delta_{j,1} - delta_{j,m} - d_j.  The empty chain
 * (smooth point) counts as reflexive. */
bool reflexive_pushforward_test(const ChainDegrees& c);

/* R^1 of the pushforward vanishes at the point when L - K is nef along the
 * chain: l_j >= d_j - 2 for every j.  True for the empty chain. */
bool higher_pushforward_vanishes(const ChainDegrees& c);

/* L descends through the point: all chain degrees vanish, so the pushforward
 * is an (invertible hence) locally free sheaf of rank 1 there.  True for the
 * empty chain. */
bool descends_test(const ChainDegrees& c);

/* The explicit rank-1 reflexive generators attached to the untwisted
 * collection: C is the pushforward class of the untwisting bundle M and
 *     R_i = K_X + C + C_1 + ... + C_i   in Cl(X),
 * the pushforward class of the i-th block's base bundle M_{i,0}.  ranks[i]
 * is r_i, the dimension of the block's singularity algebra.  The flag
 * tables are indexed [generator i][point j] (both 0-based) and certify,
 * via the degree predicates on the actual chain degrees of M_{i,0}, that
 * the generator is locally free / reflexive at the point x_{j+1}. */
struct GeneratorSet {
    GroupElement c;
    std::vector<GroupElement> classes;
    std::vector<long long> ranks;
    std::vector<std::vector<bool>> locally_free_at;
    std::vector<std::vector<bool>> reflexive_at;
};

/* Requires Br(X) = 0; throws ObstructionPresent when the collection cannot
 * be untwisted. */
GeneratorSet generator_classes(const ResolvedSurface& s);

/* Closed-form degrees (deg R_1, deg R_2, deg R_3) of the generators on the
 * weighted projective plane P(w1, w2, w3), taken in the order the weights
 * are given: with s = crt_shift(w1, w3) and boundary degrees (w2, w3, w1),
 *     (s w2 - w1 - w3,  s w2 - w1,  s w2).
 * Agrees with generator_classes on minimal_resolution(wpp_fan(w1,w2,w3)). */
std::array<long long, 3> wpp_generators(long long w1, long long w2, long long w3);

/* Degree of x in a free rank-1 class group whose coordinate sign is fixed by
 * declaring the reference class (e.g. a boundary divisor of known positive
 * degree) positive. */
mpz_class rank_one_degree(const GroupElement& positive_ref, const GroupElement& x);

}  // namespace toricsod
