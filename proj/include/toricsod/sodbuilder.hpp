#pragma once
#include <optional>

#include "toricsod/brauer_groth.hpp"
#include "toricsod/kkalg.hpp"

namespace toricsod {

/* One block of the exceptional-collection data over the point x_i: the line
 * bundles L_{i,0},...,L_{i,m_i} on the resolution and the twist degrees
 * b_{i,1..m_i} making the block adherent.  The bundles are
 *   L_{i,0} = O(sum_{j<i} (E_{j,0} + chain_j) + E_{i,0}),
 *   L_{i,p} = L_{i,0}(E_{i,1} + ... + E_{i,p}). */
struct Block {
    int i = 0;  // 1-based
    std::vector<Divisor> bundles;
    std::vector<mpz_class> twist;
};

struct Collection {
    std::vector<Block> blocks;
    std::vector<const Divisor*> flattened() const;
};

Collection build_collection(const ResolvedSurface& s);

/* Twists on the exceptional set, flattened: b_{i,p} = 2 - d_{i,p} except
 * b_{n,m_n} = 3 - d_{n,m_n} (second Koszul shift on the very last curve). */
std::vector<mpz_class> standard_twist(const ResolvedSurface& s);

/* Adherence of each block: degrees of the base bundle along its own chain
 * are d_p + b_p - 2, plus 1 on the first curve, and the higher bundles step
 * through the chain one curve at a time. */
bool verify_adherence(const ResolvedSurface& s, const Collection& c);

/* Ext^*(later, earlier) = 0 for every pair in the flattened order, checked
 * as exact cohomology vanishing of the difference line bundles. */
bool verify_semiorthogonality(const ResolvedSurface& s, const Collection& c);

/* Numerical fullness certificate: the collection has as many members as the
 * rank of G_0 of the resolution (= number of rays), and the Gram matrix of
 * Euler pairings chi(L_i, L_j) = 1 + (L_j-L_i).(L_j-L_i-K)/2 is upper
 * unitriangular in collection order, hence unimodular, so the classes form a
 * basis of the Grothendieck lattice of the resolution. */
bool numeric_fullness(const ResolvedSurface& s, const Collection& c);

/* Untwisting bundle M: a line bundle with M.E_{i,p} = -delta_{(n,m_n)};
 * exists iff Br(X) = 0.  The replacement blocks M_{i,p} = L_{i,p} + M + K
 * form an adherent collection with all twists zero.  When the last chain is
 * empty M = O; when gcd(r_1, r_n) = 1 the canonical shifted solution
 * M = s E_{1,0} + (chain corrections) with s = crt_shift(r_1, r_n) is used,
 * so the pushforward class of M is s C_1; otherwise a generic integer solve
 * picks the deterministic particular solution. */
struct UntwistResult {
    bool ok = false;
    Divisor m;
    Collection untwisted;
};
UntwistResult untwist(const ResolvedSurface& s, const Collection& c);

/* Ordering control for reports: reflect (reverse the cyclic order by the
 * coordinate swap) is applied first, then rotation by k places (the block
 * sequence becomes x_{k+1},...,x_n,x_1,...,x_k).  Without an explicit
 * rotation the fan is rotated so that the lowest-index smooth point comes
 * last (identity when the surface is smooth-point-free). */
struct Ordering {
    std::optional<int> rotate;
    bool reflect = false;
};

/* The reordered fan; origin[j] is the 0-based index, in the input fan, of
 * the point that became point j. */
Fan reorder_fan(const Fan& f, const Ordering& ord, std::vector<int>& origin);

struct SODBlock {
    int point = 0;  // 1-based index of the block's point in the input fan
    PointData type;
    std::vector<long long> ds;
    std::vector<mpz_class> twist;
    KKPresentation algebra;
};

/* Everything the semiorthogonal-decomposition report exposes:
 *   D^b(X, beta) = < D^b(K_1), ..., D^b(K_n) >,  K_i = K(r_i, a_i),
 * with beta the Brauer obstruction of the chosen ordering, untwisted = true
 * when the obstruction vanishes (equivalently the collection untwists), and
 * perf_valid = true when all blocks after the first sit over Gorenstein
 * points, so the same sequence decomposes the category of perfect
 * complexes. */
struct SODReport {
    Fan fan;                   // reordered fan the report is computed on
    std::vector<int> origin;   // per block: 1-based point index in the input fan
    ResolvedSurface surf;
    Collection collection;
    std::vector<SODBlock> blocks;
    FgAbelianGroup br;
    GroupElement beta;
    bool untwisted = false;
    bool perf_valid = false;
    UntwistResult untwist_data;
};

SODReport sod_report(const Fan& f, const Ordering& ord = {});

}  // namespace toricsod
