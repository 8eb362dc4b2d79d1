#include "toricsod/generators.hpp"

#include <numeric>

namespace toricsod {

bool reflexive_pushforward_test(const ChainDegrees& c) {
    const int m = static_cast<int>(c.ds.size());
    if (m == 0) return true;
    mpz_class sum = 0;
    for (int j = 0; j < m; ++j) {
        // degree of L(D) on E_j, D the sum of the chain curves
        mpz_class t = c.ls[j] + 2 - (j == 0 ? 1 : 0) - (j == m - 1 ? 1 : 0) - zz(c.ds[j]);
        if (t > 0) return false;
        sum += t;
    }
    return sum < 0;
}

bool higher_pushforward_vanishes(const ChainDegrees& c) {
    for (size_t j = 0; j < c.ds.size(); ++j)
        if (c.ls[j] < zz(c.ds[j]) - 2) return false;
    return true;
}

bool descends_test(const ChainDegrees& c) {
    for (const mpz_class& l : c.ls)
        if (l != 0) return false;
    return true;
}

GeneratorSet generator_classes(const ResolvedSurface& s) {
    Collection col = build_collection(s);
    UntwistResult ut = untwist(s, col);
    if (!ut.ok)
        fail("ObstructionPresent",
             "the Brauer obstruction is nonzero, so no untwisting bundle exists and "
             "the reflexive generators are not defined");
    FgAbelianGroup cl = class_group(s.base);

    GeneratorSet g;
    g.c = pushforward_class(s, cl, ut.m);
    for (const Block& b : ut.untwisted.blocks) {
        const Divisor& base = b.bundles[0];  // M_{i,0} = L_{i,0} + M + K
        g.classes.push_back(pushforward_class(s, cl, base));
        g.ranks.push_back(s.points[b.i - 1].r);
        std::vector<bool> lf, rfl;
        for (int j = 1; j <= s.n(); ++j) {
            ChainDegrees cd = chain_degrees(s, base, j);
            lf.push_back(descends_test(cd));
            rfl.push_back(reflexive_pushforward_test(cd));
        }
        g.locally_free_at.push_back(lf);
        g.reflexive_at.push_back(rfl);
    }
    return g;
}

std::array<long long, 3> wpp_generators(long long w1, long long w2, long long w3) {
    const long long w[3] = {w1, w2, w3};
    for (long long wi : w)
        if (wi < 1) fail("InvalidWeights", "weights must be positive");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(w[i], w[j]) != 1) fail("InvalidWeights", "weights must be pairwise coprime");
    long long s = crt_shift(w1, w3);
    return {s * w2 - w1 - w3, s * w2 - w1, s * w2};
}

mpz_class rank_one_degree(const GroupElement& positive_ref, const GroupElement& x) {
    check(positive_ref.free_part.size() == 1 && x.free_part.size() == 1,
          "rank_one_degree: class group is not free of rank 1");
    check(positive_ref.free_part[0] != 0, "rank_one_degree: reference class has degree 0");
    return positive_ref.free_part[0] > 0 ? x.free_part[0] : -x.free_part[0];
}

}  // namespace toricsod
