#include "toricsod/brauer_groth.hpp"

namespace toricsod {

DeltaFunction delta_function(const ResolvedSurface& s, int i, int p) {
    DeltaFunction f(s.exceptional.size());
    for (size_t e = 0; e < s.exceptional.size(); ++e)
        if (s.labels[s.exceptional[e]] == RayLabel{i, p}) {
            f[e] = 1;
            return f;
        }
    fail("InternalCheck", "delta_function: no exceptional curve (" + std::to_string(i) + "," +
                              std::to_string(p) + ")");
}

static FgAbelianGroup resolved_class_group(const ResolvedSurface& s) {
    IntMatrix rel(s.total_rays(), 2);
    for (int k = 0; k < s.total_rays(); ++k) {
        rel.at(k, 0) = zz(s.rays[k].x);
        rel.at(k, 1) = zz(s.rays[k].y);
    }
    FgAbelianGroup cl = cokernel(rel);
    check(cl.invariant_factors().empty() && cl.free_rank() == s.total_rays() - 2,
          "resolved surface must have free class group of rank (rays - 2)");
    return cl;
}

IPData ip_cokernel(const ResolvedSurface& s) {
    FgAbelianGroup cl = resolved_class_group(s);
    IntMatrix lifted = cl.lift_free_basis();
    const int rank = cl.free_rank();
    const int ne = static_cast<int>(s.exceptional.size());
    IPData d{IntMatrix(ne, rank), {}, FgAbelianGroup(IntMatrix(ne, 0))};
    for (int j = 0; j < rank; ++j) d.class_basis.push_back(lifted.column(j));
    for (int e = 0; e < ne; ++e) {
        Divisor exc = s.zero_divisor();
        exc[s.exceptional[e]] = 1;
        for (int j = 0; j < rank; ++j)
            d.ip.at(e, j) = intersection_number(s, d.class_basis[j], exc);
    }
    d.br = cokernel(d.ip);
    return d;
}

GroupElement brauer_class_of(const IPData& d, const DeltaFunction& f) {
    return d.br.project(f);
}

GroupElement standard_beta(const ResolvedSurface& s, const IPData& d) {
    const int n = s.n();
    const int mn = static_cast<int>(s.ds[n - 1].size());
    if (mn == 0) return d.br.zero();
    return brauer_class_of(d, delta_function(s, n, mn));
}

BetaFamily beta_relations(const ResolvedSurface& s, const IPData& d) {
    BetaFamily fam;
    for (int i = 1; i <= s.n(); ++i) {
        const int m = static_cast<int>(s.ds[i - 1].size());
        if (m == 0) {
            fam.beta.push_back(d.br.zero());
            fam.beta_prime.push_back(d.br.zero());
        } else {
            fam.beta.push_back(brauer_class_of(d, delta_function(s, i, m)));
            fam.beta_prime.push_back(brauer_class_of(d, delta_function(s, i, 1)));
        }
    }
    return fam;
}

mpz_class mukai_pairing(const ResolvedSurface& s, const MukaiVector& v, const MukaiVector& w) {
    return v.rank * w.chi + w.rank * v.chi - intersection_number(s, v.cls, w.cls);
}

FgAbelianGroup g0_untwisted(const Fan& f) {
    const int n = f.size();
    IntMatrix rel(2 + n, 2);
    for (int i = 0; i < n; ++i) {
        rel.at(2 + i, 0) = zz(f.rays[i].x);
        rel.at(2 + i, 1) = zz(f.rays[i].y);
    }
    return cokernel(rel);
}

FgAbelianGroup g0_twisted(const ResolvedSurface& s, const std::vector<mpz_class>& twist) {
    const int ne = static_cast<int>(s.exceptional.size());
    check(static_cast<int>(twist.size()) == ne, "g0_twisted: twist length mismatch");
    FgAbelianGroup cl = resolved_class_group(s);
    const int rank = cl.free_rank();
    IntMatrix rel(1 + rank + 1, ne);
    for (int e = 0; e < ne; ++e) {
        std::vector<mpz_class> amb(s.total_rays());
        amb[s.exceptional[e]] = 1;
        GroupElement cls = cl.project(amb);
        for (int j = 0; j < rank; ++j) rel.at(1 + j, e) = cls.free_part[j];
        rel.at(1 + rank, e) = twist[e];
    }
    return cokernel(rel);
}

bool g0_ext1_check(const ResolvedSurface& s, const IPData& d, const std::vector<mpz_class>& twist) {
    FgAbelianGroup twisted = g0_twisted(s, twist);
    GroupElement beta = brauer_class_of(d, twist);
    FgAbelianGroup quotient = quotient_by_element(d.br, beta);
    return twisted.invariant_factors() == quotient.invariant_factors();
}

}  // namespace toricsod
