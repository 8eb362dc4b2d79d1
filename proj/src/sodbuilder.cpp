#include "toricsod/sodbuilder.hpp"

#include <numeric>

#include "toricsod/hjfrac.hpp"

namespace toricsod {

std::vector<const Divisor*> Collection::flattened() const {
    std::vector<const Divisor*> out;
    for (const auto& b : blocks)
        for (const auto& d : b.bundles) out.push_back(&d);
    return out;
}

std::vector<mpz_class> standard_twist(const ResolvedSurface& s) {
    std::vector<mpz_class> b;
    const int n = s.n();
    for (int e : s.exceptional) {
        const RayLabel& l = s.labels[e];
        long long d = s.minus_self[e];
        bool last = (l.i == n && l.p == static_cast<int>(s.ds[n - 1].size()));
        b.push_back((last ? 3 : 2) - zz(d));
    }
    return b;
}

Collection build_collection(const ResolvedSurface& s) {
    Collection c;
    std::vector<mpz_class> twist = standard_twist(s);
    for (int i = 1; i <= s.n(); ++i) {
        Block b;
        b.i = i;
        Divisor base = s.zero_divisor();
        for (int k = 0; k < s.total_rays(); ++k)
            if (s.labels[k].i < i || (s.labels[k].i == i && s.labels[k].p == 0)) base[k] = 1;
        const int m = static_cast<int>(s.ds[i - 1].size());
        b.bundles.push_back(base);
        Divisor cur = base;
        for (int p = 1; p <= m; ++p) {
            cur[s.index_of(i, p)] += 1;
            b.bundles.push_back(cur);
        }
        for (size_t e = 0; e < s.exceptional.size(); ++e)
            if (s.labels[s.exceptional[e]].i == i) b.twist.push_back(twist[e]);
        c.blocks.push_back(b);
    }
    return c;
}

bool verify_adherence(const ResolvedSurface& s, const Collection& c) {
    if (static_cast<int>(c.blocks.size()) != s.n()) return false;
    for (const auto& b : c.blocks) {
        const auto& ds = s.ds[b.i - 1];
        const int m = static_cast<int>(ds.size());
        if (static_cast<int>(b.bundles.size()) != m + 1) return false;
        if (static_cast<int>(b.twist.size()) != m) return false;
        for (int p = 1; p <= m; ++p) {
            // structural step: L_{i,p} = L_{i,p-1} + E_{i,p}
            Divisor step = b.bundles[p];
            step[s.index_of(b.i, p)] -= 1;
            if (step != b.bundles[p - 1]) return false;
        }
        ChainDegrees cd = chain_degrees(s, b.bundles[0], b.i);
        for (int p = 1; p <= m; ++p) {
            mpz_class want = zz(ds[p - 1]) + b.twist[p - 1] - 2 + (p == 1 ? 1 : 0);
            if (cd.ls[p - 1] != want) return false;
        }
    }
    return true;
}

bool verify_semiorthogonality(const ResolvedSurface& s, const Collection& c) {
    std::vector<const Divisor*> flat = c.flattened();
    for (size_t t = 0; t < flat.size(); ++t)
        for (size_t u = 0; u < t; ++u) {
            // Ext^*(L_t, L_u) = H^*(L_u - L_t) must vanish entirely
            Divisor diff = *flat[u];
            for (int k = 0; k < s.total_rays(); ++k) diff[k] -= (*flat[t])[k];
            auto h = cohomology(s, diff);
            if (h[0] != 0 || h[1] != 0 || h[2] != 0) return false;
        }
    return true;
}

bool numeric_fullness(const ResolvedSurface& s, const Collection& c) {
    std::vector<const Divisor*> flat = c.flattened();
    const int nn = static_cast<int>(flat.size());
    if (nn != s.total_rays()) return false;  // must match rank G0 = 2 + (rays - 2)
    // Gram entry (t,u) is chi(L_t, L_u) = chi(L_u - L_t) by Riemann-Roch;
    // upper unitriangular (1 on the diagonal, 0 below) forces |det| = 1.
    for (int t = 0; t < nn; ++t)
        for (int u = 0; u <= t; ++u) {
            Divisor diff = *flat[u];
            for (int k = 0; k < s.total_rays(); ++k) diff[k] -= (*flat[t])[k];
            mpz_class chi = euler_characteristic(s, diff);
            if (chi != (t == u ? 1 : 0)) return false;
        }
    return true;
}

/* Intersection matrix of one exceptional chain: tridiagonal with diagonal
 * -d_{i,p} and off-diagonal 1; its determinant is +-r_i. */
static IntMatrix chain_matrix(const std::vector<long long>& ds) {
    const int m = static_cast<int>(ds.size());
    IntMatrix t(m, m);
    for (int p = 0; p < m; ++p) {
        t.at(p, p) = -zz(ds[p]);
        if (p + 1 < m) {
            t.at(p, p + 1) = 1;
            t.at(p + 1, p) = 1;
        }
    }
    return t;
}

UntwistResult untwist(const ResolvedSurface& s, const Collection& c) {
    const int n = s.n();
    const int ne = static_cast<int>(s.exceptional.size());
    const int mn = static_cast<int>(s.ds[n - 1].size());
    DeltaFunction target(ne);
    if (mn > 0) target = delta_function(s, n, mn);
    for (auto& x : target) x = -x;

    std::optional<Divisor> m;
    if (mn == 0) {
        m = s.zero_divisor();
    } else if (std::gcd(s.points[0].r, s.points[n - 1].r) == 1) {
        // canonical solution M = shift*E_{1,0} + corrections along chains 1 and n
        long long shift = crt_shift(s.points[0].r, s.points[n - 1].r);
        Divisor sol = s.zero_divisor();
        sol[s.index_of(1, 0)] = zz(shift);
        const int m1 = static_cast<int>(s.ds[0].size());
        if (m1 > 0) {
            std::vector<mpz_class> rhs(m1);
            rhs[0] = zz(-shift);  // cancel shift*E_{1,0}.E_{1,1}
            auto t1 = solve_integer(chain_matrix(s.ds[0]), rhs);
            check(t1.has_value(), "untwist: chain-1 correction must exist when shift = 0 mod r_1");
            for (int p = 1; p <= m1; ++p) sol[s.index_of(1, p)] = (*t1)[p - 1];
        }
        {
            std::vector<mpz_class> rhs(mn);
            rhs[mn - 1] = zz(-1 - shift);  // E_{1,0} also meets E_{n,m_n}
            auto tn = solve_integer(chain_matrix(s.ds[n - 1]), rhs);
            check(tn.has_value(), "untwist: chain-n correction must exist when shift = -1 mod r_n");
            for (int p = 1; p <= mn; ++p) sol[s.index_of(n, p)] = (*tn)[p - 1];
        }
        m = sol;
    } else {
        // generic integer solve over all boundary-divisor coefficients
        IntMatrix a(ne, s.total_rays());
        for (int e = 0; e < ne; ++e) {
            Divisor exc = s.zero_divisor();
            exc[s.exceptional[e]] = 1;
            for (int rho = 0; rho < s.total_rays(); ++rho) {
                Divisor dv = s.zero_divisor();
                dv[rho] = 1;
                a.at(e, rho) = intersection_number(s, dv, exc);
            }
        }
        auto x = solve_integer(a, target);
        if (!x) return UntwistResult{};
        m = Divisor(x->begin(), x->end());
    }

    // verify the defining degrees of M
    for (int e = 0; e < ne; ++e) {
        Divisor exc = s.zero_divisor();
        exc[s.exceptional[e]] = 1;
        check(intersection_number(s, *m, exc) == target[e],
              "untwist: solution violates the defining degrees");
    }

    UntwistResult out;
    out.ok = true;
    out.m = *m;
    Divisor kd = canonical_divisor(s);
    out.untwisted = c;
    for (auto& b : out.untwisted.blocks) {
        for (auto& bundle : b.bundles)
            for (int k = 0; k < s.total_rays(); ++k) bundle[k] += (*m)[k] + kd[k];
        for (auto& t : b.twist) t = 0;
    }
    check(verify_adherence(s, out.untwisted), "untwist: twisted-down collection not adherent");
    // M_{i,0}.E_{k,p} = delta_{i,k} delta_{p,1} + d_{k,p} - 2 for i <= k
    for (const auto& b : out.untwisted.blocks)
        for (int k = b.i; k <= n; ++k) {
            ChainDegrees cd = chain_degrees(s, b.bundles[0], k);
            for (size_t p = 1; p <= cd.ls.size(); ++p) {
                mpz_class want = zz(cd.ds[p - 1]) - 2 + ((k == b.i && p == 1) ? 1 : 0);
                check(cd.ls[p - 1] == want, "untwist: replacement degrees violated");
            }
        }
    return out;
}

Fan reorder_fan(const Fan& f, const Ordering& ord, std::vector<int>& origin) {
    const int n = f.size();
    std::vector<Ray> rays = f.rays;
    origin.resize(n);
    for (int j = 0; j < n; ++j) origin[j] = j;
    if (ord.reflect) {
        std::vector<Ray> r(n);
        std::vector<int> o(n);
        for (int j = 0; j < n; ++j) {
            const Ray& v = rays[(n - 1 - j) % n];
            r[j] = Ray{v.y, v.x};
            o[j] = origin[((n - 2 - j) % n + n) % n];
        }
        rays = r;
        origin = o;
    }
    int k = 0;
    if (ord.rotate) {
        k = ((*ord.rotate % n) + n) % n;
    } else {
        Fan g{rays};
        for (int j = 0; j < n; ++j)
            if (singularity_type(g, j).r == 1) {
                k = (j + 1) % n;  // put the first smooth point last
                break;
            }
    }
    if (k != 0) {
        std::vector<Ray> r(n);
        std::vector<int> o(n);
        for (int j = 0; j < n; ++j) {
            r[j] = rays[(j + k) % n];
            o[j] = origin[(j + k) % n];
        }
        rays = r;
        origin = o;
    }
    return validate_fan(rays);
}

SODReport sod_report(const Fan& f, const Ordering& ord) {
    SODReport rep;
    std::vector<int> origin0;
    rep.fan = reorder_fan(f, ord, origin0);
    for (int v : origin0) rep.origin.push_back(v + 1);
    rep.surf = minimal_resolution(rep.fan);
    rep.collection = build_collection(rep.surf);
    check(verify_adherence(rep.surf, rep.collection), "sod_report: base collection not adherent");
    IPData ip = ip_cokernel(rep.surf);
    rep.br = ip.br;
    rep.beta = standard_beta(rep.surf, ip);
    rep.untwist_data = untwist(rep.surf, rep.collection);
    rep.untwisted = rep.untwist_data.ok;
    rep.perf_valid = true;
    for (int j = 1; j < rep.surf.n(); ++j)
        rep.perf_valid = rep.perf_valid && rep.surf.points[j].gorenstein;
    for (int j = 0; j < rep.surf.n(); ++j) {
        SODBlock b;
        b.point = origin0[j] + 1;
        b.type = rep.surf.points[j];
        b.ds = rep.surf.ds[j];
        b.twist = rep.collection.blocks[j].twist;
        b.algebra = kk_algebra(b.type.r, b.type.a);
        rep.blocks.push_back(b);
    }
    return rep;
}

}  // namespace toricsod
