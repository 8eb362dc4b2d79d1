#include "toricsod/resolution.hpp"

#include <algorithm>

#include "toricsod/hjfrac.hpp"

namespace toricsod {

int ResolvedSurface::index_of(int i, int p) const {
    for (int k = 0; k < total_rays(); ++k)
        if (labels[k].i == i && labels[k].p == p) return k;
    fail("InternalCheck", "no ray labelled (" + std::to_string(i) + "," + std::to_string(p) + ")");
}

static long long floor_div_ll(long long n, long long d) {
    long long q = n / d, r = n % d;
    return (r != 0 && ((r < 0) != (d < 0))) ? q - 1 : q;
}

/* Interior rays of the cone (v, w) with det(v, w) = r > 1: the first hull
 * ray u_1 is the unique lattice vector with det(v, u_1) = 1 and
 * det(u_1, w) in [0, r); the rest follow the Hirzebruch-Jung recursion
 * u_{p+1} = d_p u_p - u_{p-1}.  Landing exactly on w after m steps
 * cross-checks the digits against the geometry. */
static std::vector<Ray> resolve_cone(const Ray& v, const Ray& w, const std::vector<long long>& ds) {
    long long r = det2(v, w);
    if (r == 1) return {};
    // u* with det(v, u*) = 1 via extended gcd on v
    long long a0 = v.x, b0 = v.y, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b0 != 0) {
        long long t = a0 / b0;
        long long tmp = a0 - t * b0; a0 = b0; b0 = tmp;
        tmp = x0 - t * x1; x0 = x1; x1 = tmp;
        tmp = y0 - t * y1; y0 = y1; y1 = tmp;
    }
    if (a0 < 0) { a0 = -a0; x0 = -x0; y0 = -y0; }
    check(a0 == 1, "resolve_cone: ray is not primitive");
    Ray ustar{-y0, x0};  // det(v, u*) = x0*v.x + y0*v.y = 1
    long long alpha = det2(ustar, w);
    long long t = -floor_div_ll(alpha, r);
    Ray u1{ustar.x + t * v.x, ustar.y + t * v.y};
    check(det2(v, u1) == 1 && det2(u1, w) >= 0 && det2(u1, w) < r,
          "resolve_cone: first hull ray misplaced");
    std::vector<Ray> interior;
    Ray prev = v, cur = u1;
    for (long long d : ds) {
        interior.push_back(cur);
        Ray next{d * cur.x - prev.x, d * cur.y - prev.y};
        prev = cur;
        cur = next;
    }
    check(cur == w, "resolve_cone: hull walk did not terminate on the far ray");
    return interior;
}

ResolvedSurface minimal_resolution(const Fan& f) {
    ResolvedSurface s;
    s.base = f;
    const int n = f.size();
    for (int i = 0; i < n; ++i) {
        PointData pd = singularity_type(f, i);
        s.points.push_back(pd);
        s.ds.push_back(hj_expand(pd.r, pd.a));
        s.rays.push_back(f.rays[i]);
        s.labels.push_back(RayLabel{i + 1, 0});
        std::vector<Ray> interior = resolve_cone(f.ray(i), f.ray(i + 1), s.ds.back());
        for (size_t p = 0; p < interior.size(); ++p) {
            s.rays.push_back(interior[p]);
            s.labels.push_back(RayLabel{i + 1, static_cast<int>(p) + 1});
        }
    }
    const int nn = s.total_rays();
    for (int k = 0; k < nn; ++k) {
        const Ray& prev = s.rays[(k + nn - 1) % nn];
        const Ray& cur = s.rays[k];
        const Ray& next = s.rays[(k + 1) % nn];
        // prev + next = c * cur on a smooth complete surface; c = -E^2
        long long sx = prev.x + next.x, sy = prev.y + next.y;
        long long c;
        if (cur.x != 0) {
            check(sx % cur.x == 0, "minimal_resolution: neighbour sum not collinear");
            c = sx / cur.x;
        } else {
            check(sy % cur.y == 0, "minimal_resolution: neighbour sum not collinear");
            c = sy / cur.y;
        }
        check(c * cur.x == sx && c * cur.y == sy,
              "minimal_resolution: neighbour sum not collinear");
        s.minus_self.push_back(c);
        if (s.labels[k].p >= 1) {
            check(c == s.ds[s.labels[k].i - 1][s.labels[k].p - 1] && c >= 2,
                  "minimal_resolution: exceptional self-intersection disagrees with digits");
            s.exceptional.push_back(k);
        }
    }
    return s;
}

mpz_class intersection_number(const ResolvedSurface& s, const Divisor& a, const Divisor& b) {
    const int nn = s.total_rays();
    check(static_cast<int>(a.size()) == nn && static_cast<int>(b.size()) == nn,
          "intersection_number: divisor length mismatch");
    mpz_class total = 0;
    for (int k = 0; k < nn; ++k) {
        if (a[k] == 0) continue;
        mpz_class row = b[(k + nn - 1) % nn] + b[(k + 1) % nn] - zz(s.minus_self[k]) * b[k];
        total += a[k] * row;
    }
    return total;
}

Divisor canonical_divisor(const ResolvedSurface& s) {
    return Divisor(s.total_rays(), mpz_class(-1));
}

mpz_class euler_characteristic(const ResolvedSurface& s, const Divisor& d) {
    Divisor k = canonical_divisor(s);
    mpz_class dd = intersection_number(s, d, d);
    mpz_class dk = intersection_number(s, d, k);
    mpz_class num = dd - dk;
    check(num % 2 == 0, "euler_characteristic: D(D-K) must be even");
    return 1 + num / 2;
}

/* Lattice points of P = {m : <m, v_rho> >= -a_rho}.  The fan is complete,
 * so P is a compact (possibly empty or degenerate) rational polygon; its
 * vertices arise from pairs of constraints, giving exact rational bounds
 * for a brute-force scan. */
static mpz_class count_sections(const ResolvedSurface& s, const Divisor& a) {
    const int nn = s.total_rays();
    std::vector<mpq_class> vx, vy;
    for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j) {
            long long det = det2(s.rays[i], s.rays[j]);
            if (det == 0) continue;
            // <m, v_i> = -a_i, <m, v_j> = -a_j
            mpq_class mx(mpz_class(-a[i] * zz(s.rays[j].y) + a[j] * zz(s.rays[i].y)), zz(det));
            mpq_class my(mpz_class(-a[j] * zz(s.rays[i].x) + a[i] * zz(s.rays[j].x)), zz(det));
            mx.canonicalize();
            my.canonicalize();
            bool feasible = true;
            for (int k = 0; k < nn && feasible; ++k)
                feasible = (mx * zz(s.rays[k].x) + my * zz(s.rays[k].y) + a[k] >= 0);
            if (feasible) {
                vx.push_back(mx);
                vy.push_back(my);
            }
        }
    if (vx.empty()) return 0;
    auto floor_q = [](const mpq_class& q) {
        mpz_class z;
        mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return z;
    };
    auto ceil_q = [](const mpq_class& q) {
        mpz_class z;
        mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return z;
    };
    mpz_class x0 = ceil_q(*std::min_element(vx.begin(), vx.end()));
    mpz_class x1 = floor_q(*std::max_element(vx.begin(), vx.end()));
    mpz_class y0 = ceil_q(*std::min_element(vy.begin(), vy.end()));
    mpz_class y1 = floor_q(*std::max_element(vy.begin(), vy.end()));
    mpz_class count = 0;
    for (mpz_class x = x0; x <= x1; ++x)
        for (mpz_class y = y0; y <= y1; ++y) {
            bool inside = true;
            for (int k = 0; k < nn && inside; ++k)
                inside = (x * zz(s.rays[k].x) + y * zz(s.rays[k].y) + a[k] >= 0);
            if (inside) ++count;
        }
    return count;
}

std::array<mpz_class, 3> cohomology(const ResolvedSurface& s, const Divisor& d) {
    mpz_class h0 = count_sections(s, d);
    Divisor kd = canonical_divisor(s);
    for (int i = 0; i < s.total_rays(); ++i) kd[i] -= d[i];
    mpz_class h2 = count_sections(s, kd);
    mpz_class h1 = h0 + h2 - euler_characteristic(s, d);
    if (h1 < 0) fail("InternalCheck", "cohomology: negative h^1");
    return {h0, h1, h2};
}

GroupElement pushforward_class(const ResolvedSurface& s, const FgAbelianGroup& cl_base,
                               const Divisor& d) {
    std::vector<mpz_class> base_coeff(s.n());
    for (int k = 0; k < s.total_rays(); ++k)
        if (s.labels[k].p == 0) base_coeff[s.labels[k].i - 1] = d[k];
    return cl_base.project(base_coeff);
}

ChainDegrees chain_degrees(const ResolvedSurface& s, const Divisor& d, int i) {
    ChainDegrees c;
    c.ds = s.ds[i - 1];
    for (int p = 1; p <= static_cast<int>(c.ds.size()); ++p) {
        Divisor e = s.zero_divisor();
        e[s.index_of(i, p)] = 1;
        c.ls.push_back(intersection_number(s, d, e));
    }
    return c;
}

}  // namespace toricsod
