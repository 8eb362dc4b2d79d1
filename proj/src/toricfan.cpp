#include "toricsod/toricfan.hpp"

#include <numeric>
#include <string>

namespace toricsod {

static std::string ray_str(const Ray& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

/* Exact angular comparator: order rays by angle in [0, 2pi) without floats.
 * half = 0 for the upper half plane including the positive x-axis. */
static int half_plane(const Ray& v) {
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

static bool angle_less(const Ray& u, const Ray& v) {
    int hu = half_plane(u), hv = half_plane(v);
    if (hu != hv) return hu < hv;
    return det2(u, v) > 0;
}

Fan validate_fan(const std::vector<Ray>& rays) {
    const int n = static_cast<int>(rays.size());
    if (n < 3) fail("TooFewRays", "a complete fan needs at least 3 rays, got " + std::to_string(n));
    for (const Ray& v : rays)
        if (std::gcd(std::abs(v.x), std::abs(v.y)) != 1)
            fail("NonPrimitiveRay", "ray " + ray_str(v) + " is not a primitive lattice vector");
    for (int i = 0; i < n; ++i) {
        const Ray& v = rays[i];
        const Ray& w = rays[(i + 1) % n];
        if (det2(v, w) <= 0)
            fail("NonConvexOrClockwise", "consecutive rays " + ray_str(v) + ", " + ray_str(w) +
                                             " do not turn counterclockwise by less than pi");
    }
    /* Each consecutive pair turns counterclockwise by < pi, so the total
     * turning is 2*pi*(winding); winding = number of descents in the cyclic
     * angle sequence and must be exactly 1 for a genuine fan. */
    int descents = 0;
    for (int i = 0; i < n; ++i)
        if (!angle_less(rays[i], rays[(i + 1) % n])) ++descents;
    if (descents != 1)
        fail("WrongWinding",
             "rays wind around the origin " + std::to_string(descents) + " times, expected 1");
    return Fan{rays};
}

/* Normal form of the cone (v, w): a unimodular T with T v = (1, 0) maps w to
 * (x, r) with r = det(v, w); the type parameter is a = (r - x) mod r, which
 * does not depend on the choice of T. */
PointData singularity_type(const Fan& f, int i) {
    const Ray& v = f.ray(i);
    const Ray& w = f.ray(i + 1);
    long long r = det2(v, w);
    check(r >= 1, "singularity_type: cone is degenerate");
    if (r == 1) return PointData{1, 0, true};
    long long p = 0, q = 0, g = 0;
    // extended gcd on (v.x, v.y): p*v.x + q*v.y = 1
    {
        long long a0 = v.x, b0 = v.y, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b0 != 0) {
            long long t = a0 / b0;
            long long tmp = a0 - t * b0; a0 = b0; b0 = tmp;
            tmp = x0 - t * x1; x0 = x1; x1 = tmp;
            tmp = y0 - t * y1; y0 = y1; y1 = tmp;
        }
        if (a0 < 0) { a0 = -a0; x0 = -x0; y0 = -y0; }
        check(a0 == 1, "singularity_type: ray is not primitive");
        p = x0; q = y0;
    }
    long long x = p * w.x + q * w.y;
    long long a = ((r - x) % r + r) % r;
    check(std::gcd(r, a) == 1, "singularity_type: non-coprime type, fan invalid");
    return PointData{r, a, a == r - 1};
}

Fan wpp_fan(long long w1, long long w2, long long w3) {
    const long long w[3] = {w1, w2, w3};
    for (long long wi : w)
        if (wi < 1) fail("InvalidWeights", "weights must be positive");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(w[i], w[j]) != 1)
                fail("InvalidWeights", "weights must be pairwise coprime");

    /* Rays are the images of the coordinate vectors e_i under the quotient
     * Z^3 -> Z^3 / Z(w1,w2,w3) = Z^2, realised by the last two rows of a
     * unimodular U with U w = e_1. */
    IntMatrix col(3, 1);
    for (int i = 0; i < 3; ++i) col.at(i, 0) = zz(w[i]);
    SmithDecomposition d = smith_normal_form(col);
    check(d.s.at(0, 0) == 1, "wpp_fan: weights have a common factor");
    IntMatrix u = d.u;
    // u * col * v = e_1 with v = [±1]; absorb the sign so u * col = e_1
    if (d.v.at(0, 0) == -1)
        for (int j = 0; j < 3; ++j) u.at(0, j) = -u.at(0, j);

    Ray im[3];
    for (int j = 0; j < 3; ++j) {
        mpz_class ax = u.at(1, j), ay = u.at(2, j);
        check(ax.fits_slong_p() && ay.fits_slong_p(), "wpp_fan: ray coordinates overflow");
        im[j] = Ray{mpz_get_si(ax.get_mpz_t()), mpz_get_si(ay.get_mpz_t())};
        check(std::gcd(std::abs(im[j].x), std::abs(im[j].y)) == 1,
              "wpp_fan: image of a coordinate vector is not primitive");
    }
    check(w1 * im[0].x + w2 * im[1].x + w3 * im[2].x == 0 &&
              w1 * im[0].y + w2 * im[1].y + w3 * im[2].y == 0,
          "wpp_fan: weighted ray sum is not zero");
    if (det2(im[0], im[1]) < 0)  // wrong orientation: reflect by swapping coordinates
        for (Ray& v : im) std::swap(v.x, v.y);

    /* Cone (im_j, im_{j+1}) misses e_{j+2}, so its point has order w_{j+2};
     * shifting the ray list by one makes cone i the point of order w_i. */
    Fan f = validate_fan({im[1], im[2], im[0]});
    for (int i = 0; i < 3; ++i)
        check(singularity_type(f, i).r == w[i], "wpp_fan: point orders disagree with weights");
    return f;
}

FgAbelianGroup class_group(const Fan& f) {
    IntMatrix rel(f.size(), 2);
    for (int i = 0; i < f.size(); ++i) {
        rel.at(i, 0) = zz(f.rays[i].x);
        rel.at(i, 1) = zz(f.rays[i].y);
    }
    return cokernel(rel);
}

ClassGroups divisor_class_groups(const Fan& f) {
    IntMatrix rays(2, f.size());
    for (int i = 0; i < f.size(); ++i) {
        rays.at(0, i) = zz(f.rays[i].x);
        rays.at(1, i) = zz(f.rays[i].y);
    }
    return ClassGroups{class_group(f), kernel_basis(rays).cols()};
}

FgAbelianGroup brauer_from_rays(const Fan& f) {
    IntMatrix rel(2, f.size());
    for (int i = 0; i < f.size(); ++i) {
        rel.at(0, i) = zz(f.rays[i].x);
        rel.at(1, i) = zz(f.rays[i].y);
    }
    return cokernel(rel);
}

GroupElement ray_divisor_class(const Fan& f, const FgAbelianGroup& cl, int i) {
    std::vector<mpz_class> e(f.size());
    e[i] = 1;
    return cl.project(e);
}

}  // namespace toricsod
