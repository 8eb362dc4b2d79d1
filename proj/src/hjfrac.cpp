#include "toricsod/hjfrac.hpp"

#include <numeric>

#include "toricsod/error.hpp"

namespace toricsod {

static void require_valid_type(long long r, long long a) {
    if (r == 1 && a == 0) return;
    if (r < 1 || a <= 0 || a >= r || std::gcd(r, a) != 1)
        fail("InvalidType",
             "singularity type (" + std::to_string(r) + "," + std::to_string(a) +
                 ") requires r >= 1 and 0 < a < r with gcd(r, a) = 1");
}

std::vector<long long> hj_expand(long long r, long long a) {
    require_valid_type(r, a);
    std::vector<long long> ds;
    while (a > 0) {
        long long d = (r + a - 1) / a;  // ceil(r/a)
        ds.push_back(d);
        long long next = d * a - r;
        r = a;
        a = next;
    }
    check(r == 1, "hj_expand: expansion did not terminate at 1");
    return ds;
}

long long tridet(const std::vector<long long>& ds) {
    long long prev = 0, cur = 1;  // continuant recursion p_k = d_k p_{k-1} - p_{k-2}
    for (long long d : ds) {
        long long next = d * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::pair<long long, long long> hj_eval(const std::vector<long long>& ds) {
    if (ds.empty()) return {1, 0};
    std::vector<long long> tail(ds.begin() + 1, ds.end());
    return {tridet(ds), tridet(tail)};
}

std::vector<long long> dual_fraction(long long r, long long a) {
    require_valid_type(r, a);
    if (r < 2) fail("InvalidType", "dual_fraction requires r >= 2");
    return hj_expand(r, r - a);
}

std::pair<long long, long long> inverse_type(long long r, long long a) {
    require_valid_type(r, a);
    if (r == 1) return {1, 0};
    // extended gcd: find a' with a*a' = 1 mod r
    long long old_r = r, t0 = 0, t1 = 1, rr = r, aa = a;
    while (aa != 0) {
        long long q = rr / aa;
        long long tmp = rr - q * aa;
        rr = aa;
        aa = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    check(rr == 1, "inverse_type: arguments not coprime");
    long long ap = ((t0 % old_r) + old_r) % old_r;
    check(ap > 0 && (a * ap) % old_r == 1, "inverse_type: inverse verification failed");
    return {old_r, ap};
}

bool is_gorenstein(long long r, long long a) {
    require_valid_type(r, a);
    return r == 1 || a == r - 1;
}

long long crt_shift(long long r1, long long rn) {
    if (r1 < 1 || rn < 1 || std::gcd(r1, rn) != 1)
        fail("InvalidType", "crt_shift requires positive coprime orders");
    long long s = 0;
    while (s % r1 != 0 || (s + 1) % rn != 0) ++s;  // orders are small; direct scan
    return s;
}

}  // namespace toricsod
