#include "toricsod/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace toricsod {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    check(cols_ == o.rows_, "matrix product dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& x) const {
    check(static_cast<int>(x.size()) == cols_, "apply: dimension mismatch");
    std::vector<mpz_class> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<mpz_class> IntMatrix::column(int j) const {
    std::vector<mpz_class> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

static mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

/* Smith normal form by repeated pivoting.  The pivot is always the entry of
 * smallest absolute value in the trailing submatrix (ties broken by position),
 * which keeps intermediate entries small without needing modular tricks.
 * Row operations are mirrored on u, column operations on v, so u*a*v = s
 * holds throughout.  After clearing a pivot's row and column, any entry of
 * the trailing block not divisible by the pivot gets its row added to the
 * pivot row and the step repeats; this enforces the divisibility chain. */
SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const int rows = a.rows(), cols = a.cols();
    IntMatrix s = a;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto swap_rows = [&](int i, int k) {
        if (i == k) return;
        for (int j = 0; j < cols; ++j) std::swap(s.at(i, j), s.at(k, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(i, j), u.at(k, j));
    };
    auto swap_cols = [&](int j, int k) {
        if (j == k) return;
        for (int i = 0; i < rows; ++i) std::swap(s.at(i, j), s.at(i, k));
        for (int i = 0; i < cols; ++i) std::swap(v.at(i, j), v.at(i, k));
    };
    auto row_sub = [&](int i, int k, const mpz_class& q) {  // row_i -= q*row_k
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) s.at(i, j) -= q * s.at(k, j);
        for (int j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(k, j);
    };
    auto col_sub = [&](int j, int k, const mpz_class& q) {  // col_j -= q*col_k
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) s.at(i, j) -= q * s.at(i, k);
        for (int i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, k);
    };

    const int tmax = std::min(rows, cols);
    int t = 0;
    while (t < tmax) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const mpz_class& e = s.at(i, j);
                if (e == 0) continue;
                if (pi < 0 || mpz_cmpabs(e.get_mpz_t(), s.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (int i = t + 1; i < rows; ++i)
            if (s.at(i, t) != 0) row_sub(i, t, floor_div(s.at(i, t), s.at(t, t)));
        for (int j = t + 1; j < cols; ++j)
            if (s.at(t, j) != 0) col_sub(j, t, floor_div(s.at(t, j), s.at(t, t)));

        bool clear = true;
        for (int i = t + 1; i < rows && clear; ++i) clear = (s.at(i, t) == 0);
        for (int j = t + 1; j < cols && clear; ++j) clear = (s.at(t, j) == 0);
        if (!clear) continue;  // remainders are strictly smaller; re-pivot

        int bad = -1;
        for (int i = t + 1; i < rows && bad < 0; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    bad = i;
                    break;
                }
        if (bad >= 0) {
            row_sub(t, bad, mpz_class(-1));  // pull the offending row into play
            continue;
        }
        ++t;
    }
    for (int k = 0; k < tmax; ++k)
        if (s.at(k, k) < 0) {
            for (int j = 0; j < cols; ++j) s.at(k, j) = -s.at(k, j);
            for (int j = 0; j < rows; ++j) u.at(k, j) = -u.at(k, j);
        }
    return {u, s, v};
}

static int smith_rank(const IntMatrix& s) {
    int r = 0;
    const int tmax = std::min(s.rows(), s.cols());
    while (r < tmax && s.at(r, r) != 0) ++r;
    return r;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    const int rank = smith_rank(d.s);
    const int nullity = a.cols() - rank;
    IntMatrix k(a.cols(), nullity);
    for (int c = 0; c < nullity; ++c) {
        int src = rank + c;
        int lead = -1;
        for (int i = 0; i < a.cols(); ++i) {
            k.at(i, c) = d.v.at(i, src);
            if (lead < 0 && k.at(i, c) != 0) lead = i;
        }
        if (lead >= 0 && k.at(lead, c) < 0)
            for (int i = 0; i < a.cols(); ++i) k.at(i, c) = -k.at(i, c);
    }
    return k;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b) {
    check(static_cast<int>(b.size()) == a.rows(), "solve_integer: rhs dimension mismatch");
    SmithDecomposition d = smith_normal_form(a);
    const int rank = smith_rank(d.s);
    std::vector<mpz_class> c = d.u.apply(b);
    std::vector<mpz_class> y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        if (i < rank) {
            if (c[i] % d.s.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / d.s.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return d.v.apply(y);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    check(m.rows() == m.cols(), "inverse_unimodular: square matrix required");
    SmithDecomposition d = smith_normal_form(m);
    for (int i = 0; i < m.rows(); ++i)
        check(d.s.at(i, i) == 1, "inverse_unimodular: matrix is not unimodular");
    return d.v * d.u;  // u*m*v = 1  =>  m^{-1} = v*u
}

/* Bareiss fraction-free elimination: every division below is exact. */
mpz_class determinant(const IntMatrix& a) {
    check(a.rows() == a.cols(), "determinant: square matrix required");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    mpz_class sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace toricsod
