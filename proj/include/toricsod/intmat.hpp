#pragma once
#include <gmpxx.h>

#include <optional>
#include <vector>

#include "toricsod/error.hpp"

namespace toricsod {

/* gmpxx provides arithmetic with long but not with long long; fan data is
 * kept as long long, so convert through long (same width on this target). */
inline mpz_class zz(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "long must hold long long");
    return mpz_class(static_cast<long>(v));
}

/* Dense matrix over Z with arbitrary-precision entries, row-major storage.
 * Everything downstream (class groups, Brauer groups, twisted K-theory
 * presentations) reduces to exact integer linear algebra on these. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        check(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    IntMatrix transposed() const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const;  // this * x
    std::vector<mpz_class> column(int j) const;

private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

/* u * a * v = s with u, v unimodular and s diagonal, diagonal entries
 * non-negative and each dividing the next (Smith normal form). */
struct SmithDecomposition {
    IntMatrix u, s, v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/* Columns form a basis of {x : a x = 0}, saturated (a basis of the full
 * kernel lattice); each column is sign-normalised so its first nonzero
 * entry is positive.  kernel_basis([[1,1]]) = column (1,-1). */
IntMatrix kernel_basis(const IntMatrix& a);

/* One particular integer solution of a x = b, or nullopt when none exists.
 * b has a.rows() entries, the solution a.cols(). Deterministic. */
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b);

/* Exact inverse of a matrix with determinant +-1; throws otherwise. */
IntMatrix inverse_unimodular(const IntMatrix& u);

/* Exact determinant via fraction-free (Bareiss) elimination. */
mpz_class determinant(const IntMatrix& a);

}  // namespace toricsod
