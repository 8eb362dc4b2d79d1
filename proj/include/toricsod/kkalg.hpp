#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricsod {

/* Words in the free algebra k<z_1,...,z_l>, run-length encoded: a word is a
 * list of (generator, exponent) runs with exponent >= 1 and adjacent runs
 * using distinct generators.  The empty word is the unit. */
using Run = std::pair<int, long long>;  // 1-based generator index, exponent
using Word = std::vector<Run>;

/* The singularity algebra K(r, a) attached to a cyclic quotient point of
 * type 1/r(1, a): a monomial quotient of k<z_1,...,z_l> where l is the
 * length of the dual continued fraction r/(r-a) = [c_1,...,c_l] and the
 * forbidden monomials are
 *   z_j^{c_j},          z_j z_k (j < k),
 *   W_{j,k} = z_j^{c_j - 1} z_{j-1}^{c_{j-1} - 2} ... z_{k+1}^{c_{k+1} - 2} z_k^{c_k - 1}
 * for j > k, factors with exponent 0 omitted.  dim K(r, a) = r; the two
 * degenerate shapes are K(r, r-1) = k[z]/z^r and K(r, 1) with l = r-1 and
 * all products of generators zero.  K(1, 0) is the base field k. */
struct KKPresentation {
    long long r = 1;
    long long a = 0;
    int gens = 0;                   // l
    std::vector<long long> cs;      // dual digits c_1..c_l
    std::vector<Word> relations;    // forbidden factors, canonical order
};

KKPresentation kk_algebra(long long r, long long a);

/* All monomials with no forbidden factor, in shortlex order (length, then
 * lexicographic with z_1 < z_2 < ...).  Throws DimensionMismatch unless the
 * count equals r — a built-in integrity guard on the relation table. */
std::vector<Word> monomial_basis(const KKPresentation& k);

/* Product of two basis words in the monomial quotient: the concatenation,
 * or nullopt when a forbidden factor appears (the product is zero). */
std::optional<Word> multiply(const KKPresentation& k, const Word& u, const Word& v);

/* Whether a word contains any forbidden factor (i.e. is zero in K). */
bool is_zero_word(const KKPresentation& k, const Word& w);

/* K(r,a)^op = K(r,a') with a*a' = 1 mod r, witnessed on monomial bases:
 * reversing each basis word and relabelling z_j -> z_{l+1-j} must give
 * exactly the basis of K(r,a'). */
bool opposite_check(long long r, long long a);

/* Commutativity of K(r,a); holds exactly when a = 1 or a = r-1 (or r = 1). */
bool is_commutative(const KKPresentation& k);

std::string word_string(const Word& w);            // e.g. "z2*z1^3", unit "1"
std::string algebra_string(const KKPresentation&); // "k", "k[z]/z^5", "k<z1,z2>/(...)"

}  // namespace toricsod
