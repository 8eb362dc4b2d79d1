#pragma once
#include <gmpxx.h>

#include <vector>

#include "toricsod/intmat.hpp"

namespace toricsod {

/* Element of a finitely generated abelian group in canonical coordinates:
 * free coordinates over Z, then torsion coordinates reduced into [0, d_i)
 * where d_i are the parent group's invariant factors (carried along so the
 * element is a self-contained value). */
struct GroupElement {
    std::vector<mpz_class> free_part;
    std::vector<mpz_class> torsion_part;
    std::vector<mpz_class> factors;

    void reduce();
    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement negated() const;
    GroupElement times(const mpz_class& k) const;
    bool operator==(const GroupElement& o) const;
    bool is_zero() const;
    mpz_class order() const;  // 0 means infinite order
};

/* Finitely generated abelian group presented as a cokernel
 *     Z^ambient / (column span of the presentation matrix),
 * stored with its Smith decomposition so elements of the ambient lattice
 * can be projected to canonical coordinates.  Invariant factors are >= 2
 * and each divides the next; factors equal to 1 are dropped. */
class FgAbelianGroup {
public:
    FgAbelianGroup() : FgAbelianGroup(IntMatrix(0, 0)) {}
    explicit FgAbelianGroup(const IntMatrix& presentation);

    int ambient_dim() const { return ambient_; }
    int free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    mpz_class torsion_order() const;
    bool same_shape(const FgAbelianGroup& o) const {
        return free_rank_ == o.free_rank_ && factors_ == o.factors_;
    }

    GroupElement project(const std::vector<mpz_class>& ambient) const;
    GroupElement zero() const;
    GroupElement element(std::vector<mpz_class> free_part,
                         std::vector<mpz_class> torsion_part) const;

    /* Ambient representatives of the free coordinate basis vectors, as the
     * columns of an ambient x free_rank matrix. Projecting column j yields
     * the j-th free basis element. */
    IntMatrix lift_free_basis() const;

private:
    int ambient_, rank_, free_rank_;
    std::vector<mpz_class> factors_;
    std::vector<int> torsion_rows_, free_rows_;
    IntMatrix u_;  // SNF row transform of the presentation
};

FgAbelianGroup cokernel(const IntMatrix& presentation);
FgAbelianGroup free_abelian(int rank);

/* The torsion subgroup as a standalone group; for finitely generated G this
 * is also Ext^1(G, Z) up to isomorphism, which is how the twisted
 * Grothendieck group cross-check consumes it. */
FgAbelianGroup ext1_torsion(const FgAbelianGroup& g);

/* G / <g> presented in G's canonical coordinates. */
FgAbelianGroup quotient_by_element(const FgAbelianGroup& g, const GroupElement& e);

}  // namespace toricsod
