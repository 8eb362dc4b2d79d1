#include "toricsod/abelian.hpp"

#include <algorithm>

namespace toricsod {

static mpz_class positive_mod(const mpz_class& x, const mpz_class& d) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());  // d > 0 => r in [0, d)
    return r;
}

void GroupElement::reduce() {
    for (size_t i = 0; i < torsion_part.size(); ++i)
        torsion_part[i] = positive_mod(torsion_part[i], factors[i]);
}

static void require_same_shape(const GroupElement& a, const GroupElement& b) {
    check(a.free_part.size() == b.free_part.size() && a.factors == b.factors,
          "group elements live in groups of different shape");
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    require_same_shape(*this, o);
    GroupElement r = *this;
    for (size_t i = 0; i < free_part.size(); ++i) r.free_part[i] += o.free_part[i];
    for (size_t i = 0; i < torsion_part.size(); ++i) r.torsion_part[i] += o.torsion_part[i];
    r.reduce();
    return r;
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + o.negated(); }

GroupElement GroupElement::negated() const { return times(-1); }

GroupElement GroupElement::times(const mpz_class& k) const {
    GroupElement r = *this;
    for (auto& c : r.free_part) c *= k;
    for (auto& c : r.torsion_part) c *= k;
    r.reduce();
    return r;
}

bool GroupElement::operator==(const GroupElement& o) const {
    require_same_shape(*this, o);
    return free_part == o.free_part && torsion_part == o.torsion_part;
}

bool GroupElement::is_zero() const {
    auto zero = [](const mpz_class& c) { return c == 0; };
    return std::all_of(free_part.begin(), free_part.end(), zero) &&
           std::all_of(torsion_part.begin(), torsion_part.end(), zero);
}

mpz_class GroupElement::order() const {
    for (const auto& c : free_part)
        if (c != 0) return 0;
    mpz_class ord = 1;
    for (size_t i = 0; i < torsion_part.size(); ++i) {
        if (torsion_part[i] == 0) continue;
        mpz_class g = gcd(torsion_part[i], factors[i]);
        ord = lcm(ord, mpz_class(factors[i] / g));
    }
    return ord;
}

FgAbelianGroup::FgAbelianGroup(const IntMatrix& presentation)
    : ambient_(presentation.rows()), u_(0, 0) {
    SmithDecomposition d = smith_normal_form(presentation);
    u_ = d.u;
    rank_ = 0;
    const int tmax = std::min(presentation.rows(), presentation.cols());
    while (rank_ < tmax && d.s.at(rank_, rank_) != 0) ++rank_;
    for (int i = 0; i < rank_; ++i)
        if (d.s.at(i, i) >= 2) {
            torsion_rows_.push_back(i);
            factors_.push_back(d.s.at(i, i));
        }
    for (int i = rank_; i < ambient_; ++i) free_rows_.push_back(i);
    free_rank_ = ambient_ - rank_;
}

mpz_class FgAbelianGroup::torsion_order() const {
    mpz_class t = 1;
    for (const auto& f : factors_) t *= f;
    return t;
}

GroupElement FgAbelianGroup::project(const std::vector<mpz_class>& ambient) const {
    check(static_cast<int>(ambient.size()) == ambient_, "project: ambient dimension mismatch");
    std::vector<mpz_class> z = u_.apply(ambient);
    GroupElement e;
    e.factors = factors_;
    for (int r : free_rows_) e.free_part.push_back(z[r]);
    for (int r : torsion_rows_) e.torsion_part.push_back(z[r]);
    e.reduce();
    return e;
}

GroupElement FgAbelianGroup::zero() const {
    GroupElement e;
    e.factors = factors_;
    e.free_part.assign(free_rank_, 0);
    e.torsion_part.assign(factors_.size(), 0);
    return e;
}

GroupElement FgAbelianGroup::element(std::vector<mpz_class> free_part,
                                     std::vector<mpz_class> torsion_part) const {
    check(static_cast<int>(free_part.size()) == free_rank_ &&
              torsion_part.size() == factors_.size(),
          "element: coordinate count mismatch");
    GroupElement e;
    e.factors = factors_;
    e.free_part = std::move(free_part);
    e.torsion_part = std::move(torsion_part);
    e.reduce();
    return e;
}

IntMatrix FgAbelianGroup::lift_free_basis() const {
    IntMatrix uinv = inverse_unimodular(u_);
    IntMatrix basis(ambient_, free_rank_);
    for (int c = 0; c < free_rank_; ++c)
        for (int i = 0; i < ambient_; ++i) basis.at(i, c) = uinv.at(i, free_rows_[c]);
    return basis;
}

FgAbelianGroup cokernel(const IntMatrix& presentation) { return FgAbelianGroup(presentation); }

FgAbelianGroup free_abelian(int rank) { return FgAbelianGroup(IntMatrix(rank, 0)); }

FgAbelianGroup ext1_torsion(const FgAbelianGroup& g) {
    const auto& f = g.invariant_factors();
    IntMatrix d(static_cast<int>(f.size()), static_cast<int>(f.size()));
    for (size_t i = 0; i < f.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = f[i];
    return FgAbelianGroup(d);
}

FgAbelianGroup quotient_by_element(const FgAbelianGroup& g, const GroupElement& e) {
    check(e.factors == g.invariant_factors() &&
              static_cast<int>(e.free_part.size()) == g.free_rank(),
          "quotient_by_element: element does not live in this group");
    const int f = g.free_rank();
    const int t = static_cast<int>(g.invariant_factors().size());
    IntMatrix rel(f + t, t + 1);
    for (int i = 0; i < t; ++i) rel.at(f + i, i) = g.invariant_factors()[i];
    for (int i = 0; i < f; ++i) rel.at(i, t) = e.free_part[i];
    for (int i = 0; i < t; ++i) rel.at(f + i, t) = e.torsion_part[i];
    return FgAbelianGroup(rel);
}

}  // namespace toricsod
