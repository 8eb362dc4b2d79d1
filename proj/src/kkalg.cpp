#include "toricsod/kkalg.hpp"

#include <algorithm>

#include "toricsod/error.hpp"
#include "toricsod/hjfrac.hpp"

namespace toricsod {

static long long word_length(const Word& w) {
    long long n = 0;
    for (const auto& [g, e] : w) n += e;
    return n;
}

/* Shortlex comparison of the expanded letter strings (z_1 < z_2 < ...). */
static bool shortlex_less(const Word& u, const Word& v) {
    long long lu = word_length(u), lv = word_length(v);
    if (lu != lv) return lu < lv;
    size_t i = 0, j = 0;
    long long ei = 0, ej = 0;
    while (i < u.size() && j < v.size()) {
        if (u[i].first != v[j].first) return u[i].first < v[j].first;
        long long step = std::min(u[i].second - ei, v[j].second - ej);
        ei += step;
        ej += step;
        if (ei == u[i].second) { ++i; ei = 0; }
        if (ej == v[j].second) { ++j; ej = 0; }
    }
    return false;  // equal
}

static void append_run(Word& w, int gen, long long exp) {
    if (exp == 0) return;
    if (!w.empty() && w.back().first == gen)
        w.back().second += exp;
    else
        w.emplace_back(gen, exp);
}

KKPresentation kk_algebra(long long r, long long a) {
    KKPresentation k;
    k.r = r;
    k.a = a;
    if (r == 1) {
        if (a != 0) fail("InvalidType", "smooth type must be (1, 0)");
        return k;  // the base field
    }
    k.cs = dual_fraction(r, a);
    k.gens = static_cast<int>(k.cs.size());
    const int l = k.gens;
    for (int j = 1; j <= l; ++j) k.relations.push_back({{j, k.cs[j - 1]}});
    for (int j = 1; j <= l; ++j)
        for (int t = j + 1; t <= l; ++t) k.relations.push_back({{j, 1}, {t, 1}});
    for (int j = 1; j <= l; ++j)
        for (int t = 1; t < j; ++t) {  // W_{j,t}
            Word w;
            append_run(w, j, k.cs[j - 1] - 1);
            for (int m = j - 1; m > t; --m) append_run(w, m, k.cs[m - 1] - 2);
            append_run(w, t, k.cs[t - 1] - 1);
            k.relations.push_back(w);
        }
    return k;
}

/* Does rel occur as a contiguous factor of w?  On run-length encodings an
 * occurrence aligns rel's first run with a suffix of some run of w, its last
 * run with a prefix, and every middle run exactly. */
static bool contains_factor(const Word& w, const Word& rel) {
    check(!rel.empty(), "relations must be nonempty words");
    if (rel.size() == 1) {
        for (const auto& run : w)
            if (run.first == rel[0].first && run.second >= rel[0].second) return true;
        return false;
    }
    if (w.size() < rel.size()) return false;
    for (size_t s = 0; s + rel.size() <= w.size(); ++s) {
        if (w[s].first != rel[0].first || w[s].second < rel[0].second) continue;
        bool match = true;
        for (size_t t = 1; t + 1 < rel.size() && match; ++t)
            match = (w[s + t] == rel[t]);
        const auto& last = rel.back();
        const auto& wlast = w[s + rel.size() - 1];
        if (match && wlast.first == last.first && wlast.second >= last.second) return true;
    }
    return false;
}

bool is_zero_word(const KKPresentation& k, const Word& w) {
    for (const auto& rel : k.relations)
        if (contains_factor(w, rel)) return true;
    return false;
}

std::vector<Word> monomial_basis(const KKPresentation& k) {
    std::vector<Word> basis{Word{}};
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int g = 1; g <= k.gens; ++g) {
                Word w2 = w;
                append_run(w2, g, 1);
                if (!is_zero_word(k, w2)) next.push_back(w2);
            }
        std::sort(next.begin(), next.end(), shortlex_less);
        basis.insert(basis.end(), next.begin(), next.end());
        if (static_cast<long long>(basis.size()) > k.r)
            fail("DimensionMismatch",
                 "monomial basis of K(" + std::to_string(k.r) + "," + std::to_string(k.a) +
                     ") exceeds the expected dimension " + std::to_string(k.r));
        frontier = std::move(next);
    }
    if (static_cast<long long>(basis.size()) != k.r)
        fail("DimensionMismatch",
             "monomial basis of K(" + std::to_string(k.r) + "," + std::to_string(k.a) +
                 ") has size " + std::to_string(basis.size()) + ", expected " +
                 std::to_string(k.r));
    return basis;
}

std::optional<Word> multiply(const KKPresentation& k, const Word& u, const Word& v) {
    Word w = u;
    for (const auto& [g, e] : v) append_run(w, g, e);
    if (is_zero_word(k, w)) return std::nullopt;
    return w;
}

bool opposite_check(long long r, long long a) {
    KKPresentation p = kk_algebra(r, a);
    KKPresentation q = kk_algebra(r, inverse_type(r, a).second);
    if (p.gens != q.gens) return false;
    // op(K(r,a)) reverses words; relabelling z_j -> z_{l+1-j} must then carry
    // the monomial basis of K(r,a) bijectively onto the basis of K(r,a').
    const int l = p.gens;
    std::vector<Word> mapped;
    for (const Word& w : monomial_basis(p)) {
        Word m(w.rbegin(), w.rend());
        for (auto& [g, e] : m) g = l + 1 - g;
        mapped.push_back(std::move(m));
    }
    std::vector<Word> target = monomial_basis(q);
    std::sort(mapped.begin(), mapped.end());
    std::sort(target.begin(), target.end());
    return mapped == target;
}

bool is_commutative(const KKPresentation& k) {
    /* The generators generate, so the algebra is commutative iff every
     * generator pair commutes; and since distinct monomials are distinct
     * basis elements when nonzero, z_i z_j = z_j z_i forces both to vanish. */
    for (int i = 1; i <= k.gens; ++i)
        for (int j = i + 1; j <= k.gens; ++j)
            if (!is_zero_word(k, Word{{i, 1}, {j, 1}}) || !is_zero_word(k, Word{{j, 1}, {i, 1}}))
                return false;
    return true;
}

std::string word_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& [g, e] : w) {
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(g);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string algebra_string(const KKPresentation& k) {
    if (k.gens == 0) return "k";
    if (k.gens == 1) return "k[z]/z^" + std::to_string(k.cs[0]);
    std::string s = "k<";
    for (int j = 1; j <= k.gens; ++j) s += (j > 1 ? ",z" : "z") + std::to_string(j);
    s += ">/(";
    for (size_t i = 0; i < k.relations.size(); ++i)
        s += (i ? ", " : "") + word_string(k.relations[i]);
    return s + ")";
}

}  // namespace toricsod
