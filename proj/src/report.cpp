#include "toricsod/report.hpp"

#include <sstream>

namespace toricsod {

static long long to_ll(const mpz_class& z) {
    check(z.fits_slong_p(), "report: value exceeds the 64-bit report range");
    return mpz_get_si(z.get_mpz_t());
}

static json int_array(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const mpz_class& x : v) a.push_back(to_ll(x));
    return a;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

Fan parse_fan_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("InvalidInput", std::string("cannot parse fan JSON: ") + e.what());
    }
    if (!j.is_object()) fail("InvalidInput", "fan input must be a JSON object");
    if (j.contains("weights")) {
        const json& w = j["weights"];
        if (!w.is_array() || w.size() != 3)
            fail("InvalidInput", "\"weights\" must be an array of three integers");
        long long a[3];
        for (int i = 0; i < 3; ++i) {
            if (!w[i].is_number_integer())
                fail("InvalidInput", "\"weights\" must be an array of three integers");
            a[i] = w[i].get<long long>();
        }
        return wpp_fan(a[0], a[1], a[2]);
    }
    if (j.contains("rays")) {
        const json& r = j["rays"];
        if (!r.is_array()) fail("InvalidInput", "\"rays\" must be an array of [x,y] pairs");
        std::vector<Ray> rays;
        for (const json& p : r) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                fail("InvalidInput", "\"rays\" must be an array of [x,y] pairs");
            rays.push_back(Ray{p[0].get<long long>(), p[1].get<long long>()});
        }
        return validate_fan(rays);
    }
    fail("InvalidInput", "fan input needs a \"rays\" or \"weights\" key");
}

json group_json(const FgAbelianGroup& g) {
    json t = json::array();
    for (const mpz_class& f : g.invariant_factors()) t.push_back(to_ll(f));
    return json{{"free_rank", g.free_rank()}, {"torsion", t}};
}

json element_json(const GroupElement& e) {
    json c = json::array();
    for (const mpz_class& x : e.free_part) c.push_back(to_ll(x));
    for (const mpz_class& x : e.torsion_part) c.push_back(to_ll(x));
    return json{{"coords", c}, {"order", to_ll(e.order())}};
}

std::string group_string(const FgAbelianGroup& g) {
    std::string s;
    if (g.free_rank() == 1) s = "Z";
    else if (g.free_rank() > 1) s = "Z^" + std::to_string(g.free_rank());
    for (const mpz_class& f : g.invariant_factors())
        s += (s.empty() ? "Z/" : " + Z/") + f.get_str();
    return s.empty() ? "0" : s;
}

std::string element_string(const GroupElement& e) {
    if (e.free_part.empty() && e.torsion_part.empty()) return "0";
    std::string s = "(";
    for (size_t i = 0; i < e.free_part.size(); ++i)
        s += (i ? ", " : "") + e.free_part[i].get_str();
    if (!e.torsion_part.empty()) {
        if (!e.free_part.empty()) s += "; ";
        for (size_t i = 0; i < e.torsion_part.size(); ++i)
            s += (i ? ", " : "") + e.torsion_part[i].get_str() + " mod " + e.factors[i].get_str();
    }
    return s + ")";
}

static std::string type_string(long long r, long long a, bool gorenstein) {
    std::string s = "type (" + std::to_string(r) + "," + std::to_string(a) + ")";
    if (r == 1) return s + ", smooth";
    return s + (gorenstein ? ", Gorenstein" : ", non-Gorenstein");
}

static std::string ll_list(const std::vector<long long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

static std::string mpz_list(const std::vector<mpz_class>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "]";
}

json analyze_json(const Fan& f) {
    json pts = json::array();
    for (int i = 0; i < f.size(); ++i) {
        PointData t = singularity_type(f, i);
        pts.push_back(json{{"i", i + 1}, {"r", t.r}, {"a", t.a}, {"gorenstein", t.gorenstein}});
    }
    ClassGroups cg = divisor_class_groups(f);
    FgAbelianGroup br = brauer_from_rays(f);
    return json{{"points", pts},
                {"cl", group_json(cg.cl)},
                {"pic_rank", cg.pic_rank},
                {"br", group_json(br)},
                {"br_order", to_ll(br.torsion_order())}};
}

std::string analyze_text(const Fan& f) {
    std::ostringstream os;
    for (int i = 0; i < f.size(); ++i) {
        PointData t = singularity_type(f, i);
        os << "x" << (i + 1) << ": " << type_string(t.r, t.a, t.gorenstein) << "\n";
    }
    ClassGroups cg = divisor_class_groups(f);
    FgAbelianGroup br = brauer_from_rays(f);
    os << "Cl(X) = " << group_string(cg.cl) << "  (Pic rank " << cg.pic_rank << ")\n";
    os << "Br(X) = " << group_string(br) << "  (order " << br.torsion_order().get_str() << ")\n";
    return os.str();
}

json resolve_json(const ResolvedSurface& s) {
    json rays = json::array();
    for (int k = 0; k < s.total_rays(); ++k)
        rays.push_back(json{{"xy", json::array({s.rays[k].x, s.rays[k].y})},
                            {"label", json::array({s.labels[k].i, s.labels[k].p})},
                            {"d", s.minus_self[k]}});
    json chains = json::array();
    for (int i = 0; i < s.n(); ++i)
        chains.push_back(json{{"i", i + 1},
                              {"r", s.points[i].r},
                              {"a", s.points[i].a},
                              {"ds", s.ds[i]}});
    return json{{"rays", rays}, {"chains", chains}};
}

std::string resolve_text(const ResolvedSurface& s) {
    std::ostringstream os;
    os << "rays (counterclockwise, label (i,p), d = -E^2):\n";
    for (int k = 0; k < s.total_rays(); ++k)
        os << "  (" << s.rays[k].x << "," << s.rays[k].y << ")  (" << s.labels[k].i << ","
           << s.labels[k].p << ")  d=" << s.minus_self[k] << "\n";
    os << "chains:\n";
    for (int i = 0; i < s.n(); ++i) {
        const PointData& t = s.points[i];
        os << "  x" << (i + 1) << ": " << type_string(t.r, t.a, t.gorenstein);
        if (!s.ds[i].empty()) os << ", ds = " << ll_list(s.ds[i]);
        os << "\n";
    }
    return os.str();
}

json sod_json(const SODReport& r) {
    json blocks = json::array();
    for (const SODBlock& b : r.blocks) {
        json rel = json::array();
        for (const Word& w : b.algebra.relations) rel.push_back(word_string(w));
        blocks.push_back(json{{"point", b.point},
                              {"r", b.type.r},
                              {"a", b.type.a},
                              {"ds", b.ds},
                              {"twist", int_array(b.twist)},
                              {"algebra", json{{"generators", b.algebra.gens},
                                               {"relations", rel},
                                               {"dim", b.algebra.r}}}});
    }
    return json{{"blocks", blocks},
                {"beta", element_json(r.beta)},
                {"untwisted", r.untwisted},
                {"perf_valid", r.perf_valid}};
}

std::string sod_text(const SODReport& r) {
    std::ostringstream os;
    os << (r.beta.is_zero() ? "D^b(X) = <" : "D^b(X, beta) = <");
    for (size_t j = 0; j < r.blocks.size(); ++j)
        os << (j ? ", D^b(" : " D^b(") << algebra_string(r.blocks[j].algebra) << ")";
    os << " >\n";
    for (size_t j = 0; j < r.blocks.size(); ++j) {
        const SODBlock& b = r.blocks[j];
        os << "block " << (j + 1) << ": point " << b.point << ", "
           << type_string(b.type.r, b.type.a, b.type.gorenstein) << ", ds " << ll_list(b.ds)
           << ", twist " << mpz_list(b.twist) << "\n";
    }
    os << "beta: order " << r.beta.order().get_str() << "\n";
    os << "untwisted: " << (r.untwisted ? "yes" : "no") << "\n";
    os << "perfect-complex decomposition valid: " << (r.perf_valid ? "yes" : "no") << "\n";
    return os.str();
}

json brauer_json(const Fan& f) {
    return json{{"order", to_ll(brauer_from_rays(f).torsion_order())}};
}

std::string brauer_text(const Fan& f) {
    FgAbelianGroup br = brauer_from_rays(f);
    return "Br(X) = " + group_string(br) + " (order " + br.torsion_order().get_str() + ")\n";
}

json g0_json(const Fan& f, bool zero_twist) {
    ResolvedSurface s = minimal_resolution(f);
    IPData d = ip_cokernel(s);
    std::vector<mpz_class> tw =
        zero_twist ? std::vector<mpz_class>(s.exceptional.size()) : standard_twist(s);
    return json{{"twist", zero_twist ? "zero" : "standard"},
                {"g0", group_json(g0_untwisted(f))},
                {"g0_twisted", group_json(g0_twisted(s, tw))},
                {"ext1_check", g0_ext1_check(s, d, tw)}};
}

std::string g0_text(const Fan& f, bool zero_twist) {
    ResolvedSurface s = minimal_resolution(f);
    IPData d = ip_cokernel(s);
    std::vector<mpz_class> tw =
        zero_twist ? std::vector<mpz_class>(s.exceptional.size()) : standard_twist(s);
    std::ostringstream os;
    os << "G0(X) = " << group_string(g0_untwisted(f)) << "\n";
    os << "G0(X, " << (zero_twist ? "zero" : "standard") << " twist) = "
       << group_string(g0_twisted(s, tw)) << "\n";
    os << "Ext^1 torsion cross-check: " << (g0_ext1_check(s, d, tw) ? "pass" : "FAIL") << "\n";
    return os.str();
}

json kk_json(const KKPresentation& p) {
    json rel = json::array();
    for (const Word& w : p.relations) rel.push_back(word_string(w));
    json basis = json::array();
    for (const Word& w : monomial_basis(p)) basis.push_back(word_string(w));
    return json{{"r", p.r},         {"a", p.a},     {"generators", p.gens},
                {"cs", p.cs},       {"relations", rel}, {"dim", p.r},
                {"basis", basis},   {"algebra", algebra_string(p)}};
}

std::string kk_text(const KKPresentation& p) {
    std::ostringstream os;
    os << "K(" << p.r << "," << p.a << ") = " << algebra_string(p) << "\n";
    os << "cs = " << ll_list(p.cs) << "\n";
    std::vector<Word> basis = monomial_basis(p);
    os << "dim = " << basis.size() << "\n";
    os << "basis:";
    for (const Word& w : basis) os << " " << word_string(w);
    os << "\n";
    return os.str();
}

json generators_json(const GeneratorSet& g) {
    json gens = json::array();
    for (size_t i = 0; i < g.classes.size(); ++i)
        gens.push_back(json{{"class", element_json(g.classes[i])},
                            {"rank", g.ranks[i]},
                            {"locally_free_at", g.locally_free_at[i]},
                            {"reflexive_at", g.reflexive_at[i]}});
    return json{{"C", element_json(g.c)}, {"generators", gens}};
}

std::string generators_text(const GeneratorSet& g) {
    std::ostringstream os;
    os << "C: " << element_string(g.c) << "\n";
    auto point_set = [](const std::vector<bool>& flags) {
        std::string s = "{";
        bool first = true;
        for (size_t j = 0; j < flags.size(); ++j)
            if (flags[j]) {
                s += (first ? "x" : ", x") + std::to_string(j + 1);
                first = false;
            }
        return s + "}";
    };
    for (size_t i = 0; i < g.classes.size(); ++i)
        os << "R_" << (i + 1) << ": class " << element_string(g.classes[i]) << ", rank "
           << g.ranks[i] << ", locally free at " << point_set(g.locally_free_at[i])
           << ", reflexive at " << point_set(g.reflexive_at[i]) << "\n";
    return os.str();
}

}  // namespace toricsod
