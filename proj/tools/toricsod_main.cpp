#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricsod/report.hpp"
#include "toricsod/selftest.hpp"

namespace {

/* Command-line misuse (bad flag combinations, malformed --order); these exit
 * with code 2, while domain errors from the library exit with code 1. */
struct UsageError {
    std::string message;
};

struct CommonOpts {
    std::string fan_path;
    std::vector<long long> weights;
    std::string order;
    std::string format = "json";
    std::string out;
};

toricsod::Ordering parse_order(const std::string& s) {
    toricsod::Ordering ord;
    ord.rotate = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "reflect") {
            ord.reflect = true;
        } else if (tok.rfind("rotate=", 0) == 0) {
            const std::string digits = tok.substr(7);
            size_t pos = 0;
            int k = 0;
            try {
                k = std::stoi(digits, &pos);
            } catch (...) {
                throw UsageError{"bad --order token: " + tok};
            }
            if (pos != digits.size()) throw UsageError{"bad --order token: " + tok};
            ord.rotate = k;
        } else {
            throw UsageError{"bad --order token '" + tok + "' (expected rotate=k and/or reflect)"};
        }
    }
    return ord;
}

toricsod::Fan load_fan(const CommonOpts& o) {
    const bool have_file = !o.fan_path.empty();
    const bool have_weights = !o.weights.empty();
    if (have_file == have_weights)
        throw UsageError{"exactly one of --fan and --weights is required"};
    if (have_weights) return toricsod::wpp_fan(o.weights[0], o.weights[1], o.weights[2]);
    std::ifstream in(o.fan_path);
    if (!in) toricsod::fail("InvalidInput", "cannot read fan file: " + o.fan_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return toricsod::parse_fan_input(buf.str());
}

/* Fan in the order the report should use: as given unless --order says
 * otherwise.  (The sod command interprets an absent --order differently —
 * its default rotates a smooth point into the last slot.) */
toricsod::Fan oriented(const CommonOpts& o) {
    toricsod::Fan f = load_fan(o);
    toricsod::Ordering ord;
    ord.rotate = 0;
    if (!o.order.empty()) ord = parse_order(o.order);
    std::vector<int> origin;
    return toricsod::reorder_fan(f, ord, origin);
}

void deliver(const CommonOpts& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) toricsod::fail("InvalidInput", "cannot write output file: " + o.out);
    f << payload;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiorthogonal decompositions of projective toric surfaces"};
    app.require_subcommand(1);

    CommonOpts o;
    std::vector<long long> kk_type;
    std::string twist = "standard";

    CLI::App* analyze =
        app.add_subcommand("analyze", "singularity types, class group, Brauer group");
    CLI::App* resolve =
        app.add_subcommand("resolve", "minimal resolution with labelled exceptional chains");
    CLI::App* sod = app.add_subcommand("sod", "semiorthogonal decomposition report");
    CLI::App* brauer = app.add_subcommand("brauer", "order of the Brauer group");
    CLI::App* g0 = app.add_subcommand("g0", "Grothendieck groups, untwisted and twisted");
    CLI::App* kk = app.add_subcommand("kk", "singularity algebra K(r,a)");
    CLI::App* generators =
        app.add_subcommand("generators", "rank-one reflexive generators of the untwisted collection");
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in acceptance checks");

    for (CLI::App* sub : {analyze, resolve, sod, brauer, g0, generators}) {
        sub->add_option("--fan", o.fan_path,
                        "path to a fan document: {\"rays\":[[x,y],...]} or {\"weights\":[w1,w2,w3]}");
        sub->add_option("--weights", o.weights, "weights of P(w1,w2,w3), e.g. 1,2,3")
            ->delimiter(',')
            ->expected(3);
        sub->add_option("--order", o.order, "point ordering: 'rotate=k', 'reflect', or both");
    }
    for (CLI::App* sub : {analyze, resolve, sod, brauer, g0, kk, generators}) {
        sub->add_option("--format", o.format, "output format (default json)")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", o.out, "write the report to this file instead of stdout");
    }
    kk->add_option("--type", kk_type, "singularity type r,a")->delimiter(',')->expected(2)->required();
    g0->add_option("--twist", twist, "twist vector for the twisted group (default standard)")
        ->check(CLI::IsMember({"standard", "zero"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(selftest)) return toricsod::run_selftest(std::cout) ? 0 : 1;

        const bool text = (o.format == "text");
        std::string payload;
        if (app.got_subcommand(kk)) {
            toricsod::KKPresentation p = toricsod::kk_algebra(kk_type[0], kk_type[1]);
            payload = text ? toricsod::kk_text(p) : toricsod::dump_report(toricsod::kk_json(p));
        } else if (app.got_subcommand(sod)) {
            toricsod::Fan f = load_fan(o);
            toricsod::Ordering ord;  // default: rotate a smooth point into the last slot
            if (!o.order.empty()) ord = parse_order(o.order);
            toricsod::SODReport rep = toricsod::sod_report(f, ord);
            payload = text ? toricsod::sod_text(rep) : toricsod::dump_report(toricsod::sod_json(rep));
        } else if (app.got_subcommand(analyze)) {
            toricsod::Fan f = oriented(o);
            payload = text ? toricsod::analyze_text(f) : toricsod::dump_report(toricsod::analyze_json(f));
        } else if (app.got_subcommand(resolve)) {
            toricsod::ResolvedSurface s = toricsod::minimal_resolution(oriented(o));
            payload = text ? toricsod::resolve_text(s) : toricsod::dump_report(toricsod::resolve_json(s));
        } else if (app.got_subcommand(brauer)) {
            toricsod::Fan f = oriented(o);
            payload = text ? toricsod::brauer_text(f) : toricsod::dump_report(toricsod::brauer_json(f));
        } else if (app.got_subcommand(g0)) {
            toricsod::Fan f = oriented(o);
            const bool zero = (twist == "zero");
            payload = text ? toricsod::g0_text(f, zero) : toricsod::dump_report(toricsod::g0_json(f, zero));
        } else if (app.got_subcommand(generators)) {
            toricsod::ResolvedSurface s = toricsod::minimal_resolution(oriented(o));
            toricsod::GeneratorSet g = toricsod::generator_classes(s);
            payload = text ? toricsod::generators_text(g) : toricsod::dump_report(toricsod::generators_json(g));
        }
        deliver(o, payload);
        return 0;
    } catch (const UsageError& u) {
        std::cerr << "usage error: " << u.message << "\n";
        return 2;
    } catch (const toricsod::Error& e) {
        const nlohmann::json err{
            {"error", {{"kind", e.kind()}, {"message", std::string(e.what())}}}};
        std::cout << toricsod::dump_report(err);
        return 1;
    } catch (const std::exception& e) {
        const nlohmann::json err{
            {"error", {{"kind", "Internal"}, {"message", std::string(e.what())}}}};
        std::cout << toricsod::dump_report(err);
        return 1;
    }
}
