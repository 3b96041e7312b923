// Command-line front end: parses a germ-description file, runs the analysis
// pipelines, and emits human-readable text plus an optional JSON report.
//
// Exit codes: 0 success, 1 a checked condition failed under --strict,
// 2 parse or input error, 3 resource limit exceeded.

#include <CLI11.hpp>

#include <germforge/germforge.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace germ;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// GERMFORGE_LIMITS="max-pairs=100000,max-degree=40,max-coeff-bits=500000"
void apply_env_limits() {
    const char* env = std::getenv("GERMFORGE_LIMITS");
    if (!env) return;
    std::string s(env);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? s.size() - pos : comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw DomainError("GERMFORGE_LIMITS: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw DomainError("GERMFORGE_LIMITS: bad number in '" + item + "'");
        }
        auto& lim = current_limits();
        if (key == "max-pairs") lim.max_pairs = value;
        else if (key == "max-degree") lim.max_degree = static_cast<int>(value);
        else if (key == "max-coeff-bits") lim.max_coeff_bits = value;
        else throw DomainError("GERMFORGE_LIMITS: unknown key '" + key + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
}

std::string map_signature(const MapGerm& m) {
    const char* k = m.field == Field::complex ? "C" : "R";
    return m.name + " : " + k + "^" + std::to_string(m.source->nvars()) + " -> " + k + "^" +
           std::to_string(m.target->nvars());
}

const char* tf(bool b) { return b ? "TRUE" : "FALSE"; }

void print_caveats(const std::vector<std::string>& cs, const std::string& indent = "  ") {
    for (const auto& c : cs) std::cout << indent << "caveat: " << c << "\n";
}

void print_tameness(const MapGerm& m, const TamenessReport& r) {
    std::cout << "map: " << map_signature(m) << "\n";
    std::cout << "verdict: " << (r.tame.holds ? "TAME" : "NOT TAME") << "\n";
    if (r.fast_path == "zero-fiber")
        std::cout << "certificate: " << m.name << "^-1(0) = {0}\n";
    else
        std::cout << "certificate: " << r.tame.certificate << "\n";
    if (!r.stratification_summary.empty())
        std::cout << "strata: " << r.stratification_summary << "\n";
    print_caveats(r.caveats);
    print_caveats(r.tame.caveats);
}

struct ComposeBundle {
    ComposabilityReport rep;
    EquivalentFormsReport forms;
    GermInclusionVerdict corollary;
};

ComposeBundle run_compose(const MapGerm& f, const MapGerm& g) {
    ComposeBundle b{is_tamely_composable(f, g), {}, {}};
    b.forms = check_equivalent_forms(b.rep);
    b.corollary = corollary_condition(f, g);
    return b;
}

void print_compose(const ComposeBundle& b) {
    std::cout << "F: " << map_signature(b.rep.f) << "\n";
    std::cout << "G: " << map_signature(b.rep.g) << "\n";
    std::cout << "H = G o F: " << map_signature(b.rep.h) << "\n";
    std::cout << "tamely-composable: " << tf(b.rep.composable.holds) << "\n";
    std::cout << "  certificate: " << b.rep.composable.certificate << "\n";
    std::cout << "condition (3.2), Sing H added: " << tf(b.forms.with_sing_h.holds) << "\n";
    std::cout << "condition (3.3), image form: " << tf(b.forms.image_form.holds) << "\n";
    std::cout << "forms agree: " << (b.forms.agree ? "yes" : "no") << "\n";
    std::cout << "condition (3.9): " << (b.corollary.holds ? "HOLDS" : "FAILS") << "\n";
    std::cout << "  certificate: " << b.corollary.certificate << "\n";
    print_caveats(b.rep.caveats);
    print_caveats(b.forms.caveats);
    print_caveats(b.corollary.caveats);
}

void print_fiber(const FiberReport& r) {
    std::cout << "H = G o F: " << r.h_label << " on "
              << (r.field == Field::complex ? "C" : "R") << "^" << (r.n + 1) << "\n";
    std::cout << "generic value a = " << r.generic_value << "\n";
    std::cout << "mu(G) = " << r.mu_g << ", chi(Fib G) = " << r.chi_fib_g << "\n";
    std::cout << "mu of the central ICIS fiber of F = " << r.mu_icis_f << ", chi(fiber of F) = "
              << r.chi_fib_f << "\n";
    std::cout << "N = " << r.big_n << "\n";
    std::cout << "chi(Fib H) = " << r.chi_fib_h << "\n";
    std::cout << "A_G point count at a = " << r.a_g_count << "\n";
    for (const auto& pm : r.mu_list)
        std::cout << "  point class " << pm.point << " (size " << pm.count << "): mu = " << pm.mu
                  << "\n";
    for (const auto& p : r.pieces)
        std::cout << "  fiber piece over " << p.stratum << ": dim " << p.dim
                  << (p.smooth ? ", smooth" : "") << "\n";
    if (r.mu_h_direct) std::cout << "mu(H) computed directly = " << *r.mu_h_direct << "\n";
    std::cout << "euler cross-check: " << (r.euler_cross_check_ok ? "ok" : "MISMATCH") << "\n";
    std::cout << "G tame for the refined stratification: " << tf(r.g_tame_wrt_refined) << "\n";
    std::cout << "conclusions at homotopy level: " << tf(r.homotopy_level) << "\n";
    print_caveats(r.caveats);
}

void print_resources() {
    const ResourceStats& st = usage_stats();
    std::cout << "resources: pairs " << st.peak_pairs << ", degree " << st.peak_degree
              << ", coeff bits " << st.peak_coeff_bits << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial map-germ analysis toolkit"};
    app.require_subcommand(1);

    std::string file, map_name, f_name, g_name, ideal_name, json_path;
    unsigned seed = 0;
    bool strict = false, assert_open = false;
    long long max_pairs = -1, max_coeff_bits = -1;
    int max_degree = -1;

    app.add_flag("--strict", strict, "exit 1 when a checked condition fails");
    app.add_option("--seed", seed, "seed for generic draws (default 0)");
    app.add_option("--max-pairs", max_pairs, "cap on S-pairs per basis computation");
    app.add_option("--max-degree", max_degree, "cap on intermediate total degree");
    app.add_option("--max-coeff-bits", max_coeff_bits, "cap on coefficient bit size");
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_flag("--assert-locally-open", assert_open,
                 "caller asserts the composition is locally open at 0");

    auto* analyze = app.add_subcommand("analyze", "stratifications, Milnor sets, discriminants,"
                                                  " and every verdict the file supports");
    analyze->add_option("file", file, "germ description file")->required();
    analyze->fallthrough();

    auto* tame = app.add_subcommand("tame-check", "tameness of one map");
    tame->add_option("file", file, "germ description file")->required();
    tame->add_option("map", map_name, "map name")->required();
    tame->fallthrough();

    auto* comp = app.add_subcommand("compose-check", "tame composability of G o F");
    comp->add_option("file", file, "germ description file")->required();
    comp->add_option("F", f_name, "inner map")->required();
    comp->add_option("G", g_name, "outer map")->required();
    comp->fallthrough();

    auto* fiber = app.add_subcommand("fiber-report", "fiber topology of the composition G o F");
    fiber->add_option("file", file, "germ description file")->required();
    fiber->add_option("F", f_name, "inner map, two components")->required();
    fiber->add_option("G", g_name, "outer map, one component")->required();
    fiber->fallthrough();

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a named ideal");
    gb->add_option("file", file, "germ description file")->required();
    gb->add_option("ideal", ideal_name, "ideal name")->required();
    gb->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        apply_env_limits();
        auto& lim = current_limits();
        if (max_pairs >= 0) lim.max_pairs = max_pairs;
        if (max_degree >= 0) lim.max_degree = max_degree;
        if (max_coeff_bits >= 0) lim.max_coeff_bits = max_coeff_bits;
        usage_stats().reset();

        GermFile gf = parse_germ_file(read_file(file));

        OrderedJson out;
        out["command"] = app.get_subcommands().front()->get_name();
        out["file"] = file;
        out["seed"] = seed;
        out["input"] = gf.print();

        bool all_ok = true;

        if (*tame) {
            const MapGerm& m = gf.map(map_name);
            auto user = gf.user_stratification(map_name);
            TamenessReport r = user ? is_tame(m, *user) : is_tame(m);
            print_tameness(m, r);
            out["report"] = tameness_to_json(r);
            all_ok = r.tame.holds;
        } else if (*comp) {
            ComposeBundle b = run_compose(gf.map(f_name), gf.map(g_name));
            print_compose(b);
            out["report"] = composability_to_json(b.rep, b.forms, b.corollary);
            all_ok = b.rep.composable.holds;
        } else if (*fiber) {
            FiberReport r = nemethi_report(gf.map(f_name), gf.map(g_name), seed, assert_open);
            print_fiber(r);
            out["report"] = fiber_to_json(r);
            all_ok = r.euler_cross_check_ok;
        } else if (*gb) {
            const Ideal& a = gf.named_ideal(ideal_name);
            const Basis<Rational>& basis = a.groebner();
            std::cout << "ideal " << ideal_name << ", reduced basis ("
                      << basis.elems.size() << " elements):\n";
            OrderedJson elems = OrderedJson::array();
            for (const auto& e : basis.elems) {
                std::cout << "  " << e.str() << "\n";
                elems.push_back(e.str());
            }
            out["report"] = OrderedJson{{"ideal", ideal_name}, {"basis", std::move(elems)}};
        } else if (*analyze) {
            OrderedJson maps_json = OrderedJson::array();
            for (const auto& m : gf.maps) {
                std::cout << "---- " << m.name << " ----\n";
                auto user = gf.user_stratification(m.name);
                TamenessReport r = user ? is_tame(m, *user) : is_tame(m);
                print_tameness(m, r);
                if (!r.tame.holds) all_ok = false;
                GermInclusionVerdict inc = inclusion_21_check(m);
                std::cout << "inclusion (2.1): " << (inc.holds ? "holds" : "FAILS") << "\n";
                Ideal sing = singular_locus_ideal(m);
                Ideal disc = discriminant_ideal(m);
                OrderedJson mj = tameness_to_json(r);
                mj["inclusion-2.1"] = verdict_to_json(inc);
                mj["sing"] = ideal_to_json(sing);
                mj["disc"] = ideal_to_json(disc);
                maps_json.push_back(std::move(mj));
            }
            OrderedJson pairs_json = OrderedJson::array();
            for (size_t i = 0; i < gf.maps.size(); ++i) {
                for (size_t j = 0; j < gf.maps.size(); ++j) {
                    if (i == j) continue;
                    if (!same_ring(gf.maps[j].source, gf.maps[i].target)) continue;
                    std::cout << "---- " << gf.maps[j].name << " o " << gf.maps[i].name
                              << " ----\n";
                    ComposeBundle b = run_compose(gf.maps[i], gf.maps[j]);
                    print_compose(b);
                    if (!b.rep.composable.holds) all_ok = false;
                    TamenessReport th = is_tame(b.rep.h);
                    std::cout << "composition " << b.rep.h.name << ": "
                              << (th.tame.holds ? "TAME" : "NOT TAME") << "\n";
                    if (!th.tame.holds) all_ok = false;
                    OrderedJson pj = composability_to_json(b.rep, b.forms, b.corollary);
                    pj["tame_h"] = tameness_to_json(th);
                    pairs_json.push_back(std::move(pj));
                }
            }
            out["maps"] = std::move(maps_json);
            out["pairs"] = std::move(pairs_json);
        }

        out["resources"] = resource_to_json();
        print_resources();

        if (!json_path.empty()) {
            std::ofstream js(json_path);
            if (!js) throw DomainError("cannot write JSON report to " + json_path);
            js << out.dump(2) << "\n";
        }

        return (strict && !all_ok) ? 1 : 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
