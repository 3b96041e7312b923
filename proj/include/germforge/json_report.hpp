#pragma once

#include <json.hpp>

#include "fiber.hpp"
#include "germ_file.hpp"

namespace germ {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson ideal_to_json(const Ideal& a) {
    OrderedJson gens = OrderedJson::array();
    for (const auto& g : a.gens()) gens.push_back(g.str());
    return gens;
}

inline OrderedJson verdict_to_json(const GermInclusionVerdict& v) {
    OrderedJson j;
    j["holds"] = v.holds;
    j["rhs"] = v.rhs_description;
    j["certificate_kind"] = v.certificate_kind;
    j["certificate"] = v.certificate;
    if (v.local_dim != -2) j["local_dim"] = v.local_dim;
    if (v.lhs_ideal.ring()) j["lhs"] = ideal_to_json(v.lhs_ideal);
    if (!v.caveats.empty()) j["caveats"] = v.caveats;
    return j;
}

inline OrderedJson milnor_to_json(const MilnorSetResult& m) {
    OrderedJson j;
    j["union"] = ideal_to_json(m.union_ideal);
    OrderedJson pieces = OrderedJson::array();
    for (const auto& p : m.per_stratum) {
        OrderedJson pj;
        pj["stratum"] = p.stratum.label;
        pj["ideal"] = ideal_to_json(p.ideal);
        pj["restricted_rank"] = p.restricted_rank;
        pj["wholesale"] = p.wholesale;
        pieces.push_back(std::move(pj));
    }
    j["per_stratum"] = std::move(pieces);
    if (!m.caveats.empty()) j["caveats"] = m.caveats;
    return j;
}

inline OrderedJson tameness_to_json(const TamenessReport& r) {
    OrderedJson j;
    j["map"] = r.map_label;
    j["field"] = r.field == Field::complex ? "C" : "R";
    j["tame"] = r.tame.holds;
    if (!r.fast_path.empty()) j["fast_path"] = r.fast_path;
    j["eq-2.2"] = verdict_to_json(r.tame);
    if (!r.stratification_summary.empty()) j["stratification"] = r.stratification_summary;
    if (r.milnor) j["milnor"] = milnor_to_json(*r.milnor);
    if (r.t_ideal) j["t_ideal"] = ideal_to_json(*r.t_ideal);
    if (!r.caveats.empty()) j["caveats"] = r.caveats;
    return j;
}

inline OrderedJson composability_to_json(const ComposabilityReport& r,
                                         const EquivalentFormsReport& forms,
                                         const GermInclusionVerdict& corollary) {
    OrderedJson j;
    j["f"] = r.f.name;
    j["g"] = r.g.name;
    j["h"] = r.h.name;
    j["tamely_composable"] = r.composable.holds;
    j["eq-3.1"] = verdict_to_json(r.composable);
    j["eq-3.2"] = verdict_to_json(forms.with_sing_h);
    j["eq-3.3"] = verdict_to_json(forms.image_form);
    j["forms_lhs_equal"] = forms.lhs_terms_equal;
    j["forms_agree"] = forms.agree;
    j["eq-3.9"] = verdict_to_json(corollary);
    j["milnor_h"] = milnor_to_json(r.milnor_h);
    std::vector<std::string> caveats = r.caveats;
    for (const auto& c : forms.caveats) caveats.push_back(c);
    dedupe_caveats(caveats);
    if (!caveats.empty()) j["caveats"] = caveats;
    return j;
}

inline OrderedJson fiber_to_json(const FiberReport& r) {
    OrderedJson j;
    j["h"] = r.h_label;
    j["n"] = r.n;
    j["field"] = r.field == Field::complex ? "C" : "R";
    j["generic_value"] = r.generic_value;
    j["mu_G"] = r.mu_g;
    j["mu_icis_F"] = r.mu_icis_f;
    j["N"] = r.big_n;
    j["chi_fib_F"] = r.chi_fib_f;
    j["chi_fib_G"] = r.chi_fib_g;
    j["chi_fib_H"] = r.chi_fib_h;
    j["a_g_count"] = r.a_g_count;
    OrderedJson mus = OrderedJson::array();
    for (const auto& pm : r.mu_list) {
        OrderedJson mj;
        mj["point"] = pm.point;
        mj["count"] = pm.count;
        mj["mu"] = pm.mu;
        mus.push_back(std::move(mj));
    }
    j["mu_list"] = std::move(mus);
    OrderedJson pieces = OrderedJson::array();
    for (const auto& p : r.pieces) {
        OrderedJson pj;
        pj["stratum"] = p.stratum;
        pj["fiber_ideal"] = ideal_to_json(p.ideal);
        pj["dim"] = p.dim;
        pj["smooth"] = p.smooth;
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    if (r.mu_h_direct) j["mu_H_direct"] = *r.mu_h_direct;
    j["euler_cross_check_ok"] = r.euler_cross_check_ok;
    j["g_tame_wrt_refined"] = r.g_tame_wrt_refined;
    j["homotopy_level"] = r.homotopy_level;
    if (!r.caveats.empty()) j["caveats"] = r.caveats;
    return j;
}

inline OrderedJson inclusion_to_json(const GermInclusionVerdict& v) {
    OrderedJson j;
    j["inclusion-2.1"] = verdict_to_json(v);
    j["holds"] = v.holds;
    return j;
}

inline OrderedJson resource_to_json() {
    const ResourceStats& st = usage_stats();
    const ResourceLimits& lim = current_limits();
    OrderedJson j;
    j["peak_pairs"] = st.peak_pairs;
    j["peak_degree"] = st.peak_degree;
    j["peak_coeff_bits"] = st.peak_coeff_bits;
    j["max_pairs"] = lim.max_pairs;
    j["max_degree"] = lim.max_degree;
    j["max_coeff_bits"] = lim.max_coeff_bits;
    return j;
}

} // namespace germ
