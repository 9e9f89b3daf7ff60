#include "lensbord/json_io.hpp"

namespace lensbord {

namespace {

std::vector<i64> int_array(const json& j, const char* what) {
    if (!j.is_array()) fail(errc::parse, std::string(what) + " must be an array");
    std::vector<i64> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(errc::parse, std::string(what) + " must hold integers");
        out.push_back(v.get<i64>());
    }
    return out;
}

}  // namespace

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse, "malformed JSON");
    return j;
}

Changemaker sigma_from_json(const json& j) { return Changemaker(raw_sigma_from_json(j)); }

std::vector<i64> raw_sigma_from_json(const json& j) {
    if (j.is_array()) return int_array(j, "sigma");
    if (j.is_object() && j.contains("sigma")) return int_array(j.at("sigma"), "sigma");
    fail(errc::parse, "expected a sigma array or {\"sigma\": [...]}");
}

VSequence vseq_from_json(const json& j) {
    if (j.is_array()) return VSequence(int_array(j, "v"));
    if (j.is_object() && j.contains("v")) return VSequence(int_array(j.at("v"), "v"));
    if (j.is_object() && j.contains("torus")) {
        auto pq = int_array(j.at("torus"), "torus");
        if (pq.size() != 2) fail(errc::parse, "torus spec needs exactly [p, q]");
        return torsion_coeffs(torus_alexander(pq[0], pq[1]));
    }
    fail(errc::parse, "expected {\"v\": [...]} or {\"torus\": [p, q]}");
}

e8::E8Vector e8_vector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8) fail(errc::parse, "E8 vector needs 8 coordinates");
    std::array<i64, 8> twice{};
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& c = j[i];
        if (c.is_number_integer()) {
            twice[i] = 2 * c.get<i64>();
        } else if (c.is_string()) {
            const std::string s = c.get<std::string>();
            const auto slash = s.find('/');
            if (slash == std::string::npos) {
                twice[i] = 2 * std::stoll(s);
            } else {
                const i64 num = std::stoll(s.substr(0, slash));
                const i64 den = std::stoll(s.substr(slash + 1));
                if (den != 2) fail(errc::parse, "half-integer coordinates use denominator 2");
                twice[i] = num;
            }
        } else {
            fail(errc::parse, "coordinates must be integers or \"n/2\" strings");
        }
    }
    return e8::E8Vector::from_twice(twice);
}

json to_json(const Changemaker& sigma) { return json{{"sigma", sigma.entries()}}; }

json to_json(const VSequence& v) { return json{{"v", v.values()}, {"nu_plus", v.nu_plus()}}; }

json to_json(const LaurentPoly& poly) {
    return json{{"degree", poly.degree()}, {"coeffs", poly.coeffs()}};
}

json to_json(const RelevantView& view) {
    std::vector<i64> values;
    for (i64 i = 0; i <= view.nu_plus_rel(); ++i) values.push_back(view.value(i));
    json j{{"r", view.r()},
           {"offset", view.offset()},
           {"v_rel", values},
           {"nu_plus_rel", view.nu_plus_rel()},
           {"parity_used", view.parity_used()}};
    if (view.parity_used()) j["p_parity"] = view.p_parity() == Parity::odd ? "odd" : "even";
    if (view.mu())
        j["mu"] = *view.mu();
    else
        j["mu"] = nullptr;
    return j;
}

json to_json(const SlopeWindow& w) {
    json j{{"r", w.r}, {"slope_min", w.slope_min}, {"p_min", w.p_min}};
    j["slope_max"] = w.slope_max ? json(*w.slope_max) : json(nullptr);
    j["p_max"] = w.p_max ? json(*w.p_max) : json(nullptr);
    j["unbounded"] = !w.slope_max.has_value();
    return j;
}

json to_json(const V0SlopeCheck& check) {
    json j{{"case", check.parity_case}, {"slope", check.slope},    {"lower", check.lower},
           {"upper", check.upper},      {"pass", check.bounds_pass}};
    j["equality_criterion_pass"] =
        check.equality_criterion_pass ? json(*check.equality_criterion_pass) : json(nullptr);
    return j;
}

json to_json(const StructureReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"checks", checks}, {"all_pass", report.all_pass}};
}

json to_json(const SigmaTable& table) {
    return json{{"sigma", table.sigma().entries()},
                {"p", table.sigma().p()},
                {"l1", table.sigma().l1()},
                {"base", table.base()}};
}

json to_json(const HJExpansion& e) {
    return json{{"p", e.p}, {"q", e.q}, {"expansion", e.coeffs}};
}

json to_json(const GramMatrix& g) {
    json rows = json::array();
    for (const auto& row : g) rows.push_back(row);
    return rows;
}

json to_json(const Realization& r) {
    json vertices = json::array();
    for (const auto& v : r.vertices) vertices.push_back(v);
    return json{{"p", r.p},
                {"q", r.q},
                {"q_dual", r.q_dual},
                {"vertices", vertices},
                {"reduced_note", "reducedness not checked"}};
}

json to_json(const std::vector<Realization>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(to_json(r));
    return out;
}

json to_json(const std::vector<SigmaCandidate>& cands) {
    json out = json::array();
    for (const auto& c : cands) out.push_back({{"p", c.p}, {"sigma", c.sigma.entries()}});
    return out;
}

json to_json(const FamilyRecovery& rec) {
    return json{{"band_count", rec.band_count},
                {"plateau_value", rec.plateau_value},
                {"sqrt_floor", rec.sqrt_floor},
                {"candidates", rec.candidates}};
}

json to_json(const std::vector<FamilyCheck>& checks) {
    json out = json::array();
    for (const auto& c : checks)
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"got", c.got}, {"expect", c.expect}});
    return out;
}

json to_json(const e8::E8Vector& v) {
    json coords = json::array();
    for (i64 t : v.twice) {
        if (t % 2 == 0)
            coords.push_back(t / 2);
        else
            coords.push_back(std::to_string(t) + "/2");
    }
    return coords;
}

json to_json(const ScanReport& report) {
    json legs = json::array();
    for (const auto& leg : report.legs) {
        json candidates = json::array();
        for (const auto& c : leg.candidates) {
            json jc{{"p", c.p},
                    {"sigma", c.sigma},
                    {"slope", c.slope},
                    {"slope_window_pass", c.slope_window_pass},
                    {"v0_check", to_json(c.v0_check)},
                    {"realization_checked", c.realization_checked}};
            json reals = json::array();
            for (const auto& r : c.realizations)
                reals.push_back({{"p", r.p}, {"q", r.q}, {"q_dual", r.q_dual}});
            jc["realizations"] = reals;
            jc["reduced_note"] = "reducedness not checked";
            candidates.push_back(std::move(jc));
        }
        json jl{{"r", leg.r}, {"skipped", leg.skipped}, {"candidates", candidates}};
        if (leg.parity) jl["parity"] = *leg.parity == Parity::odd ? "odd" : "even";
        if (leg.skipped) jl["skip_reason"] = leg.skip_reason;
        legs.push_back(std::move(jl));
    }
    json j{{"nu_plus", report.nu_plus}, {"v0", report.v0}, {"r_max", report.r_max},
           {"legs", legs}};
    j["p_max_r1"] = report.p_max_r1 ? json(*report.p_max_r1) : json(nullptr);
    return j;
}

}  // namespace lensbord
