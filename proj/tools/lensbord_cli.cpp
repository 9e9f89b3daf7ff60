// Command-line front end. Everything goes through the public C API in
// lensbord.h; this translation unit never touches the C++ core directly.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lensbord.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json_output = false;
    int threads = 1;

    int effective_threads() const {
        if (threads != 0) return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

[[noreturn]] void die(lb_status status) {
    std::cerr << "error: " << lb_status_message(status);
    const char* detail = lb_last_error_detail();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(kExitUsage);
}

void check(lb_status status) {
    if (status != LB_OK) die(status);
}

// Inline JSON, or @file, or a bare filename ending in .json.
std::string load_spec(const std::string& arg) {
    std::string path;
    if (!arg.empty() && arg[0] == '@')
        path = arg.substr(1);
    else if (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0)
        path = arg;
    if (path.empty()) return arg;
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json take_json(char* text) {
    json j = json::parse(text);
    lb_string_free(text);
    return j;
}

struct ChangemakerHandle {
    lb_changemaker* ptr = nullptr;
    ~ChangemakerHandle() { lb_changemaker_free(ptr); }
};

struct VseqHandle {
    lb_vseq* ptr = nullptr;
    ~VseqHandle() { lb_vseq_free(ptr); }
};

void print_checks(const json& checks) {
    for (const auto& c : checks) {
        std::cout << (c.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
                  << c.at("name").get<std::string>();
        if (c.contains("got")) std::cout << "  got=" << c.at("got") << " expect=" << c.at("expect");
        if (c.contains("detail") && !c.at("detail").get<std::string>().empty())
            std::cout << "  " << c.at("detail").get<std::string>();
        std::cout << "\n";
    }
}

int emit(const Options& opt, const json& j, bool ok, const std::string& human) {
    if (opt.json_output)
        std::cout << j.dump() << "\n";
    else
        std::cout << human << "\n";
    return ok ? kExitOk : kExitNoResult;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Changemaker vectors, slope bounds, and lens-space lattice tools"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "machine-readable JSON output");
    app.add_option("--threads", opt.threads, "worker threads (0 = hardware)")->default_val(1);

    int exit_code = kExitOk;

    // changemaker check
    auto* cm = app.add_subcommand("changemaker", "changemaker predicates");
    auto* cm_check = cm->add_subcommand("check", "test the subset-sum condition");
    std::string cm_spec;
    cm_check->add_option("sigma", cm_spec, "JSON array or {\"sigma\": [...]} or @file")
        ->required();
    cm_check->callback([&] {
        json spec = json::parse(load_spec(cm_spec), nullptr, false);
        if (spec.is_discarded()) die(LB_ERR_PARSE);
        if (spec.is_object() && spec.contains("sigma")) spec = spec.at("sigma");
        if (!spec.is_array()) die(LB_ERR_PARSE);
        std::vector<std::int64_t> entries;
        for (const auto& v : spec) {
            if (!v.is_number_integer()) die(LB_ERR_PARSE);
            entries.push_back(v.get<std::int64_t>());
        }
        int flag = 0;
        check(lb_is_changemaker(entries.data(), entries.size(), &flag));
        json out{{"changemaker", flag != 0}};
        std::string human = "changemaker: no";
        if (flag) {
            lb_changemaker* h = nullptr;
            check(lb_changemaker_new(entries.data(), entries.size(), &h));
            ChangemakerHandle guard{h};
            char* text = nullptr;
            check(lb_changemaker_to_json(h, &text));
            out = take_json(text);
            out["changemaker"] = true;
            out["p"] = lb_changemaker_p(h);
            out["l1"] = lb_changemaker_l1(h);
            out["odd"] = lb_changemaker_odd_count(h);
            int part = 0;
            check(lb_changemaker_even_equal_partition(h, &part));
            out["even_equal_partition"] = part != 0;
            std::ostringstream os;
            os << "changemaker: yes  p=" << out["p"] << " l1=" << out["l1"]
               << " odd=" << out["odd"];
            human = os.str();
        }
        exit_code = emit(opt, out, flag != 0, human);
    });

    // coin t-sigma | v-sigma | count-plans
    auto* coin = app.add_subcommand("coin", "coin-game optimizer");
    auto* coin_t = coin->add_subcommand("t-sigma", "exact and rational optima");
    std::string coin_sigma;
    std::int64_t coin_m = 0;
    coin_t->add_option("--sigma", coin_sigma)->required();
    coin_t->add_option("-m,--coins", coin_m)->required();
    coin_t->callback([&] {
        lb_changemaker* h = nullptr;
        check(lb_changemaker_from_json(load_spec(coin_sigma).c_str(), &h));
        ChangemakerHandle guard{h};
        std::int64_t best = 0, num = 0, den = 1;
        check(lb_t_sigma(h, coin_m, &best));
        check(lb_t_sigma_rational(h, coin_m, &num, &den));
        json out{{"m", coin_m},
                 {"t_sigma", best},
                 {"t_sigma_rational", std::to_string(num) + "/" + std::to_string(den)}};
        std::ostringstream os;
        os << "T(" << coin_m << ") = " << best << "   rational relaxation = " << num << "/"
           << den;
        exit_code = emit(opt, out, true, os.str());
    });

    auto* coin_v = coin->add_subcommand("v-sigma", "staircase values");
    std::string vsig_sigma;
    std::int64_t vsig_index = -1;
    coin_v->add_option("--sigma", vsig_sigma)->required();
    coin_v->add_option("-i,--index", vsig_index, "single index (otherwise the base table)");
    coin_v->callback([&] {
        lb_changemaker* h = nullptr;
        check(lb_changemaker_from_json(load_spec(vsig_sigma).c_str(), &h));
        ChangemakerHandle guard{h};
        lb_sigma_table* table = nullptr;
        check(lb_sigma_table_new(h, &table));
        if (vsig_index >= 0) {
            std::int64_t value = 0;
            check(lb_sigma_table_value(table, vsig_index, &value));
            lb_sigma_table_free(table);
            json out{{"index", vsig_index}, {"value", value}};
            exit_code = emit(opt, out, true,
                             "V(" + std::to_string(vsig_index) + ") = " + std::to_string(value));
        } else {
            char* text = nullptr;
            check(lb_sigma_table_to_json(table, &text));
            lb_sigma_table_free(table);
            json out = take_json(text);
            std::ostringstream os;
            os << "base staircase:";
            for (const auto& v : out.at("base")) os << " " << v;
            exit_code = emit(opt, out, true, os.str());
        }
    });

    auto* coin_count = coin->add_subcommand("count-plans", "number of purchase plans");
    std::int64_t count_m = 0;
    coin_count->add_option("coins", count_m)->required();
    coin_count->callback([&] {
        std::uint64_t n = 0;
        check(lb_count_plans(count_m, &n));
        json out{{"m", count_m}, {"count", n}};
        exit_code = emit(opt, out, true,
                         "plans with at most " + std::to_string(count_m) + " coins: " +
                             std::to_string(n));
    });

    auto* coin_verify = coin->add_subcommand("verify", "staircase structure identities");
    std::string verify_sigma;
    int verify_x = 2;
    coin_verify->add_option("--sigma", verify_sigma)->required();
    coin_verify->add_option("--x-max", verify_x)->default_val(2);
    coin_verify->callback([&] {
        lb_changemaker* h = nullptr;
        check(lb_changemaker_from_json(load_spec(verify_sigma).c_str(), &h));
        ChangemakerHandle guard{h};
        char* text = nullptr;
        check(lb_verify_structure_json(h, verify_x, &text));
        json out = take_json(text);
        bool ok = out.at("all_pass").get<bool>();
        if (!opt.json_output) print_checks(out.at("checks"));
        if (opt.json_output) std::cout << out.dump() << "\n";
        exit_code = ok ? kExitOk : kExitNoResult;
    });

    // knot torus | view
    auto* knot = app.add_subcommand("knot", "knot invariants");
    auto* knot_torus = knot->add_subcommand("torus", "torus-knot polynomial and coefficients");
    std::int64_t tp = 0, tq = 0;
    knot_torus->add_option("p", tp)->required();
    knot_torus->add_option("q", tq)->required();
    knot_torus->callback([&] {
        char* text = nullptr;
        check(lb_torus_alexander_json(tp, tq, &text));
        json out = take_json(text);
        std::ostringstream os;
        os << "genus " << out.at("degree") << ", coefficients:";
        for (const auto& v : out.at("torsion").at("v")) os << " " << v;
        exit_code = emit(opt, out, true, os.str());
    });

    auto* knot_view = knot->add_subcommand("view", "relevant subsequence at spacing r");
    std::string view_v;
    int view_r = 1;
    std::string view_parity = "odd";
    knot_view->add_option("--v", view_v)->required();
    knot_view->add_option("--r", view_r)->required();
    knot_view->add_option("--parity", view_parity)->check(CLI::IsMember({"odd", "even"}));
    knot_view->callback([&] {
        lb_vseq* v = nullptr;
        check(lb_vseq_from_json(load_spec(view_v).c_str(), &v));
        VseqHandle guard{v};
        char* text = nullptr;
        check(lb_relevant_view_json(
            v, view_r, view_parity == "odd" ? LB_PARITY_ODD : LB_PARITY_EVEN, &text));
        json out = take_json(text);
        std::ostringstream os;
        os << "relevant values:";
        for (const auto& x : out.at("v_rel")) os << " " << x;
        exit_code = emit(opt, out, true, os.str());
    });

    // surgery window | reconstruct | family recover | family verify
    auto* surgery = app.add_subcommand("surgery", "slope bounds and reconstruction");
    auto* sw = surgery->add_subcommand("window", "admissible slope window");
    std::int64_t sw_nu = 0;
    int sw_r = 1;
    sw->add_option("--nu-plus", sw_nu)->required();
    sw->add_option("--r", sw_r)->required();
    sw->callback([&] {
        char* text = nullptr;
        check(lb_slope_window_json(sw_nu, sw_r, &text));
        json out = take_json(text);
        std::ostringstream os;
        os << "slope in [" << out.at("slope_min") << ", "
           << (out.at("slope_max").is_null() ? std::string("inf")
                                             : out.at("slope_max").dump())
           << "]";
        exit_code = emit(opt, out, true, os.str());
    });

    auto* sr = surgery->add_subcommand("reconstruct", "changemakers matching a V-sequence");
    std::string sr_v, sr_parity = "odd";
    int sr_r = 1;
    std::int64_t sr_phint = 0, sr_pmax = 0;
    sr->add_option("--v", sr_v)->required();
    sr->add_option("--r", sr_r)->required();
    sr->add_option("--parity", sr_parity)->check(CLI::IsMember({"odd", "even"}));
    sr->add_option("--p-hint", sr_phint);
    sr->add_option("--p-max", sr_pmax);
    sr->callback([&] {
        lb_vseq* v = nullptr;
        check(lb_vseq_from_json(load_spec(sr_v).c_str(), &v));
        VseqHandle guard{v};
        char* text = nullptr;
        check(lb_reconstruct_json(v, sr_r, sr_parity == "odd" ? LB_PARITY_ODD : LB_PARITY_EVEN,
                                  sr_phint, sr_pmax, &text));
        json out = take_json(text);
        const auto& cands = out.at("candidates");
        std::ostringstream os;
        os << cands.size() << " candidate(s)";
        for (const auto& c : cands) os << "  p=" << c.at("p") << " sigma=" << c.at("sigma").dump();
        exit_code = emit(opt, out, !cands.empty(), os.str());
    });

    auto* family = surgery->add_subcommand("family", "the four-entry family with trailing ones");
    auto* fr = family->add_subcommand("recover", "recover the parameter from a V-sequence");
    std::string fr_v, fr_mode = "r1";
    fr->add_option("--v", fr_v)->required();
    fr->add_option("--mode", fr_mode)->check(CLI::IsMember({"r1", "rge2"}));
    fr->callback([&] {
        lb_vseq* v = nullptr;
        check(lb_vseq_from_json(load_spec(fr_v).c_str(), &v));
        VseqHandle guard{v};
        char* text = nullptr;
        check(lb_family_recover_json(v, fr_mode == "r1" ? 1 : 2, &text));
        json out = take_json(text);
        const auto& cands = out.at("candidates");
        std::ostringstream os;
        os << "candidates:";
        for (const auto& c : cands) os << " " << c;
        exit_code = emit(opt, out, !cands.empty(), os.str());
    });

    auto* fv = family->add_subcommand("verify", "optimizer checks for a given parameter");
    std::int64_t fv_s = 5;
    fv->add_option("s", fv_s)->required();
    fv->callback([&] {
        char* text = nullptr;
        check(lb_family_checks_json(fv_s, &text));
        json out = take_json(text);
        bool ok = true;
        for (const auto& c : out.at("checks")) ok = ok && c.at("pass").get<bool>();
        if (opt.json_output)
            std::cout << out.dump() << "\n";
        else
            print_checks(out.at("checks"));
        exit_code = ok ? kExitOk : kExitNoResult;
    });

    // lattice hj | realize | complement | embed
    auto* lattice = app.add_subcommand("lattice", "lens-space lattices");
    auto* lh = lattice->add_subcommand("hj", "continued-fraction expansion");
    std::int64_t lh_p = 0, lh_q = 0;
    lh->add_option("p", lh_p)->required();
    lh->add_option("q", lh_q)->required();
    lh->callback([&] {
        char* text = nullptr;
        check(lb_hj_json(lh_p, lh_q, &text));
        json out = take_json(text);
        std::ostringstream os;
        os << lh_p << "/" << lh_q << " = " << out.at("expansion").dump()
           << "  det " << out.at("det");
        exit_code = emit(opt, out, true, os.str());
    });

    auto* lc = lattice->add_subcommand("complement", "orthogonal complement basis");
    std::string lc_sigma;
    lc->add_option("--sigma", lc_sigma)->required();
    lc->callback([&] {
        lb_changemaker* h = nullptr;
        check(lb_changemaker_from_json(load_spec(lc_sigma).c_str(), &h));
        ChangemakerHandle guard{h};
        char* text = nullptr;
        check(lb_complement_gram_json(h, &text));
        json out = take_json(text);
        exit_code = emit(opt, out, true, "det " + out.at("det").dump());
    });

    auto* le = lattice->add_subcommand("embed", "embed one linear lattice");
    std::string le_sigma;
    std::int64_t le_p = 0, le_q = 0;
    le->add_option("--sigma", le_sigma)->required();
    le->add_option("p", le_p)->required();
    le->add_option("q", le_q)->required();
    le->callback([&] {
        lb_changemaker* h = nullptr;
        check(lb_changemaker_from_json(load_spec(le_sigma).c_str(), &h));
        ChangemakerHandle guard{h};
        char* text = nullptr;
        check(lb_embed_linear_json(h, le_p, le_q, &text));
        json out = take_json(text);
        bool ok = out.at("embedded").get<bool>();
        exit_code = emit(opt, out, ok, ok ? "embedded" : "no embedding");
    });

    auto* lr = lattice->add_subcommand("realize", "all realized lens parameters");
    std::string lr_sigma;
    lr->add_option("--sigma", lr_sigma)->required();
    lr->callback([&] {
        lb_changemaker* h = nullptr;
        check(lb_changemaker_from_json(load_spec(lr_sigma).c_str(), &h));
        ChangemakerHandle guard{h};
        char* text = nullptr;
        check(lb_realize_json(h, opt.effective_threads(), &text));
        json out = take_json(text);
        const auto& rs = out.at("realizations");
        std::ostringstream os;
        os << rs.size() << " realization(s):";
        for (const auto& r : rs) os << " (" << r.at("p") << "," << r.at("q") << ")";
        exit_code = emit(opt, out, !rs.empty(), os.str());
    });

    // e8 check | classify
    auto* e8cmd = app.add_subcommand("e8", "E8-side predicates");
    auto* ec = e8cmd->add_subcommand("check", "E8-changemaker test");
    std::string ec_s, ec_sigma;
    ec->add_option("--s", ec_s, "8 coordinates, halves as \"n/2\"")->required();
    ec->add_option("--sigma", ec_sigma, "non-negative integers, zeros allowed")->required();
    ec->callback([&] {
        char* text = nullptr;
        check(lb_e8_check_json(load_spec(ec_s).c_str(), load_spec(ec_sigma).c_str(), &text));
        json out = take_json(text);
        bool ok = out.at("e8_changemaker").get<bool>();
        std::ostringstream os;
        os << "p=" << out.at("p") << " c=" << out.at("c") << " C=" << out.at("C")
           << "  e8-changemaker: " << (ok ? "yes" : "no");
        exit_code = emit(opt, out, ok, os.str());
    });

    auto* ecl = e8cmd->add_subcommand("classify", "threshold home of a realized surgery");
    std::int64_t ecl_g = 0, ecl_p = 0;
    int ecl_r = 1;
    ecl->add_option("--genus", ecl_g)->required();
    ecl->add_option("--r", ecl_r)->required();
    ecl->add_option("--p", ecl_p)->required();
    ecl->callback([&] {
        int poincare = 0;
        check(lb_e8_classify(ecl_g, ecl_r, ecl_p, &poincare));
        json out{{"home", poincare ? "poincare" : "s3"}};
        exit_code = emit(opt, out, true, poincare ? "poincare" : "s3");
    });

    // scan
    auto* sc = app.add_subcommand("scan", "full pipeline over a knot");
    std::string sc_knot;
    int sc_rmax = 2;
    std::int64_t sc_pmax = 0;
    sc->add_option("--knot", sc_knot, "{\"torus\": [p,q]} or {\"v\": [...]} or @file")
        ->required();
    sc->add_option("--r-max", sc_rmax)->default_val(2);
    sc->add_option("--p-max", sc_pmax, "p bound for the r=1 leg");
    sc->callback([&] {
        lb_vseq* v = nullptr;
        check(lb_vseq_from_json(load_spec(sc_knot).c_str(), &v));
        VseqHandle guard{v};
        char* text = nullptr;
        check(lb_scan_json(v, sc_rmax, sc_pmax, opt.effective_threads(), &text));
        json out = take_json(text);
        bool any = false;
        std::ostringstream os;
        for (const auto& leg : out.at("legs")) {
            os << "r=" << leg.at("r").get<int>();
            if (leg.contains("parity")) os << " (p " << leg.at("parity").get<std::string>() << ")";
            if (leg.at("skipped").get<bool>()) {
                os << ": skipped, " << leg.at("skip_reason").get<std::string>() << "\n";
                continue;
            }
            os << ":";
            for (const auto& c : leg.at("candidates")) {
                any = true;
                os << " slope=" << c.at("slope") << " p=" << c.at("p")
                   << " sigma=" << c.at("sigma").dump();
                os << " lens=[";
                bool first = true;
                for (const auto& r : c.at("realizations")) {
                    if (!first) os << " ";
                    first = false;
                    os << "(" << r.at("p") << "," << r.at("q") << ")";
                }
                os << "]";
            }
            os << "\n";
        }
        std::string human = os.str();
        if (!human.empty() && human.back() == '\n') human.pop_back();
        exit_code = emit(opt, out, any, human);
    });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
