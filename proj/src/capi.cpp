#include "lensbord.h"

#include <cstdlib>
#include <cstring>
#include <span>

#include "lensbord/json_io.hpp"

using namespace lensbord;

struct lb_changemaker {
    Changemaker value;
};
struct lb_vseq {
    VSequence value;
};
struct lb_sigma_table {
    SigmaTable value;
};

namespace {

thread_local std::string g_last_error;

lb_status to_status(errc code) {
    switch (code) {
        case errc::invalid_argument: return LB_ERR_INVALID;
        case errc::capacity: return LB_ERR_CAPACITY;
        case errc::missing_bound: return LB_ERR_MISSING_BOUND;
        case errc::parse: return LB_ERR_PARSE;
    }
    return LB_ERR_INTERNAL;
}

template <typename Fn>
lb_status guarded(Fn&& fn) {
    try {
        fn();
        return LB_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out_json, const json& j) { *out_json = dup_string(j.dump()); }

Parity to_parity(lb_parity p) { return p == LB_PARITY_ODD ? Parity::odd : Parity::even; }

}  // namespace

extern "C" {

const char* lb_version(void) { return "1.0.0"; }

const char* lb_status_message(lb_status status) {
    switch (status) {
        case LB_OK: return "ok";
        case LB_ERR_INVALID: return "invalid argument";
        case LB_ERR_CAPACITY: return "over capacity bound";
        case LB_ERR_MISSING_BOUND: return "missing required bound";
        case LB_ERR_PARSE: return "malformed JSON";
        case LB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lb_last_error_detail(void) { return g_last_error.c_str(); }

void lb_string_free(char* text) { std::free(text); }

lb_status lb_is_changemaker(const int64_t* entries, size_t count, int* out) {
    return guarded([&] {
        *out = is_changemaker(std::span<const i64>(entries, count)) ? 1 : 0;
    });
}

lb_status lb_changemaker_new(const int64_t* entries, size_t count, lb_changemaker** out) {
    return guarded([&] {
        *out = new lb_changemaker{Changemaker(std::vector<i64>(entries, entries + count))};
    });
}

lb_status lb_changemaker_from_json(const char* json_text, lb_changemaker** out) {
    return guarded([&] { *out = new lb_changemaker{sigma_from_json(parse_json(json_text))}; });
}

void lb_changemaker_free(lb_changemaker* sigma) { delete sigma; }

int64_t lb_changemaker_dim(const lb_changemaker* sigma) { return sigma->value.dim(); }

lb_status lb_changemaker_entry(const lb_changemaker* sigma, int64_t index, int64_t* out) {
    return guarded([&] {
        if (index < 0 || index >= sigma->value.dim())
            fail(errc::invalid_argument, "entry index out of range");
        *out = sigma->value.entries()[static_cast<std::size_t>(index)];
    });
}

int64_t lb_changemaker_p(const lb_changemaker* sigma) { return sigma->value.p(); }
int64_t lb_changemaker_l1(const lb_changemaker* sigma) { return sigma->value.l1(); }
int64_t lb_changemaker_odd_count(const lb_changemaker* sigma) {
    return sigma->value.odd_count();
}

lb_status lb_changemaker_even_equal_partition(const lb_changemaker* sigma, int* out) {
    return guarded([&] { *out = sigma->value.even_equal_partition() ? 1 : 0; });
}

lb_status lb_changemaker_to_json(const lb_changemaker* sigma, char** out_json) {
    return guarded([&] { emit(out_json, to_json(sigma->value)); });
}

lb_status lb_reachable_sums_json(const int64_t* entries, size_t count, char** out_json) {
    return guarded([&] {
        auto sums = reachable_sums(std::span<const i64>(entries, count));
        emit(out_json, json{{"sums", std::vector<i64>(sums.begin(), sums.end())}});
    });
}

lb_status lb_t_sigma(const lb_changemaker* sigma, int64_t coins, int64_t* out) {
    return guarded([&] { *out = t_sigma(sigma->value, coins); });
}

lb_status lb_t_sigma_rational(const lb_changemaker* sigma, int64_t coins, int64_t* out_num,
                              int64_t* out_den) {
    return guarded([&] {
        Rational r = t_sigma_rational(sigma->value, coins);
        *out_num = r.num;
        *out_den = r.den;
    });
}

lb_status lb_count_plans(int64_t coins, uint64_t* out) {
    return guarded([&] { *out = count_plans(coins); });
}

lb_status lb_sigma_table_new(const lb_changemaker* sigma, lb_sigma_table** out) {
    return guarded([&] { *out = new lb_sigma_table{SigmaTable(sigma->value)}; });
}

void lb_sigma_table_free(lb_sigma_table* table) { delete table; }

lb_status lb_sigma_table_value(const lb_sigma_table* table, int64_t index, int64_t* out) {
    return guarded([&] { *out = table->value.value(index); });
}

lb_status lb_sigma_table_to_json(const lb_sigma_table* table, char** out_json) {
    return guarded([&] { emit(out_json, to_json(table->value)); });
}

lb_status lb_verify_structure_json(const lb_changemaker* sigma, int x_max, char** out_json) {
    return guarded([&] { emit(out_json, to_json(verify_structure(sigma->value, x_max))); });
}

lb_status lb_vseq_new(const int64_t* values, size_t count, lb_vseq** out) {
    return guarded([&] {
        *out = new lb_vseq{VSequence(std::vector<i64>(values, values + count))};
    });
}

lb_status lb_vseq_from_json(const char* json_text, lb_vseq** out) {
    return guarded([&] { *out = new lb_vseq{vseq_from_json(parse_json(json_text))}; });
}

lb_status lb_vseq_torus(int64_t p, int64_t q, lb_vseq** out) {
    return guarded([&] { *out = new lb_vseq{torsion_coeffs(torus_alexander(p, q))}; });
}

void lb_vseq_free(lb_vseq* v) { delete v; }

int64_t lb_vseq_nu_plus(const lb_vseq* v) { return v->value.nu_plus(); }

lb_status lb_vseq_value(const lb_vseq* v, int64_t index, int64_t* out) {
    return guarded([&] { *out = v->value.at(index); });
}

lb_status lb_vseq_to_json(const lb_vseq* v, char** out_json) {
    return guarded([&] { emit(out_json, to_json(v->value)); });
}

lb_status lb_torus_alexander_json(int64_t p, int64_t q, char** out_json) {
    return guarded([&] {
        LaurentPoly poly = torus_alexander(p, q);
        VSequence t = torsion_coeffs(poly);
        json j = to_json(poly);
        j["torsion"] = to_json(t);
        j["v"] = t.values();  // directly consumable as a V-sequence form
        emit(out_json, j);
    });
}

lb_status lb_relevant_view_json(const lb_vseq* v, int r, lb_parity p_parity, char** out_json) {
    return guarded([&] { emit(out_json, to_json(RelevantView(v->value, r, to_parity(p_parity)))); });
}

lb_status lb_slope_window_json(int64_t nu_plus, int r, char** out_json) {
    return guarded([&] { emit(out_json, to_json(slope_window(nu_plus, r))); });
}

lb_status lb_v0_slope_check_json(const lb_changemaker* sigma, int r, int64_t v0,
                                 char** out_json) {
    return guarded([&] { emit(out_json, to_json(v0_slope_check(sigma->value, r, v0))); });
}

lb_status lb_reconstruct_json(const lb_vseq* v, int r, lb_parity p_parity, int64_t p_hint,
                              int64_t p_max, char** out_json) {
    return guarded([&] {
        RelevantView view(v->value, r, to_parity(p_parity));
        auto cands = reconstruct_sigma(view,
                                       p_hint > 0 ? std::optional<i64>(p_hint) : std::nullopt,
                                       p_max > 0 ? std::optional<i64>(p_max) : std::nullopt);
        emit(out_json, json{{"candidates", to_json(cands)}});
    });
}

lb_status lb_count_bound(int r, int* out) {
    return guarded([&] { *out = count_bound(r); });
}

lb_status lb_feasible_r_json(const lb_changemaker* sigma, int64_t nu_plus, char** out_json) {
    return guarded([&] {
        auto rs = feasible_r(sigma->value, nu_plus);
        emit(out_json, json{{"r", std::vector<int>(rs.begin(), rs.end())}});
    });
}

lb_status lb_family_sigma(int64_t s, lb_changemaker** out) {
    return guarded([&] { *out = new lb_changemaker{family_sigma(s)}; });
}

lb_status lb_family_recover_json(const lb_vseq* v, int mode, char** out_json) {
    return guarded([&] {
        if (mode != 1 && mode != 2) fail(errc::invalid_argument, "mode must be 1 or 2");
        auto rec = family_recover_s(v->value, mode == 1 ? FamilyMode::r1 : FamilyMode::r_ge2);
        emit(out_json, to_json(rec));
    });
}

lb_status lb_family_checks_json(int64_t s, char** out_json) {
    return guarded([&] { emit(out_json, json{{"checks", to_json(family_checks(s))}}); });
}

lb_status lb_hj_json(int64_t p, int64_t q, char** out_json) {
    return guarded([&] {
        HJExpansion e = hj_expansion(p, q);
        json j = to_json(e);
        GramMatrix g = linear_gram(e);
        j["gram"] = to_json(g);
        j["det"] = gram_det(g);
        emit(out_json, j);
    });
}

lb_status lb_complement_gram_json(const lb_changemaker* sigma, char** out_json) {
    return guarded([&] {
        auto basis = complement_basis(sigma->value);
        json rows = json::array();
        for (const auto& row : basis) rows.push_back(row);
        GramMatrix g = rows_gram(basis);
        emit(out_json,
             json{{"basis", rows}, {"gram", to_json(g)}, {"det", gram_det(g)}});
    });
}

lb_status lb_embed_linear_json(const lb_changemaker* sigma, int64_t p, int64_t q,
                               char** out_json) {
    return guarded([&] {
        auto vertices = embed_linear(sigma->value, p, q);
        if (!vertices) {
            emit(out_json, json{{"embedded", false}});
            return;
        }
        json rows = json::array();
        for (const auto& row : *vertices) rows.push_back(row);
        emit(out_json, json{{"embedded", true}, {"vertices", rows}});
    });
}

lb_status lb_realize_json(const lb_changemaker* sigma, int threads, char** out_json) {
    return guarded([&] {
        emit(out_json, json{{"realizations", to_json(realize(sigma->value, threads))}});
    });
}

lb_status lb_e8_check_json(const char* s_json, const char* sigma_json, char** out_json) {
    return guarded([&] {
        e8::E8Vector s = e8_vector_from_json(parse_json(s_json));
        json jsig = parse_json(sigma_json);
        if (jsig.is_object() && jsig.contains("sigma")) jsig = jsig.at("sigma");
        if (!jsig.is_array()) fail(errc::parse, "sigma must be an array");
        std::vector<i64> sig;
        for (const auto& v : jsig) {
            if (!v.is_number_integer()) fail(errc::parse, "sigma must hold integers");
            sig.push_back(v.get<i64>());
        }
        e8::Tau tau(s, sig);
        auto maxima = e8::pairing_max(tau);
        emit(out_json, json{{"s", to_json(tau.s)},
                            {"sigma", tau.sigma},
                            {"p", tau.p()},
                            {"c", maxima.c},
                            {"C", maxima.C},
                            {"e8_changemaker", e8::is_e8_changemaker(tau)}});
    });
}

lb_status lb_e8_classify(int64_t g, int r, int64_t p, int* out_poincare) {
    return guarded([&] {
        *out_poincare = e8::classify_poincare(g, r, p) == e8::SurgeryHome::poincare ? 1 : 0;
    });
}

lb_status lb_scan_json(const lb_vseq* v, int r_max, int64_t p_max_r1, int threads,
                       char** out_json) {
    return guarded([&] {
        auto report = scan(v->value, r_max,
                           p_max_r1 > 0 ? std::optional<i64>(p_max_r1) : std::nullopt, threads);
        emit(out_json, to_json(report));
    });
}

}  // extern "C"
