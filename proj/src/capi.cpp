#include "threefield.h"

#include <cstring>
#include <string>

#include "threefield/fields.hpp"
#include "threefield/identity.hpp"
#include "threefield/serialize.hpp"

using namespace threefield;

struct tf_series {
    QSeries value;
};

namespace {

thread_local std::string g_last_error;

tf_status fail(tf_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
tf_status guarded(Fn&& fn) {
    try {
        fn();
        return TF_OK;
    } catch (const ArithmeticOverflow& e) {
        return fail(TF_ERR_OVERFLOW, e.what());
    } catch (const DataError& e) {
        // support violations surface as DataError with the offending exponent
        std::string what = e.what();
        return fail(what.find("support") != std::string::npos ? TF_ERR_SUPPORT : TF_ERR_DATA, what);
    } catch (const InvalidInput& e) {
        return fail(TF_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(TF_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::map<std::int64_t, std::int64_t> parse_quotient(const std::string& text) {
    std::map<std::int64_t, std::int64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("eta quotient entries look like delta:exponent");
        std::int64_t delta = 0, r = 0;
        try {
            std::size_t used = 0;
            delta = std::stoll(item.substr(0, colon), &used);
            if (used != colon) throw InvalidInput("");
            std::string rtext = item.substr(colon + 1);
            r = std::stoll(rtext, &used);
            if (used != rtext.size()) throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("bad eta quotient entry: " + item);
        }
        if (!out.emplace(delta, r).second)
            throw InvalidInput("duplicate delta in eta quotient: " + std::to_string(delta));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw InvalidInput("empty eta quotient");
    return out;
}

}  // namespace

extern "C" {

const char* tf_version(void) { return "1.0.0"; }

const char* tf_last_error(void) { return g_last_error.c_str(); }

tf_status tf_series_compute(const char* series, const char* route, int64_t terms,
                            tf_series** out) {
    if (!series || !route || !out) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        auto kind = series_from_name(series);
        if (!kind) throw InvalidInput(std::string("unknown series: ") + series);
        auto r = route_from_name(route);
        if (!r) throw InvalidInput(std::string("unknown route: ") + route);
        if (terms < 0) throw InvalidInput("terms must be >= 0");
        *out = new tf_series{compute_series(*kind, *r, terms)};
    });
}

void tf_series_free(tf_series* s) { delete s; }

tf_status tf_sigma_hypergeometric(int64_t terms, const char* convention, tf_series** out) {
    if (!convention || !out) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        std::string c(convention);
        SigmaConvention conv;
        if (c == "triangular") conv = SigmaConvention::TriangularExponent;
        else if (c == "binomial") conv = SigmaConvention::BinomialExponent;
        else throw InvalidInput("convention must be triangular or binomial");
        if (terms < 0) throw InvalidInput("terms must be >= 0");
        *out = new tf_series{sigma_hypergeometric(terms, conv)};
    });
}

int64_t tf_series_offset(const tf_series* s) { return s ? s->value.offset() : 0; }

int64_t tf_series_truncation(const tf_series* s) { return s ? s->value.truncation() : -1; }

tf_status tf_series_coeff(const tf_series* s, int64_t n, int64_t* out) {
    if (!s || !out) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] { *out = s->value.coeff(n); });
}

tf_status tf_series_to_json(const tf_series* s, const char* name, char** out) {
    if (!s || !out) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] { *out = dup_string(series_to_json(s->value, name ? name : "series")); });
}

tf_status tf_series_to_csv(const tf_series* s, int nonzero_only, char** out) {
    if (!s || !out) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] { *out = dup_string(series_to_csv(s->value, nonzero_only != 0)); });
}

void tf_string_free(char* s) { delete[] s; }

tf_status tf_verify(const char* series, const char* lhs_route, const char* rhs_route,
                    int64_t terms, int* equal, char** report_json) {
    if (!series || !lhs_route || !rhs_route || !equal) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        auto kind = series_from_name(series);
        if (!kind) throw InvalidInput(std::string("unknown series: ") + series);
        auto lr = route_from_name(lhs_route);
        auto rr = route_from_name(rhs_route);
        if (!lr || !rr) throw InvalidInput("unknown route name");
        if (terms < 0) throw InvalidInput("terms must be >= 0");
        IdentityReport rep = verify(*kind, *lr, *rr, terms);
        *equal = rep.equal ? 1 : 0;
        if (report_json) *report_json = dup_string(report_to_json(rep));
    });
}

tf_status tf_sigma_identity_check(int64_t terms, int* equal, char** report_json) {
    if (!equal) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        if (terms < 0) throw InvalidInput("terms must be >= 0");
        IdentityReport rep = sigma_identity_check(terms);
        *equal = rep.equal ? 1 : 0;
        if (report_json) *report_json = dup_string(report_to_json(rep));
    });
}

tf_status tf_sturm_scale_check(int64_t theta_terms, int* equal, char** report_json) {
    if (!equal) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        if (theta_terms < 0) throw InvalidInput("theta_terms must be >= 0");
        IdentityReport rep = sturm_scale_check(theta_terms);
        *equal = rep.equal ? 1 : 0;
        if (report_json) *report_json = dup_string(report_to_json(rep));
    });
}

tf_status tf_sturm_bound(int64_t level, char** report_json) {
    if (!report_json) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] { *report_json = dup_string(sturm_to_json(sturm_bound(level), level)); });
}

tf_status tf_eta_check(const char* quotient, int64_t level, char** report_json) {
    if (!quotient || !report_json) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        auto exps = parse_quotient(quotient);
        *report_json = dup_string(modularity_report_to_json(eta_quotient_checks(exps, level)));
    });
}

tf_status tf_tables(const char* field, char** jsonl) {
    if (!field || !jsonl) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        std::string name(field);
        std::string out;
        if (name == "k1" || name == "all") out += tables_to_jsonl(field_k1());
        if (name == "k2" || name == "all") out += tables_to_jsonl(field_k2());
        if (name == "k3" || name == "all") out += tables_to_jsonl(field_k3());
        if (out.empty()) throw InvalidInput("unknown field: " + name + " (use k1|k2|k3|all)");
        *jsonl = dup_string(out);
    });
}

tf_status tf_partition_counts(int64_t n, char** json) {
    if (!json) return fail(TF_ERR_INVALID, "null argument");
    return guarded([&] {
        *json = dup_string(partition_count_to_json(colored_partition_counts(n)));
    });
}

}  // extern "C"
