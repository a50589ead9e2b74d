#include "threefield/serialize.hpp"

#include <json.hpp>

namespace threefield {

using nlohmann::json;

std::string series_to_json(const QSeries& s, const std::string& name) {
    json j;
    j["name"] = name;
    j["offset"] = s.offset();
    j["truncation"] = s.truncation();
    // Dense through the truncation; series carrying the "exact everywhere"
    // sentinel emit only their stored prefix (trailing zeros are implied).
    std::int64_t hi = s.truncation();
    if (hi >= QSeries::kUnbounded)
        hi = s.offset() + static_cast<std::int64_t>(s.coeffs().size()) - 1;
    json coeffs = json::array();
    for (std::int64_t n = s.offset(); n <= hi; ++n) coeffs.push_back(s.coeff(n));
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

QSeries series_from_json(const std::string& text) {
    json j = json::parse(text);
    std::int64_t offset = j.at("offset").get<std::int64_t>();
    std::int64_t truncation = j.at("truncation").get<std::int64_t>();
    std::vector<std::int64_t> coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
    return QSeries(offset, truncation, std::move(coeffs));
}

std::string series_to_csv(const QSeries& s, bool nonzero_only) {
    std::string out;
    std::int64_t hi = s.truncation();
    if (hi >= QSeries::kUnbounded)
        hi = s.offset() + static_cast<std::int64_t>(s.coeffs().size()) - 1;
    for (std::int64_t n = nonzero_only ? s.offset() : 0; n <= hi; ++n) {
        std::int64_t c = s.coeff(n);
        if (nonzero_only && c == 0) continue;
        out += std::to_string(n);
        out += ',';
        out += std::to_string(c);
        out += '\n';
    }
    return out;
}

std::string report_to_json(const IdentityReport& rep) {
    json j;
    j["series"] = series_name(rep.kind);
    j["lhs"] = route_name(rep.lhs);
    j["rhs"] = route_name(rep.rhs);
    j["compared_up_to"] = rep.compared_up_to;
    j["equal"] = rep.equal;
    if (rep.mismatch_exponent) {
        j["first_mismatch"] = {{"exponent", *rep.mismatch_exponent},
                               {"lhs_coefficient", rep.mismatch_lhs},
                               {"rhs_coefficient", rep.mismatch_rhs}};
    }
    j["elapsed_seconds"] = rep.elapsed.count();
    return j.dump();
}

namespace {

json rational_json(const Rational& r) {
    if (r.is_integral()) return json(r.num);
    return json(std::to_string(r.num) + "/" + std::to_string(r.den));
}

}  // namespace

std::string sturm_to_json(const SturmBound& sb, std::int64_t level) {
    json j;
    j["level"] = level;
    j["value"] = rational_json(sb.value);
    j["integral"] = sb.integral;
    if (sb.integral) j["bound"] = sb.bound;
    return j.dump();
}

std::string modularity_report_to_json(const ModularityReport& rep) {
    json j;
    j["level"] = rep.level;
    j["weight"] = rational_json(rep.weight);
    j["weight_integral"] = rep.weight_integral;
    j["sum_delta_r"] = rep.sum_delta_r;
    j["sum_level_over_delta_r"] = rep.sum_level_over_delta_r;
    j["sum_delta_r_divisible_by_24"] = rep.sum_delta_ok;
    j["sum_level_over_delta_r_divisible_by_24"] = rep.sum_level_ok;
    json cusps = json::object();
    for (const auto& [d, ord] : rep.cusp_orders) cusps[std::to_string(d)] = rational_json(ord);
    j["cusp_orders"] = std::move(cusps);
    j["vanishes_at_infinity"] = rep.vanishes_at_infinity;
    j["cusp_form"] = rep.cusp_form;
    j["sturm_bound"] = rep.sturm.integral ? json(rep.sturm.bound) : rational_json(rep.sturm.value);
    return j.dump();
}

std::string partition_count_to_json(const ColoredPartitionCount& c) {
    json j;
    j["n"] = c.n;
    j["r_e"] = c.r_e;
    j["r_o"] = c.r_o;
    j["r"] = c.r;
    return j.dump();
}

namespace {

const char* field_name(FieldId f) {
    switch (f) {
        case FieldId::K1: return "K1";
        case FieldId::K2: return "K2";
        case FieldId::K3: return "K3";
    }
    return "?";
}

const char* coset_name(Coset c) {
    switch (c) {
        case Coset::I: return "I";
        case Coset::J: return "J";
        case Coset::B: return "B";
        case Coset::Bp: return "B'";
    }
    return "?";
}

std::string fraction_str(const SmallFraction& f) {
    if (f.den == 1) return std::to_string(f.num);
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

}  // namespace

std::string tables_to_jsonl(const FieldData& field) {
    std::string out;
    for (const auto& row : field.rows) {
        json j;
        j["field_id"] = field_name(row.field_id);
        j["label"] = row.label;
        j["x1"] = fraction_str(row.x1);
        j["y1"] = fraction_str(row.y1);
        j["M"] = row.m;
        j["i"] = row.i;
        j["j"] = row.j;
        j["q_residue"] = row.q_residue;
        j["coset"] = coset_name(row.coset);
        j["principal_form"] = row.principal_form;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace threefield
