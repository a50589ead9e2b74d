#ifndef THREEFIELD_SERIALIZE_HPP
#define THREEFIELD_SERIALIZE_HPP

#include <string>

#include "threefield/fields.hpp"
#include "threefield/identity.hpp"
#include "threefield/partitions.hpp"
#include "threefield/qseries.hpp"

namespace threefield {

// {"name": ..., "offset": ..., "truncation": ..., "coeffs": [...]}
// Coefficients are decimal integers, one per exponent offset..truncation.
std::string series_to_json(const QSeries& s, const std::string& name);

QSeries series_from_json(const std::string& text);

// "n,c" lines. With nonzero_only the zero coefficients are skipped
// (natural for the 24-supported Theta-scale series); otherwise every
// exponent 0..truncation appears.
std::string series_to_csv(const QSeries& s, bool nonzero_only);

std::string report_to_json(const IdentityReport& rep);
std::string modularity_report_to_json(const ModularityReport& rep);
std::string sturm_to_json(const SturmBound& sb, std::int64_t level);
std::string partition_count_to_json(const ColoredPartitionCount& c);

// One JSON object per row, newline separated.
std::string tables_to_jsonl(const FieldData& field);

}  // namespace threefield

#endif
