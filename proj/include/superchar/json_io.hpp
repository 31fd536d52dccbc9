#pragma once

#include "superchar/char_series.hpp"
#include "superchar/partition.hpp"
#include "superchar/report.hpp"
#include "superchar/series.hpp"

#include <json.hpp>

namespace superchar {

// Partitions serialize as plain integer arrays, e.g. [6,4,4,2]; [] is the
// zero partition. Exact values serialize as decimal / "p/q" strings.
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CharExpansion& e);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace superchar
