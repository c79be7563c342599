#pragma once

#include "lspec/chebotarev.hpp"
#include "lspec/volume.hpp"

#include "json.hpp"

namespace lspec {

using Json = nlohmann::ordered_json;

/// Significant digits used for interval midpoints in reports.
constexpr int kReportDigits = 30;

Json to_json(const Interval& x);
Json to_json(const PrimeIdeal& P);
Json to_json(const NumberField& K);
Json to_json(const RamificationSet& ram);
Json to_json(const EmbeddingCertificate& cert);
Json to_json(const CompositumCheck& check);
Json to_json(const GapStatistics& g);
Json to_json(const PrimeTuple& t);
Json to_json(const TorsionCheck& t);
Json to_json(const ZetaValue& z);
Json to_json(const BorelVolume& v);
Json to_json(const GeodesicDatum& g);

}  // namespace lspec
