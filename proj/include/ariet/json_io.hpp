#pragma once

// JSON and CSV views of library objects. Rationals are exact "p/q" strings;
// every top-level document carries a "schema" tag.

#include <string>
#include <string_view>

#include "ariet/analysis.hpp"
#include "ariet/config.hpp"
#include "ariet/gasket.hpp"
#include "ariet/iet.hpp"
#include "ariet/induction.hpp"
#include "ariet/towers.hpp"
#include "ariet/words.hpp"
#include "json.hpp"

namespace ariet {

using Json = nlohmann::ordered_json;

std::string schema_tag(std::string_view name);  // "ar-iet.<name>/1"

Json to_json(const Rational& r);
Json to_json(const Triple& t);
Json to_json(const Interval& iv);
Json to_json(const IntervalSet& s);
Json to_json(const PartialQuotients& pq);
Json to_json(const GasketRun& run);
Json to_json(const Ar9Map& m);
Json to_json(const Ar6Map& m);
Json to_json(const InductionStage& stage);
Json to_json(const InductionReport& report);
Json to_json(const TowerFamily& f);
Json to_json(const CheckReport& report);
Json to_json(const ComponentCounts& counts);
Json to_json(const XiTerm& term);
Json to_json(const TwmReport& report);
Json to_json(const ConditionReport& report);
Json to_json(const TourabPatterns& patterns);
Json to_json(const EigenScan& scan);
Json to_json(const FrequencyVector& f);
Json to_json(const PreimageReport& report);
Json to_json(const RunConfig& config);

// Wraps `body` as {"schema": ..., <body fields>}.
Json document(std::string_view schema, Json body);

Json error_document(std::string_view kind, std::string_view message, int exit_code);

// letter,count,frequency,decimal
std::string frequency_csv(const FrequencyVector& f);

std::string decimal(const Rational& r, int digits = 10);

}  // namespace ariet
