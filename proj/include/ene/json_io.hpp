#pragma once

#include <json.hpp>

#include "ene/analytic.hpp"
#include "ene/series.hpp"
#include "ene/verify.hpp"

namespace ene {

// descriptors mirror the CLI ring flags: Q, Z, Zmod (with modulus),
// C (with epsilon)
nlohmann::ordered_json ring_to_json(const Ring& r);

// {"ring": ..., "order": N, "coeffs": [exact text, ...]}
nlohmann::ordered_json series_to_json(const Series& s);
nlohmann::ordered_json series_to_json(const UnitSeries& s);

nlohmann::ordered_json zeroset_to_json(const ZeroSet& z);
nlohmann::ordered_json report_to_json(const ZeroProductReport& r);
nlohmann::ordered_json report_to_json(const RadiusReport& r);
nlohmann::ordered_json report_to_json(const SuiteReport& r);

}  // namespace ene
