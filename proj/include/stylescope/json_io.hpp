#pragma once

#include <json.hpp>

#include "stylescope/bootstrap.hpp"
#include "stylescope/classify.hpp"
#include "stylescope/synth.hpp"
#include "stylescope/variability.hpp"

namespace stylescope {

// All reports serialize with ordered_json so field order (and therefore the
// emitted bytes) is stable run to run.
using json = nlohmann::ordered_json;

json to_json(const VariabilityReport& r);
json to_json(const CellStats& s);
json to_json(const TrendFit& t);
json to_json(const BootstrapParams& p);
json to_json(const BootstrapComparison& c);
json to_json(const CrossValReport& r);
json to_json(const OutlierReport& r);
json to_json(const NullExperiment& e);
json to_json(const NbModel& m);
json to_json(const LinearModel& m);

} // namespace stylescope
