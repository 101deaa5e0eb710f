#pragma once

#include <string>

#include "soenet/graph.hpp"
#include "soenet/metrics.hpp"

namespace soenet {

/// JSON document for a metrics report. Degree histograms are included as
/// [degree, count] pairs over nonzero counts when `degrees` is given.
std::string metrics_to_json(const MetricsReport& report, const DegreeSummary* degrees = nullptr);

}  // namespace soenet
