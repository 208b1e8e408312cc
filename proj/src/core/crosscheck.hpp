#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace pkv {

// Cross-validation of the realification machinery: assembles the curvature of
// the realified model at a rational point by C-bilinear extension of the
// holomorphic mixed table (pure-type components vanish for a Kaehler metric)
// and compares with the realified pipeline exactly. Returns a witness string
// on the first mismatch.
std::optional<std::string> crosscheck_realified_curvature(
    const MetricModel& holo, const TensorField& holo_riem, const MetricModel& realified,
    const TensorField& real_riem, const std::vector<GaussianRational>& x,
    const std::vector<GaussianRational>& y);

}  // namespace pkv
