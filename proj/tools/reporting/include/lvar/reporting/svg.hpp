#pragma once

#include <optional>
#include <string>

#include "lvar/distribution.hpp"
#include "lvar/loss_profile.hpp"

namespace lvar::svg {

// Static 800x600 plot of F_P and Lambda with a marker at the violation point.
std::string render(const Cdf& p, const LossProfile& profile, std::optional<double> violation_point);

}  // namespace lvar::svg
