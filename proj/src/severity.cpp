#include "riskexplain/severity.hpp"

#include <fmt/core.h>

#include "riskexplain/errors.hpp"

namespace riskexplain::context {

void SeverityThresholds::validate() const {
  if (!(favorable_below < elevated_at && elevated_at < high_at && high_at < extreme_at)) {
    throw InputError(fmt::format(
        "severity thresholds must be strictly increasing: favorable {} < elevated {} < high {} "
        "< extreme {}",
        favorable_below, elevated_at, high_at, extreme_at));
  }
}

SeverityBand classify_severity(const stats::SigmaDistance& distance,
                               const SeverityThresholds& thresholds) {
  if (!distance.defined) return SeverityBand::no_variance;
  double z = distance.z;
  if (z < thresholds.favorable_below) return SeverityBand::favorable;
  if (z < thresholds.elevated_at) return SeverityBand::typical;
  if (z < thresholds.high_at) return SeverityBand::elevated;
  if (z < thresholds.extreme_at) return SeverityBand::high;
  return SeverityBand::extreme;
}

std::string band_name(SeverityBand band) {
  switch (band) {
    case SeverityBand::favorable: return "favorable";
    case SeverityBand::typical: return "typical";
    case SeverityBand::elevated: return "elevated";
    case SeverityBand::high: return "high";
    case SeverityBand::extreme: return "extreme";
    case SeverityBand::no_variance: return "no-variance";
  }
  return "unknown";
}

SeverityBand band_from_name(const std::string& name) {
  if (name == "favorable") return SeverityBand::favorable;
  if (name == "typical") return SeverityBand::typical;
  if (name == "elevated") return SeverityBand::elevated;
  if (name == "high") return SeverityBand::high;
  if (name == "extreme") return SeverityBand::extreme;
  if (name == "no-variance") return SeverityBand::no_variance;
  throw InputError(fmt::format("unknown severity band '{}'", name));
}

int band_rank(SeverityBand band) {
  switch (band) {
    case SeverityBand::no_variance: return -1;
    case SeverityBand::favorable: return 0;
    case SeverityBand::typical: return 1;
    case SeverityBand::elevated: return 2;
    case SeverityBand::high: return 3;
    case SeverityBand::extreme: return 4;
  }
  return -1;
}

}  // namespace riskexplain::context
