#pragma once

#include <string>

#include "riskexplain/stats.hpp"

namespace riskexplain::context {

// Total order favorable < typical < elevated < high < extreme drives overall
// band selection and report ordering. no_variance sits outside the order and
// is ignored when aggregating.
enum class SeverityBand { favorable, typical, elevated, high, extreme, no_variance };

// Half-open intervals over z; each boundary value belongs to the higher band:
//   z <  favorable_below            -> favorable
//   favorable_below <= z < elevated -> typical
//   elevated <= z < high            -> elevated
//   high <= z < extreme             -> high
//   z >= extreme                    -> extreme
struct SeverityThresholds {
  double favorable_below = -0.25;
  double elevated_at = 1.0;
  double high_at = 2.0;
  double extreme_at = 4.0;

  // Throws InputError unless favorable_below < elevated_at < high_at < extreme_at.
  void validate() const;
};

SeverityBand classify_severity(const stats::SigmaDistance& distance,
                               const SeverityThresholds& thresholds = {});

std::string band_name(SeverityBand band);  // "favorable" ... "no-variance"

// Inverse of band_name; throws InputError on an unknown name.
SeverityBand band_from_name(const std::string& name);

// Position in the total order; no_variance maps below favorable so that
// descending sorts push it last.
int band_rank(SeverityBand band);

}  // namespace riskexplain::context
