#include "riskexplain/metric.hpp"

#include <fmt/core.h>

#include "riskexplain/text.hpp"

namespace riskexplain::data {

MetricRegistry::MetricRegistry() {
  kinds_ = {
      {"cbo", "CBO", "Coupling Between Objects",
       "Number of other classes this class depends on; higher = more ripple "
       "risk."},
      {"rfc", "RFC", "Response For a Class",
       "Number of methods in the class plus the distinct methods they call; "
       "higher = larger behavioral surface."},
      {"lcom", "LCOM", "Lack of Cohesion of Methods",
       "Degree to which methods work on different state; higher = mixed "
       "responsibilities, lower cohesion."},
      {"wmc", "WMC", "Weighted Methods per Class",
       "Sum of method complexities; higher = more or harder methods to read, "
       "test, and maintain."},
  };
}

const MetricKind& MetricRegistry::by_id(const std::string& id) {
  for (const auto& k : kinds_) {
    if (k.id == id) return k;
  }
  MetricKind synthesized;
  synthesized.id = text::to_lower(id);
  synthesized.acronym = [&] {
    std::string up = id;
    for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return up;
  }();
  synthesized.display_name = synthesized.id;
  synthesized.definition = fmt::format(
      "Measures the {} value recorded for this class in the project dataset; "
      "interpret it relative to the project baseline.",
      synthesized.id);
  kinds_.push_back(std::move(synthesized));
  return kinds_.back();
}

const MetricKind* MetricRegistry::find_by_acronym(const std::string& acronym) const {
  for (const auto& k : kinds_) {
    if (text::to_lower(k.acronym) == text::to_lower(acronym)) return &k;
  }
  return nullptr;
}

bool MetricRegistry::is_core(const std::string& id) const {
  return id == "cbo" || id == "rfc" || id == "lcom" || id == "wmc";
}

std::vector<std::string> MetricRegistry::known_ids() const {
  std::vector<std::string> out;
  out.reserve(kinds_.size());
  for (const auto& k : kinds_) out.push_back(k.id);
  return out;
}

MetricRegistry& metric_registry() {
  static MetricRegistry registry;
  return registry;
}

}  // namespace riskexplain::data
