#include <doctest.h>

#include <string>

#include "riskexplain/errors.hpp"
#include "riskexplain/prompt.hpp"
#include "riskexplain/text.hpp"

using namespace riskexplain;

namespace {

stats::ProjectBaseline camel_baseline() {
  stats::ProjectBaseline b;
  b.project_name = "Apache Camel";
  b.version = "1.6";
  b.metric_ids = {"cbo", "rfc", "lcom", "wmc"};
  b.metrics["cbo"] = {11.10, 22.52, 965, 0, 448};
  b.metrics["rfc"] = {21.20, 25.00, 965, 5, 119};
  b.metrics["lcom"] = {79.33, 523.75, 965, 0, 10250};
  b.metrics["wmc"] = {8.57, 11.20, 965, 1, 138};
  return b;
}

stats::ProjectBaseline ant_baseline() {
  stats::ProjectBaseline b;
  b.project_name = "Apache Ant";
  b.version = "1.7";
  b.metric_ids = {"cbo", "rfc", "lcom", "wmc"};
  b.metrics["cbo"] = {11.04, 26.34, 745, 0, 606};
  b.metrics["rfc"] = {34.36, 36.02, 745, 5, 196};
  b.metrics["lcom"] = {89.14, 349.93, 745, 0, 6224};
  b.metrics["wmc"] = {11.07, 11.97, 745, 1, 66};
  return b;
}

data::ClassRecord exchange_record() {
  data::ClassRecord r;
  r.class_name = "org.apache.camel.Exchange";
  r.metrics["cbo"] = 448.0;
  r.metrics["rfc"] = 26.0;
  r.metrics["lcom"] = 325.0;
  r.metrics["wmc"] = 26.0;
  r.bug_count = 17;
  return r;
}

data::ClassRecord dispatch_record() {
  data::ClassRecord r;
  r.class_name = "org.apache.tools.ant.dispatch.DispatchTask";
  r.metrics["cbo"] = 3.0;
  r.metrics["rfc"] = 5.0;
  r.metrics["lcom"] = 4.0;
  r.metrics["wmc"] = 4.0;
  r.bug_count = 0;
  return r;
}

const char* kExchangeGolden =
    "Explain the following software metrics for class Exchange.java to a new contributor to "
    "the Apache Camel project.\n"
    "Exchange.java class metrics: CBO=448, RFC=26, LCOM=325, WMC=26\n"
    "Project Context: Apache Camel 1.6 codebase with baseline statistics -- CBO: μ=11.10, "
    "σ=22.52; RFC: μ=21.20, σ=25.00; LCOM: μ=79.33, σ=523.75; WMC: μ=8.57, σ=11.20.\n"
    "\n"
    "Required Analysis: (1) Clear definition of each metric and what it measures, (2) Analysis "
    "of what the Exchange class metrics indicate in this project context, (3) Actionable "
    "improvement suggestions based on the project baselines and Exchange class metrics. Use "
    "clear, actionable language suitable for code review discussions.";

const char* kDispatchGolden =
    "Explain the following software metrics for class DispatchTask.java to a new contributor "
    "to the Apache Ant 1.7 project.\n"
    "DispatchTask.java class metrics: CBO=3, RFC=5, LCOM=4, WMC=4\n"
    "Project Context: Apache Ant 1.7 codebase with baseline statistics -- CBO: μ=11.04, "
    "σ=26.34; RFC: μ=34.36, σ=36.02; LCOM: μ=89.14, σ=349.93; WMC: μ=11.07, σ=11.97.\n"
    "\n"
    "Required Analysis: (1) Clear definition of each metric and what it measures, (2) Analysis "
    "of what the DispatchTask class metrics indicate in this project context, (3) Actionable "
    "improvement suggestions based on the project baselines and DispatchTask class metrics. "
    "Use clear, actionable language suitable for code review discussions.";

}  // namespace

TEST_CASE("frozen golden: high-coupling class with default config") {
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline());
  CHECK(bundle.rendered == kExchangeGolden);
}

TEST_CASE("frozen golden: low-risk class with a versioned project label") {
  prompt::PromptConfig config;
  config.project_label = "Apache Ant 1.7 project";
  auto bundle = prompt::compose_prompt(dispatch_record(), ant_baseline(), config);
  CHECK(bundle.rendered == kDispatchGolden);
}

TEST_CASE("goldens survive the documented normalization") {
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline());
  CHECK(text::normalize_for_comparison(bundle.rendered) ==
        text::normalize_for_comparison(kExchangeGolden));
}

TEST_CASE("composition is deterministic") {
  auto first = prompt::compose_prompt(exchange_record(), camel_baseline());
  auto second = prompt::compose_prompt(exchange_record(), camel_baseline());
  CHECK(first.rendered == second.rendered);
  CHECK(first.component1_context == second.component1_context);
}

TEST_CASE("every component appears contiguously in the rendered layout") {
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline());
  auto pos = [&](const std::string& part) { return bundle.rendered.find(part); };
  auto instruction = pos(bundle.instruction);
  auto metrics = pos(bundle.component2_metrics);
  auto ctx = pos(bundle.component1_context);
  auto requirements = pos(bundle.component3_requirements);
  auto format = pos(bundle.component4_format);
  for (auto p : {instruction, metrics, ctx, requirements, format}) {
    REQUIRE(p != std::string::npos);
  }
  // layout: instruction, class metrics, project context, then the analysis
  // request and the format sentence on one line
  CHECK(instruction < metrics);
  CHECK(metrics < ctx);
  CHECK(ctx < requirements);
  CHECK(requirements < format);
}

TEST_CASE("components carry their defining markers") {
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline());
  CHECK(bundle.component1_context.rfind("Project Context: ", 0) == 0);
  CHECK(bundle.component2_metrics.find(" class metrics: ") != std::string::npos);
  CHECK(bundle.component3_requirements.rfind("Required Analysis: ", 0) == 0);
  CHECK(bundle.component4_format ==
        "Use clear, actionable language suitable for code review discussions.");
}

TEST_CASE("ablation removes every baseline figure") {
  prompt::PromptConfig config;
  config.include_baseline = false;
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline(), config);
  CHECK(bundle.rendered.find("μ=") == std::string::npos);
  CHECK(bundle.rendered.find("σ=") == std::string::npos);
  CHECK(bundle.component1_context == "Project Context: Apache Camel 1.6 codebase.");
  // the metric values themselves stay
  CHECK(bundle.component2_metrics.find("CBO=448") != std::string::npos);
}

TEST_CASE("baseline inclusion carries all eight figures") {
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline());
  std::size_t mu = 0, sigma = 0;
  for (std::size_t at = bundle.rendered.find("μ="); at != std::string::npos;
       at = bundle.rendered.find("μ=", at + 1)) {
    ++mu;
  }
  for (std::size_t at = bundle.rendered.find("σ="); at != std::string::npos;
       at = bundle.rendered.find("σ=", at + 1)) {
    ++sigma;
  }
  CHECK(mu == 4);
  CHECK(sigma == 4);
}

TEST_CASE("metric order override reorders values and baselines together") {
  prompt::PromptConfig config;
  config.metric_order = {"wmc", "cbo"};
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline(), config);
  CHECK(bundle.component2_metrics.find("WMC=26, CBO=448") != std::string::npos);
  CHECK(bundle.component2_metrics.find("RFC") == std::string::npos);
  auto wmc_at = bundle.component1_context.find("WMC:");
  auto cbo_at = bundle.component1_context.find("CBO:");
  REQUIRE(wmc_at != std::string::npos);
  REQUIRE(cbo_at != std::string::npos);
  CHECK(wmc_at < cbo_at);
}

TEST_CASE("audience override lands in the instruction") {
  prompt::PromptConfig config;
  config.audience = "an experienced maintainer";
  auto bundle = prompt::compose_prompt(exchange_record(), camel_baseline(), config);
  CHECK(bundle.instruction.find("to an experienced maintainer to the Apache Camel project.") !=
        std::string::npos);
}

TEST_CASE("a metric missing from the record is dropped from the value list only") {
  auto record = exchange_record();
  record.metrics.erase("lcom");
  auto bundle = prompt::compose_prompt(record, camel_baseline());
  CHECK(bundle.component2_metrics.find("LCOM=") == std::string::npos);
  // project context still describes the full baseline
  CHECK(bundle.component1_context.find("LCOM: μ=79.33") != std::string::npos);
}

TEST_CASE("a record with no explainable values is rejected") {
  data::ClassRecord record;
  record.class_name = "Empty";
  CHECK_THROWS_AS(prompt::compose_prompt(record, camel_baseline()), InputError);
}

TEST_CASE("a requested metric outside the baseline is rejected") {
  prompt::PromptConfig config;
  config.metric_order = {"cbo", "dit"};
  auto record = exchange_record();
  record.metrics["dit"] = 3.0;
  CHECK_THROWS_AS(prompt::compose_prompt(record, camel_baseline(), config), InputError);
}

TEST_CASE("duplicate metric order entries are rejected") {
  prompt::PromptConfig config;
  config.metric_order = {"cbo", "cbo"};
  CHECK_THROWS_AS(config.validate(), InputError);
}
