// Acceptance gate: ten end-to-end criteria, one [PASS]/[FAIL] line each.
// Exits nonzero when any criterion fails. Tolerances are pinned here, next
// to the checks that use them.

#include <fmt/core.h>

#include <httplib.h>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "riskexplain/assess.hpp"
#include "riskexplain/backend.hpp"
#include "riskexplain/cache.hpp"
#include "riskexplain/errors.hpp"
#include "riskexplain/offline.hpp"
#include "riskexplain/pipeline.hpp"
#include "riskexplain/prompt.hpp"
#include "riskexplain/remote.hpp"
#include "riskexplain/report.hpp"
#include "riskexplain/severity.hpp"
#include "riskexplain/stats.hpp"
#include "riskexplain/taxonomy.hpp"
#include "riskexplain/text.hpp"

namespace rx = riskexplain;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_data_dir;
std::string g_cli_path;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rx::pipeline::LoadedProject load(const std::string& file, const std::string& project_name) {
  rx::config::RunConfig c;
  c.dataset_path = g_data_dir + "/" + file;
  c.project_name = project_name;
  return rx::pipeline::load_project(c);
}

const rx::data::ClassRecord* find_record(const rx::data::ProjectDataset& dataset,
                                         const std::string& name) {
  for (const auto& r : dataset.records) {
    if (r.class_name == name) return &r;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// criterion 1: baseline statistics and defect rates on both corpora
// ---------------------------------------------------------------------------

struct ReferenceStats {
  const char* metric;
  double mean;
  double std_dev;
};

bool check_corpus(const std::string& file, const std::string& name,
                  const std::vector<ReferenceStats>& reference, std::size_t classes,
                  std::size_t buggy, double rate, std::string& detail) {
  auto project = load(file, name);
  auto summary = rx::data::dataset_summary(project.dataset);
  if (summary.class_count != classes || summary.buggy_count != buggy) {
    detail = fmt::format("{}: {} classes / {} buggy, expected {}/{}", name, summary.class_count,
                         summary.buggy_count, classes, buggy);
    return false;
  }
  constexpr double kRateTolerance = 0.001;  // one tenth of a percentage point
  if (std::fabs(summary.buggy_rate - rate) > kRateTolerance) {
    detail = fmt::format("{}: buggy rate {:.4f}, expected {:.4f}", name, summary.buggy_rate, rate);
    return false;
  }
  constexpr double kRelativeTolerance = 0.01;  // 1% on every mean and std dev
  for (const auto& ref : reference) {
    const auto* s = project.baseline.stats_for(ref.metric);
    if (s == nullptr) {
      detail = fmt::format("{}: no stats for {}", name, ref.metric);
      return false;
    }
    if (std::fabs(s->mean - ref.mean) / ref.mean > kRelativeTolerance ||
        std::fabs(s->std_dev - ref.std_dev) / ref.std_dev > kRelativeTolerance) {
      detail = fmt::format("{}: {} = {:.2f}/{:.2f}, expected {:.2f}/{:.2f}", name, ref.metric,
                           s->mean, s->std_dev, ref.mean, ref.std_dev);
      return false;
    }
  }
  return true;
}

bool criterion_baselines(std::string& detail) {
  auto start = Clock::now();
  const std::vector<ReferenceStats> camel = {
      {"cbo", 11.10, 22.52}, {"rfc", 21.20, 25.00}, {"lcom", 79.33, 523.75}, {"wmc", 8.57, 11.20}};
  const std::vector<ReferenceStats> ant = {
      {"cbo", 11.04, 26.34}, {"rfc", 34.36, 36.02}, {"lcom", 89.14, 349.93}, {"wmc", 11.07, 11.97}};
  if (!check_corpus("camel16.csv", "Apache Camel", camel, 965, 188, 0.195, detail)) return false;
  if (!check_corpus("ant17.csv", "Apache Ant", ant, 745, 166, 0.223, detail)) return false;
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    detail = fmt::format("took {:.2f}s, budget is 1s", elapsed);
    return false;
  }
  detail = fmt::format("{:.2f}s", elapsed);
  return true;
}

// ---------------------------------------------------------------------------
// criterion 2: sigma distances against frozen oracles
// ---------------------------------------------------------------------------

bool criterion_sigma_oracles(std::string& detail) {
  constexpr double kTolerance = 0.01;
  auto high = rx::stats::sigma_distance(448.0, 11.10, 22.52);
  auto low = rx::stats::sigma_distance(26.0, 21.20, 25.00);
  if (!high.defined || std::fabs(high.z - 19.40) > kTolerance) {
    detail = fmt::format("z(448; 11.10, 22.52) = {:.4f}, expected 19.40 +/- 0.01", high.z);
    return false;
  }
  if (!low.defined || std::fabs(low.z - 0.19) > kTolerance) {
    detail = fmt::format("z(26; 21.20, 25.00) = {:.4f}, expected 0.19 +/- 0.01", low.z);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 3: composed prompts match the frozen scenario texts
// ---------------------------------------------------------------------------

const char* kHighCouplingPrompt =
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

const char* kLowRiskPrompt =
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

rx::prompt::PromptBundle compose_scenario(const std::string& file, const std::string& project,
                                          const std::string& class_name,
                                          const std::string& project_label) {
  auto loaded = load(file, project);
  const auto* record = find_record(loaded.dataset, class_name);
  if (record == nullptr) throw rx::InputError("scenario class missing: " + class_name);
  rx::prompt::PromptConfig config;
  if (!project_label.empty()) config.project_label = project_label;
  return rx::prompt::compose_prompt(*record, loaded.baseline, config);
}

bool criterion_scenario_prompts(std::string& detail) {
  auto high = compose_scenario("camel16.csv", "Apache Camel", "org.apache.camel.Exchange", "");
  if (rx::text::normalize_for_comparison(high.rendered) !=
      rx::text::normalize_for_comparison(kHighCouplingPrompt)) {
    detail = "high-coupling prompt diverges from the frozen text";
    return false;
  }
  auto low = compose_scenario("ant17.csv", "Apache Ant",
                              "org.apache.tools.ant.dispatch.DispatchTask",
                              "Apache Ant 1.7 project");
  if (rx::text::normalize_for_comparison(low.rendered) !=
      rx::text::normalize_for_comparison(kLowRiskPrompt)) {
    detail = "low-risk prompt diverges from the frozen text";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 4: the baseline ablation removes every baseline figure
// ---------------------------------------------------------------------------

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

bool criterion_ablation(std::string& detail) {
  auto loaded = load("camel16.csv", "Apache Camel");
  const auto* record = find_record(loaded.dataset, "org.apache.camel.Exchange");
  if (record == nullptr) {
    detail = "scenario class missing";
    return false;
  }

  auto full = rx::prompt::compose_prompt(*record, loaded.baseline);
  if (count_occurrences(full.rendered, "μ=") != 4 || count_occurrences(full.rendered, "σ=") != 4) {
    detail = "default prompt must carry all four baseline pairs";
    return false;
  }

  rx::prompt::PromptConfig ablated_config;
  ablated_config.include_baseline = false;
  auto ablated = rx::prompt::compose_prompt(*record, loaded.baseline, ablated_config);
  if (count_occurrences(ablated.rendered, "μ=") != 0 ||
      count_occurrences(ablated.rendered, "σ=") != 0) {
    detail = "ablated prompt still carries baseline figures";
    return false;
  }
  if (ablated.rendered.find("CBO=448") == std::string::npos) {
    detail = "ablated prompt lost the raw metric values";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 5: offline explanations reach complete coverage on both corpora
// ---------------------------------------------------------------------------

bool criterion_offline_coverage(std::string& detail) {
  auto start = Clock::now();
  std::size_t total = 0;
  std::size_t complete = 0;
  for (const auto* file : {"ant17.csv", "camel16.csv"}) {
    auto project = load(file, "");
    for (const auto& record : project.dataset.records) {
      auto profile = rx::context::assess_class(record, project.baseline);
      auto explanation = rx::backend::offline_generate(profile, project.baseline);
      auto coverage = rx::taxonomy::validate(explanation.text, profile);
      ++total;
      if (coverage.complete) ++complete;
    }
  }
  double elapsed = seconds_since(start);
  if (complete != total) {
    detail = fmt::format("{}/{} complete", complete, total);
    return false;
  }
  if (elapsed >= 30.0) {
    detail = fmt::format("took {:.1f}s, budget is 30s", elapsed);
    return false;
  }
  detail = fmt::format("{}/{} complete in {:.2f}s", complete, total, elapsed);
  return true;
}

// ---------------------------------------------------------------------------
// criterion 6: severity band boundaries and monotonicity
// ---------------------------------------------------------------------------

bool criterion_severity_properties(std::string& detail) {
  using rx::context::SeverityBand;
  const rx::context::SeverityThresholds thresholds;

  auto classify_z = [&](double z) {
    return rx::context::classify_severity({z, true}, thresholds);
  };

  // boundary values belong to the higher band
  struct Boundary {
    double z;
    SeverityBand at;
    SeverityBand below;
  };
  const Boundary boundaries[] = {
      {-0.25, SeverityBand::typical, SeverityBand::favorable},
      {1.0, SeverityBand::elevated, SeverityBand::typical},
      {2.0, SeverityBand::high, SeverityBand::elevated},
      {4.0, SeverityBand::extreme, SeverityBand::high},
  };
  for (const auto& b : boundaries) {
    if (classify_z(b.z) != b.at) {
      detail = fmt::format("z = {} must start the higher band", b.z);
      return false;
    }
    if (classify_z(std::nextafter(b.z, -1e9)) != b.below) {
      detail = fmt::format("just below z = {} must stay in the lower band", b.z);
      return false;
    }
  }

  // zero variance: never a crash, always the no-variance band
  auto flat = rx::stats::sigma_distance(12.0, 12.0, 0.0);
  if (flat.defined || rx::context::classify_severity(flat, thresholds) != SeverityBand::no_variance) {
    detail = "zero std dev must yield the no-variance band";
    return false;
  }

  // randomized properties: monotonicity under value increase, and affine
  // invariance of z when value, mean, and std dev are scaled/shifted together
  std::mt19937 rng(991731);
  std::uniform_real_distribution<double> value_draw(-500.0, 500.0);
  std::uniform_real_distribution<double> mean_draw(-100.0, 100.0);
  std::uniform_real_distribution<double> sd_draw(0.05, 200.0);
  std::uniform_real_distribution<double> scale_draw(0.01, 50.0);
  std::uniform_real_distribution<double> shift_draw(-1000.0, 1000.0);
  constexpr int kCases = 1500;  // the contract demands at least 1000
  for (int i = 0; i < kCases; ++i) {
    double mean = mean_draw(rng);
    double sd = sd_draw(rng);
    double a = value_draw(rng);
    double b = value_draw(rng);
    if (a > b) std::swap(a, b);
    auto band_at = [&](double v) {
      return rx::context::classify_severity(rx::stats::sigma_distance(v, mean, sd), thresholds);
    };
    if (rx::context::band_rank(band_at(a)) > rx::context::band_rank(band_at(b))) {
      detail = fmt::format("band rank dropped between value {:.3f} and {:.3f}", a, b);
      return false;
    }

    double scale = scale_draw(rng);
    double shift = shift_draw(rng);
    double z = rx::stats::sigma_distance(a, mean, sd).z;
    double transformed =
        rx::stats::sigma_distance(scale * a + shift, scale * mean + shift, scale * sd).z;
    if (std::fabs(transformed - z) > 1e-9 * std::max(1.0, std::fabs(z))) {
      detail = fmt::format("z not invariant under v -> {:.3f}*v + {:.3f}: {} vs {}", scale,
                           shift, z, transformed);
      return false;
    }
  }
  detail = fmt::format("{} randomized cases", kCases);
  return true;
}

// ---------------------------------------------------------------------------
// criterion 7: the scenario classes land in their expected bands
// ---------------------------------------------------------------------------

bool criterion_scenario_bands(std::string& detail) {
  using rx::context::SeverityBand;

  auto camel = load("camel16.csv", "Apache Camel");
  const auto* exchange = find_record(camel.dataset, "org.apache.camel.Exchange");
  if (exchange == nullptr) {
    detail = "high-coupling class missing";
    return false;
  }
  auto exchange_profile = rx::context::assess_class(*exchange, camel.baseline);
  const auto* cbo = exchange_profile.assessment_for("cbo");
  if (cbo == nullptr || cbo->band != SeverityBand::extreme) {
    detail = "high-coupling class must flag CBO as extreme";
    return false;
  }
  if (exchange_profile.overall_band != SeverityBand::extreme) {
    detail = "high-coupling class must be extreme overall";
    return false;
  }

  auto ant = load("ant17.csv", "Apache Ant");
  const auto* dispatch = find_record(ant.dataset, "org.apache.tools.ant.dispatch.DispatchTask");
  if (dispatch == nullptr) {
    detail = "low-risk class missing";
    return false;
  }
  auto dispatch_profile = rx::context::assess_class(*dispatch, ant.baseline);
  for (const auto& a : dispatch_profile.assessments) {
    if (a.band != SeverityBand::favorable && a.band != SeverityBand::typical) {
      detail = fmt::format("low-risk class has {} outside favorable/typical", a.metric_id);
      return false;
    }
  }
  if (dispatch_profile.overall_band != SeverityBand::typical) {
    detail = "low-risk class must be typical overall";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 8: reproducible batch runs are byte-identical
// ---------------------------------------------------------------------------

int run_cli(const std::string& args) {
  std::string command = "env -u RISKEXPLAIN_API_KEY -u RISKEXPLAIN_ENDPOINT -u RISKEXPLAIN_MODEL "
                        "-u RISKEXPLAIN_BACKEND -u RISKEXPLAIN_CACHE_DIR \"" +
                        g_cli_path + "\" " + args + " >/dev/null 2>&1";
  int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

bool criterion_reproducible_runs(std::string& detail) {
  fs::path base = fs::temp_directory_path() /
                  ("riskexplain-acceptance-" + std::to_string(::getpid()));
  fs::path first = base / "first";
  fs::path second = base / "second";
  fs::create_directories(first);
  fs::create_directories(second);

  auto args = [&](const fs::path& out) {
    return "batch \"" + g_data_dir + "/camel16.csv\" --project-name \"Apache Camel\" "
           "--reproducible --out \"" + out.string() + "\"";
  };
  bool ok = false;
  if (run_cli(args(first)) != 0 || run_cli(args(second)) != 0) {
    detail = "batch run failed";
  } else {
    auto md_a = slurp(first / "apache-camel-report.md");
    auto md_b = slurp(second / "apache-camel-report.md");
    auto js_a = slurp(first / "apache-camel-report.json");
    auto js_b = slurp(second / "apache-camel-report.json");
    if (md_a.empty() || js_a.empty()) {
      detail = "report files missing or empty";
    } else if (md_a != md_b) {
      detail = "markdown reports differ between runs";
    } else if (js_a != js_b) {
      detail = "JSON reports differ between runs";
    } else {
      detail = fmt::format("{} bytes markdown, {} bytes JSON", md_a.size(), js_a.size());
      ok = true;
    }
  }
  std::error_code ec;
  fs::remove_all(base, ec);
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 9: remote retry, auth, and cache contracts against a stub server
// ---------------------------------------------------------------------------

struct StubServer {
  httplib::Server server;
  int port = 0;
  std::thread thread;
  std::mutex mutex;
  int requests = 0;
  std::function<void(int, httplib::Response&)> respond;

  StubServer() {
    server.Post("/v1/chat/completions",
                [this](const httplib::Request&, httplib::Response& res) {
                  int index = 0;
                  {
                    std::lock_guard<std::mutex> lock(mutex);
                    index = ++requests;
                  }
                  respond(index, res);
                });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  ~StubServer() {
    server.stop();
    thread.join();
  }

  int request_count() {
    std::lock_guard<std::mutex> lock(mutex);
    return requests;
  }

  void reset(std::function<void(int, httplib::Response&)> fn) {
    std::lock_guard<std::mutex> lock(mutex);
    requests = 0;
    respond = std::move(fn);
  }

  rx::backend::BackendConfig config(int max_retries) const {
    rx::backend::BackendConfig c;
    c.kind = rx::backend::BackendKind::remote;
    c.endpoint_url = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
    c.model_name = "stub-model";
    c.max_retries = max_retries;
    c.request_timeout = 5.0;
    c.backoff_base_seconds = 0.01;
    c.api_key = "acceptance-stub-key";
    return c;
  }
};

const char* kStubBody =
    R"({"choices":[{"message":{"role":"assistant","content":"CBO measures the number of classes coupled to this one. RFC measures the number of methods reachable from the class. LCOM measures the degree to which methods share state. WMC measures the sum of method complexities. The CBO value sits far above the project baseline mean. Refactor the largest methods and add tests."}}]})";

bool criterion_remote_contracts(std::string& detail) {
  StubServer stub;
  rx::prompt::PromptBundle bundle;
  bundle.rendered = "acceptance probe prompt";

  // (a) one 429, then success: two attempts total
  stub.reset([](int index, httplib::Response& res) {
    if (index == 1) {
      res.status = 429;
      res.set_content("slow down", "text/plain");
    } else {
      res.set_content(kStubBody, "application/json");
    }
  });
  {
    rx::backend::RemoteBackend remote(stub.config(3));
    auto explanation = remote.generate(bundle);
    if (explanation.attempt_count != 2 || stub.request_count() != 2) {
      detail = fmt::format("429 path: attempt_count {}, {} requests, expected 2 and 2",
                           explanation.attempt_count, stub.request_count());
      return false;
    }
  }

  // (b) an auth rejection is terminal: exactly one request
  stub.reset([](int, httplib::Response& res) {
    res.status = 401;
    res.set_content("{}", "application/json");
  });
  {
    rx::backend::RemoteBackend remote(stub.config(3));
    bool threw = false;
    try {
      remote.generate(bundle);
    } catch (const rx::AuthError&) {
      threw = true;
    }
    if (!threw || stub.request_count() != 1) {
      detail = fmt::format("401 path: threw={}, {} requests, expected one terminal request",
                           threw, stub.request_count());
      return false;
    }
  }

  // (c) exhausted retries surface the final status
  stub.reset([](int, httplib::Response& res) {
    res.status = 500;
    res.set_content("boom", "text/plain");
  });
  {
    rx::backend::RemoteBackend remote(stub.config(1));
    std::string message;
    try {
      remote.generate(bundle);
    } catch (const rx::BackendError& e) {
      message = e.what();
    }
    if (message.find("HTTP 500") == std::string::npos || stub.request_count() != 2) {
      detail = fmt::format("exhaustion path: '{}', {} requests", message, stub.request_count());
      return false;
    }
  }

  // (d) a cache hit answers without touching the network
  stub.reset([](int, httplib::Response& res) {
    res.set_content(kStubBody, "application/json");
  });
  {
    fs::path cache_dir = fs::temp_directory_path() /
                         ("riskexplain-acceptance-cache-" + std::to_string(::getpid()));
    auto cached = rx::backend::make_backend(stub.config(3), cache_dir.string(), true);
    auto first = cached->generate(bundle);
    auto second = cached->generate(bundle);
    std::error_code ec;
    fs::remove_all(cache_dir, ec);
    if (first.attempt_count != 1 || second.attempt_count != 0 || stub.request_count() != 1) {
      detail = fmt::format("cache path: attempts {} then {}, {} requests, expected 1/0/1",
                           first.attempt_count, second.attempt_count, stub.request_count());
      return false;
    }
    if (second.text != first.text) {
      detail = "cache hit returned different text";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 10: metrics_only output carries nothing generated
// ---------------------------------------------------------------------------

std::set<std::string> sentence_set(const std::string& text) {
  std::set<std::string> out;
  for (const auto& s : rx::text::split_sentences(text)) {
    std::string sentence = text.substr(s.offset, s.length);
    // strip list markers so layout does not mask shared content
    while (!sentence.empty() && (sentence.front() == '-' || sentence.front() == ' ' ||
                                 sentence.front() == '#' || sentence.front() == '|')) {
      sentence.erase(sentence.begin());
    }
    if (sentence.size() > 3) out.insert(sentence);
  }
  return out;
}

bool criterion_mode_hygiene(std::string& detail) {
  auto project = load("camel16.csv", "Apache Camel");
  rx::config::RunConfig config;
  config.dataset_path = g_data_dir + "/camel16.csv";
  config.project_name = "Apache Camel";

  std::vector<std::size_t> selection(project.dataset.records.size());
  for (std::size_t i = 0; i < selection.size(); ++i) selection[i] = i;

  config.mode = rx::report::ReportMode::metrics_only;
  auto plain_batch = rx::pipeline::run_batch(project, selection, config);
  auto plain = rx::report::render_project_report_md(project.dataset, project.baseline,
                                                    plain_batch.reports, config.mode);

  config.mode = rx::report::ReportMode::explained;
  auto explained_batch = rx::pipeline::run_batch(project, selection, config);

  // no sentence from any explanation may appear in the metrics_only document
  auto plain_sentences = sentence_set(plain);
  for (const auto& r : explained_batch.reports) {
    if (!r.explanation) continue;
    for (const auto& sentence : sentence_set(r.explanation->text)) {
      if (plain_sentences.count(sentence) > 0) {
        detail = "metrics_only shares a sentence with an explanation: " + sentence;
        return false;
      }
    }
  }

  // and none of the actionable vocabulary may leak into it
  const rx::taxonomy::CueConfig cues;
  std::string lowered = rx::text::to_lower(plain);
  for (const auto& cue : cues.actionable_cues) {
    if (lowered.find(rx::text::to_lower(cue)) != std::string::npos) {
      detail = "metrics_only contains actionable cue '" + cue + "'";
      return false;
    }
  }
  if (plain.find("### Explanation") != std::string::npos ||
      plain.find("outlier") != std::string::npos) {
    detail = "metrics_only carries generated phrasing";
    return false;
  }
  detail = fmt::format("{} metrics_only sentences checked", plain_sentences.size());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--data-dir") {
      g_data_dir = argv[i + 1];
    } else if (flag == "--cli") {
      g_cli_path = argv[i + 1];
    } else {
      fmt::print(stderr, "unknown argument: {}\n", flag);
      return 2;
    }
  }
  if (g_data_dir.empty() || g_cli_path.empty()) {
    fmt::print(stderr, "usage: acceptance --data-dir <dir> --cli <binary>\n");
    return 2;
  }

  struct Criterion {
    const char* name;
    bool (*check)(std::string&);
  };
  const Criterion criteria[] = {
      {"baseline statistics within 1% and defect rates within 0.1pp, under 1s",
       criterion_baselines},
      {"sigma distances match the frozen oracles within 0.01", criterion_sigma_oracles},
      {"composed prompts match the frozen scenario texts", criterion_scenario_prompts},
      {"baseline ablation removes every baseline figure", criterion_ablation},
      {"offline explanations reach complete coverage on both corpora, under 30s",
       criterion_offline_coverage},
      {"severity boundaries at -0.25/1/2/4, monotone bands, affine-invariant z over 1500 cases",
       criterion_severity_properties},
      {"scenario classes land in their expected bands", criterion_scenario_bands},
      {"two reproducible batch runs are byte-identical", criterion_reproducible_runs},
      {"remote retry, auth, and cache contracts hold against a stub server",
       criterion_remote_contracts},
      {"metrics_only reports carry nothing generated", criterion_mode_hygiene},
  };

  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    fmt::print("[{}] criterion {:2}: {}{}\n", ok ? "PASS" : "FAIL", index, criterion.name,
               detail.empty() ? "" : " -- " + detail);
    if (!ok) ++failures;
  }

  if (failures > 0) {
    fmt::print("{} of {} criteria failed\n", failures, std::size(criteria));
    return 1;
  }
  fmt::print("all {} criteria passed\n", std::size(criteria));
  return 0;
}
