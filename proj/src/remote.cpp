#include "riskexplain/remote.hpp"

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <nlohmann/json.hpp>
#include <random>
#include <thread>

#include <httplib.h>

#include "riskexplain/errors.hpp"

namespace riskexplain::backend {

namespace {

using nlohmann::json;

struct UrlParts {
  std::string scheme_host_port;
  std::string path;
};

UrlParts split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw InputError(fmt::format("endpoint URL needs a scheme: {}", url));
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status <= 599);
}

std::string extract_content(const std::string& body) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw BackendError("malformed response body: not a JSON object");
  }
  if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
      parsed["choices"].empty()) {
    throw BackendError("malformed response body: no choices");
  }
  const auto& first = parsed["choices"][0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string()) {
    throw BackendError("malformed response body: no message content");
  }
  std::string content = first["message"]["content"].get<std::string>();
  if (content.empty()) throw BackendError("malformed response body: empty content");
  return content;
}

}  // namespace

RemoteBackend::RemoteBackend(BackendConfig config) : config_(std::move(config)) {
  config_.validate();
  auto parts = split_url(config_.endpoint_url);
  scheme_host_port_ = parts.scheme_host_port;
  path_ = parts.path;
}

Explanation RemoteBackend::generate(const prompt::PromptBundle& bundle,
                                    const GenerateOptions&) {
  json request = {
      {"model", config_.model_name},
      {"temperature", config_.temperature},
      {"messages",
       json::array({
           json{{"role", "system"}, {"content", ""}},
           json{{"role", "user"}, {"content", bundle.rendered}},
       })},
  };
  std::string body = request.dump();

  std::mt19937 jitter_rng{std::random_device{}()};
  int attempts = 0;
  std::string last_failure;

  while (true) {
    ++attempts;

    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(std::chrono::duration<double>(config_.request_timeout));
    client.set_read_timeout(std::chrono::duration<double>(config_.request_timeout));
    client.set_write_timeout(std::chrono::duration<double>(config_.request_timeout));
    client.set_bearer_token_auth(config_.api_key);

    auto res = client.Post(path_, body, "application/json");

    if (res) {
      if (res->status == 200) {
        Explanation e;
        e.text = extract_content(res->body);
        e.backend_id = config_.model_name;
        e.prompt_fingerprint = prompt_fingerprint(bundle.rendered);
        e.created_at = current_utc_timestamp();
        e.attempt_count = attempts;
        return e;
      }
      if (res->status == 401 || res->status == 403) {
        throw AuthError(fmt::format("authentication failed (HTTP {}) after {} attempt{}",
                                    res->status, attempts, attempts == 1 ? "" : "s"));
      }
      if (!retryable_status(res->status)) {
        throw BackendError(fmt::format("endpoint returned HTTP {} after {} attempt{}",
                                       res->status, attempts, attempts == 1 ? "" : "s"));
      }
      last_failure = fmt::format("HTTP {}", res->status);
    } else {
      last_failure = fmt::format("transport error: {}", httplib::to_string(res.error()));
    }

    if (attempts > config_.max_retries) {
      throw BackendError(fmt::format("retries exhausted after {} attempts; last failure: {}",
                                     attempts, last_failure));
    }
    double delay = config_.backoff_base_seconds * std::pow(2.0, attempts - 1);
    std::uniform_real_distribution<double> jitter(0.0, delay * 0.25);
    std::this_thread::sleep_for(std::chrono::duration<double>(delay + jitter(jitter_rng)));
  }
}

}  // namespace riskexplain::backend
