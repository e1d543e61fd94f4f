// Copyright 2026 The corfl Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corfl/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "corfl/error.hpp"

namespace corfl {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void Bad(std::string_view key, std::string_view value,
                      std::string_view why) {
  throw Error(ErrorCode::kConfigError, std::string(key) + " = '" +
                                           std::string(value) + "': " +
                                           std::string(why));
}

double ParseDouble(std::string_view key, std::string_view value) {
  const std::string s(value);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    Bad(key, value, "expected a finite number");
  }
  return v;
}

std::uint64_t ParseUnsigned(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() ||
      ptr != value.data() + value.size()) {
    Bad(key, value, "expected a nonnegative integer");
  }
  return v;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  Bad(key, value, "expected true or false");
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::vector<std::string_view>& RunConfig::Keys() {
  static const std::vector<std::string_view> keys = {
      "tau",     "lambda1", "lambda2",     "sigma", "sigma_c",
      "k",       "knn_k",   "m_keep",      "d_empty", "seed",
      "scales",  "anchors", "per_cluster", "std",   "gain_trace"};
  return keys;
}

void RunConfig::Set(std::string_view key, std::string_view raw) {
  const std::string_view value = Trim(raw);
  if (key == "tau") {
    tau = ParseDouble(key, value);
    if (!(tau > 1.0)) Bad(key, value, "tau must be > 1");
  } else if (key == "lambda1") {
    if (value == "auto") {
      lambda1.reset();
      return;
    }
    lambda1 = ParseDouble(key, value);
    if (*lambda1 < 0.0) Bad(key, value, "lambda1 must be >= 0");
  } else if (key == "lambda2") {
    lambda2 = ParseDouble(key, value);
    if (lambda2 < 0.0) Bad(key, value, "lambda2 must be >= 0");
  } else if (key == "sigma") {
    sigma = ParseDouble(key, value);
    if (!(sigma > 0.0)) Bad(key, value, "sigma must be > 0");
  } else if (key == "sigma_c") {
    sigma_c = ParseDouble(key, value);
    if (!(sigma_c > 0.0)) Bad(key, value, "sigma_c must be > 0");
  } else if (key == "k" || key == "knn_k") {
    auto& slot = key == "k" ? k : knn_k;
    if (value == "auto") {
      slot.reset();
      return;
    }
    const auto v = ParseUnsigned(key, value);
    if (v < 1) Bad(key, value, "must be >= 1");
    slot = static_cast<std::size_t>(v);
  } else if (key == "m_keep") {
    const auto v = ParseUnsigned(key, value);
    if (v < 1) Bad(key, value, "must be >= 1");
    m_keep = static_cast<std::size_t>(v);
  } else if (key == "d_empty") {
    d_empty = ParseDouble(key, value);
    if (d_empty < 0.0) Bad(key, value, "d_empty must be >= 0");
  } else if (key == "seed") {
    seed = ParseUnsigned(key, value);
  } else if (key == "scales") {
    std::vector<double> parsed;
    std::string_view rest = value;
    while (!value.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = Trim(rest.substr(0, comma));
      const double f = ParseDouble(key, item);
      if (!(f > 0.0 && f <= 1.0)) Bad(key, value, "scales must lie in (0, 1]");
      parsed.push_back(f);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (parsed.empty()) Bad(key, value, "at least one scale is required");
    templates.scales = std::move(parsed);
  } else if (key == "anchors") {
    const auto v = ParseUnsigned(key, value);
    if (v < 1 || v > 1024) Bad(key, value, "anchors must lie in [1, 1024]");
    templates.anchors = static_cast<int>(v);
  } else if (key == "per_cluster") {
    const auto v = ParseUnsigned(key, value);
    if (v < 1) Bad(key, value, "must be >= 1");
    per_cluster = static_cast<std::size_t>(v);
  } else if (key == "std") {
    stddev = ParseDouble(key, value);
    if (stddev < 0.0) Bad(key, value, "std must be >= 0");
  } else if (key == "gain_trace") {
    gain_trace = ParseBool(key, value);
  } else {
    throw Error(ErrorCode::kConfigError,
                "unknown key '" + std::string(key) + "'");
  }
}

std::string RunConfig::Get(std::string_view key) const {
  auto opt_size = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("auto");
  };
  if (key == "tau") return FormatDouble(tau);
  if (key == "lambda1") return lambda1 ? FormatDouble(*lambda1) : "auto";
  if (key == "lambda2") return FormatDouble(lambda2);
  if (key == "sigma") return FormatDouble(sigma);
  if (key == "sigma_c") return FormatDouble(sigma_c);
  if (key == "k") return opt_size(k);
  if (key == "knn_k") return opt_size(knn_k);
  if (key == "m_keep") return std::to_string(m_keep);
  if (key == "d_empty") return FormatDouble(d_empty);
  if (key == "seed") return std::to_string(seed);
  if (key == "scales") {
    std::string out;
    for (std::size_t i = 0; i < templates.scales.size(); ++i) {
      if (i) out += ",";
      out += FormatDouble(templates.scales[i]);
    }
    return out;
  }
  if (key == "anchors") return std::to_string(templates.anchors);
  if (key == "per_cluster") return std::to_string(per_cluster);
  if (key == "std") return FormatDouble(stddev);
  if (key == "gain_trace") return gain_trace ? "true" : "false";
  throw Error(ErrorCode::kConfigError, "unknown key '" + std::string(key) + "'");
}

void RunConfig::Validate() const {
  // Re-running every key through Set applies the same checks as parsing.
  RunConfig copy;
  for (std::string_view key : Keys()) copy.Set(key, Get(key));
}

RunConfig RunConfig::Parse(std::istream& in) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfigError,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(Trim(view.substr(0, eq)));
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kConfigError,
                  "line " + std::to_string(line_no) + ": duplicate key '" +
                      key + "'");
    }
    config.Set(key, view.substr(eq + 1));
  }
  return config;
}

RunConfig RunConfig::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config '" + path + "'");
  return Parse(in);
}

std::string RunConfig::Serialize() const {
  std::ostringstream out;
  for (std::string_view key : Keys()) out << key << " = " << Get(key) << '\n';
  return out.str();
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.Serialize() == b.Serialize();
}

}  // namespace corfl
