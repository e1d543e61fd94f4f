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

// corfl: receptive-field selection and classification from the command line.
//
//   corfl synth    --out DIR [options]
//   corfl select   --manifest M.json [--category NAME] --out DIR [options]
//   corfl classify --manifest M.json --selections S.json --queries Q.json
//                  --out DIR [options]
//
// Exit codes: 0 success, 1 data or validation error, 2 usage error.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "corfl/config.hpp"
#include "corfl/error.hpp"
#include "corfl/pipeline.hpp"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

std::string FlagName(std::string_view key) {
  std::string flag = "--";
  for (char c : key) flag += c == '_' ? '-' : c;
  return flag;
}

// Adds one string flag per config key; values are applied after parsing.
void AddConfigFlags(CLI::App* cmd, std::string& config_path,
                    std::map<std::string, std::string>& overrides) {
  cmd->add_option("--config", config_path, "Flat key = value config file");
  for (std::string_view key : corfl::RunConfig::Keys()) {
    auto* opt = cmd->add_option_function<std::string>(
        FlagName(key),
        [&overrides, k = std::string(key)](const std::string& v) {
          overrides[k] = v;
        },
        "Override config key '" + std::string(key) + "'");
    opt->type_name("VALUE");
  }
}

corfl::RunConfig ResolveConfig(const std::string& path,
                               const std::map<std::string, std::string>& overrides) {
  corfl::RunConfig config =
      path.empty() ? corfl::RunConfig{} : corfl::RunConfig::Load(path);
  for (std::string_view key : corfl::RunConfig::Keys()) {
    auto it = overrides.find(std::string(key));
    if (it != overrides.end()) config.Set(key, it->second);
  }
  config.Validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collaborative receptive-field selection and classification"};
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> overrides;
  std::string out_dir;
  std::string manifest;
  std::string category;
  std::string selections;
  std::string queries;
  unsigned threads = 0;
  bool no_index = false;

  auto* synth = app.add_subcommand("synth", "Run the three-cluster demo");
  synth->add_option("--out", out_dir, "Output directory")->required();
  AddConfigFlags(synth, config_path, overrides);

  auto* select = app.add_subcommand("select", "Select receptive fields per category");
  select->add_option("--manifest", manifest, "Dataset manifest (JSON)")->required();
  select->add_option("--category", category, "Only this category");
  select->add_option("--out", out_dir, "Output directory")->required();
  select->add_option("--threads", threads, "Worker threads (0 = all cores)");
  AddConfigFlags(select, config_path, overrides);

  auto* classify = app.add_subcommand("classify", "Classify query images");
  classify->add_option("--manifest", manifest, "Training manifest (JSON)")->required();
  classify->add_option("--selections", selections, "selections.json from select")
      ->required();
  classify->add_option("--queries", queries, "Manifest with a 'queries' list")
      ->required();
  classify->add_option("--out", out_dir, "Output directory")->required();
  classify->add_flag("--no-index", no_index, "Brute-force nearest neighbours");
  AddConfigFlags(classify, config_path, overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  corfl::RunConfig config;
  try {
    config = ResolveConfig(config_path, overrides);
  } catch (const corfl::Error& e) {
    std::cerr << "corfl: " << e.what() << '\n';
    return e.code() == corfl::ErrorCode::kIoError ? kExitData : kExitUsage;
  }

  try {
    if (*synth) {
      corfl::RunSynthCommand(config, out_dir);
    } else if (*select) {
      std::optional<std::string> only;
      if (!category.empty()) only = category;
      corfl::RunSelectCommand(manifest, only, config, out_dir, threads);
    } else if (*classify) {
      const auto accuracy = corfl::RunClassifyCommand(
          manifest, selections, queries, config, out_dir, !no_index);
      if (accuracy) std::cout << "accuracy " << *accuracy << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "corfl: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
