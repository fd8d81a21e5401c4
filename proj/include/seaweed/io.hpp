// Copyright 2026 The Seaweed Index Authors
//
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

#pragma once

// Record formats:
//   seaweed generation (JSONL)   {"word", "plus", "minus", "n", "p"}
//   parabolic generation (JSONL) {"epsilon", "word", "parts", "n", "p"}
//   count tables (CSV)           header "n,p,count", rows sorted by (n, p)
//   polynomial fits (JSON)       {"t", "epsilon"?, "degree", "coefficients",
//                                 "stable_from", "window"}

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "seaweed/composition.hpp"
#include "seaweed/counting.hpp"
#include "seaweed/parabolic_monoid.hpp"
#include "seaweed/seaweed_monoid.hpp"

namespace seaweed {

inline nlohmann::json to_json(const GeneratedSeaweed& g) {
  return {{"word", to_string(g.word)},
          {"plus", to_string(g.value.plus())},
          {"minus", to_string(g.value.minus())},
          {"n", g.n()},
          {"p", g.p()}};
}

inline nlohmann::json to_json(const GeneratedParabolic& g) {
  return {{"epsilon", g.epsilon},
          {"word", to_string(g.word)},
          {"parts", to_string(g.value)},
          {"n", g.sum()},
          {"p", g.p()}};
}

inline void write_csv(std::ostream& os, const CountTable& table) {
  os << "n,p,count\n";
  for (const auto& [key, count] : table.entries()) {
    os << key.first << ',' << key.second << ',' << count << '\n';
  }
}

inline CountTable read_csv(std::istream& is, TableKind kind, CountMethod method) {
  CountTable table(kind, method);
  std::string line;
  if (!std::getline(is, line) || line != "n,p,count") throw ParseError("count table CSV must start with n,p,count");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    unsigned long long n = 0, p = 0, c = 0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%llu,%llu,%llu%c", &n, &p, &c, &tail) != 3) {
      throw ParseError("bad count table row '" + line + "'");
    }
    table.add(n, p, c);
  }
  return table;
}

inline nlohmann::json to_json(const PolyFit& fit) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : fit.coefficients) coeffs.push_back(format_rational(c));
  nlohmann::json j = {{"t", fit.t},
                      {"degree", fit.degree},
                      {"coefficients", coeffs},
                      {"stable_from", fit.stable_from},
                      {"window", {fit.window_lo, fit.window_hi}}};
  if (fit.epsilon) j["epsilon"] = *fit.epsilon;
  return j;
}

inline PolyFit poly_fit_from_json(const nlohmann::json& j) {
  PolyFit fit;
  fit.t = j.at("t").get<std::uint64_t>();
  fit.degree = j.at("degree").get<std::size_t>();
  for (const auto& c : j.at("coefficients")) fit.coefficients.emplace_back(c.get<std::string>());
  fit.stable_from = j.at("stable_from").get<Part>();
  fit.window_lo = j.at("window").at(0).get<Part>();
  fit.window_hi = j.at("window").at(1).get<Part>();
  if (j.contains("epsilon")) fit.epsilon = j.at("epsilon").get<int>();
  return fit;
}

/// Writes to a sibling temporary file and renames it over path, so a failed
/// run never leaves a partial file behind.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace seaweed
