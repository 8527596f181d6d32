// Copyright 2026 The qumul Authors
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

#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qumul/amplification.hpp"
#include "qumul/conv_multiplier.hpp"
#include "qumul/resources.hpp"
#include "qumul/statevector.hpp"

namespace qumul {

using OrderedJson = nlohmann::ordered_json;

/// Basis index as a bitstring, most significant qubit first (matching ket
/// notation; qubit i is bit i of the index).
inline std::string to_bitstring(std::uint64_t index, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if ((index >> i) & 1) s[static_cast<std::size_t>(width - 1 - i)] = '1';
  return s;
}

inline OrderedJson histogram_to_json(const Histogram& h, int width) {
  OrderedJson counts = OrderedJson::object();
  for (const auto& [index, count] : h.counts)
    counts[to_bitstring(index, width)] = count;
  OrderedJson j;
  j["schema"] = "qumul.histogram/v1";
  j["shots"] = h.shots;
  j["counts"] = counts;
  return j;
}

inline std::string histogram_to_csv(const Histogram& h, int width) {
  std::ostringstream os;
  os << "bitstring,count\n";
  for (const auto& [index, count] : h.counts)
    os << to_bitstring(index, width) << "," << count << "\n";
  return os.str();
}

inline OrderedJson outcome_to_json(const ConvolutionOutcome& out) {
  OrderedJson j;
  j["schema"] = "qumul.outcome/v1";
  j["a"] = out.a.to_string();
  j["b"] = out.b.to_string();
  j["k"] = out.k;
  j["D"] = out.d;
  OrderedJson coeffs = OrderedJson::object();
  for (std::size_t i = 0; i < out.coefficients.size(); ++i)
    if (out.coefficients[i] != 0)
      coeffs[std::to_string(i)] = out.coefficients[i];
  j["coefficients"] = coeffs;
  j["product"] = out.product.to_string();
  j["success_probability"] = out.success_probability;
  j["shots"] = out.shots;
  j["seed"] = out.seed;
  j["mode"] = out.mode;
  return j;
}

inline OrderedJson plan_to_json(const AmplificationPlan& plan) {
  OrderedJson j;
  j["schema"] = "qumul.amplification-plan/v1";
  j["p0"] = plan.p0;
  j["theta"] = plan.theta;
  j["n_opt"] = plan.n_opt;
  j["p_final"] = plan.p_final;
  return j;
}

inline OrderedJson table_to_json(const ComparisonTable& table) {
  OrderedJson rows = OrderedJson::array();
  for (const ComparisonRow& r : table.rows) {
    OrderedJson row;
    row["algorithm"] = r.algorithm;
    row["n"] = r.n;
    row["depth"] = r.depth;
    row["cost"] = r.cost;
    row["ancillas"] = r.ancillas;
    row["basis"] = r.basis;
    if (!r.flags.empty()) row["flags"] = r.flags;
    if (!r.postselect_p.empty()) row["postselect_p"] = r.postselect_p;
    if (!r.n_opt.empty()) row["n_opt"] = r.n_opt;
    rows.push_back(row);
  }
  OrderedJson j;
  j["schema"] = "qumul.resources/v1";
  j["rows"] = rows;
  return j;
}

inline std::string table_to_csv(const ComparisonTable& table) {
  std::ostringstream os;
  os << "algorithm,n,depth,cost,ancillas,basis,flags,postselect_p,n_opt\n";
  for (const ComparisonRow& r : table.rows)
    os << r.algorithm << "," << r.n << "," << r.depth << "," << r.cost << ","
       << r.ancillas << "," << r.basis << "," << r.flags << ","
       << r.postselect_p << "," << r.n_opt << "\n";
  return os.str();
}

inline std::string sweep_to_csv(
    const std::vector<AmplificationSweepRow>& rows) {
  std::ostringstream os;
  os << "iterations,measured_probability,closed_form\n";
  char buf[64];
  for (const AmplificationSweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g", r.m, r.measured,
                  r.closed_form);
    os << buf << "\n";
  }
  return os.str();
}

inline OrderedJson sweep_to_json(
    const std::vector<AmplificationSweepRow>& rows) {
  OrderedJson arr = OrderedJson::array();
  for (const AmplificationSweepRow& r : rows) {
    OrderedJson row;
    row["iterations"] = r.m;
    row["measured_probability"] = r.measured;
    row["closed_form"] = r.closed_form;
    arr.push_back(row);
  }
  OrderedJson j;
  j["schema"] = "qumul.amplify-sweep/v1";
  j["rows"] = arr;
  return j;
}

}  // namespace qumul
