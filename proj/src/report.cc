// Copyright 2026 The Authors.
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

#include "submax/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "submax/errors.h"

namespace submax {
namespace {

using nlohmann::json;

bool IsScalar(const json& v) { return !v.is_array() && !v.is_object(); }

void Write(const json& v, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        Write(value, indent + 2, out);
      }
      out += "\n" + std::string(indent, ' ') + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), IsScalar);
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const json& item : v) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        Write(item, indent + 2, out);
      }
      out += flat ? "]" : "\n" + std::string(indent, ' ') + "]";
      return;
    }
    case json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += v.dump();
  }
}

json QueriesToJson(const QueryCounts& q) {
  return {{"value", q.value}, {"independence", q.independence}};
}

json PartsToJson(const std::vector<ElementSet>& parts) {
  json out = json::array();
  for (ElementSet part : parts) out.push_back(SetToJson(part));
  return out;
}

}  // namespace

std::string CanonicalDump(const json& doc) {
  std::string out;
  Write(doc, 0, out);
  out += "\n";
  return out;
}

json SetToJson(ElementSet s) { return s.ToVector(); }

ElementSet SetFromJson(const json& doc) {
  ElementSet s;
  for (const json& e : doc) {
    const int id = e.get<int>();
    if (id < 0 || id >= kMaxGroundSize) {
      throw InvalidArgument("element id outside [0, 64)");
    }
    s.insert(id);
  }
  return s;
}

json EmeToJson(const EmeVector& y) {
  json coords = json::array();
  for (const auto& [s, p] : y.coords()) {
    coords.push_back({{"set", SetToJson(s)}, {"p", p}});
  }
  return {{"sure", SetToJson(y.sure())}, {"coords", coords}};
}

EmeVector EmeFromJson(int n, const json& doc, int frac_cap) {
  std::vector<std::pair<ElementSet, double>> coords;
  for (const json& c : doc.at("coords")) {
    coords.emplace_back(SetFromJson(c.at("set")), c.at("p").get<double>());
  }
  return EmeVector::FromCoordinates(n, SetFromJson(doc.at("sure")), coords,
                                    frac_cap);
}

json ConfigToJson(const AlgoConfig& config) {
  json out = {{"epsilon", config.epsilon},
              {"delta", config.delta},
              {"iterations", config.iterations},
              {"t_s", config.t_s},
              {"t_s_requested", config.t_s_requested},
              {"ts_steps", config.ts_steps},
              {"ell", config.ell},
              {"tolerance", config.tolerance},
              {"frac_cap", config.frac_cap}};
  if (config.dummy_count) out["dummy_count"] = *config.dummy_count;
  return out;
}

json MatroidRunToJson(const MatroidRun& run) {
  const LocalSearchResult& ls = run.local_search;
  json trace = json::array();
  for (const IterationRecord& rec : run.greedy.trace) {
    trace.push_back({{"iteration", rec.iteration},
                     {"uses_z", rec.uses_z},
                     {"parts", PartsToJson(rec.parts)},
                     {"value", rec.value},
                     {"frac", rec.frac},
                     {"mar_inf", rec.mar_inf},
                     {"mar_inf_z", rec.mar_inf_z},
                     {"split_gain", rec.split_gain},
                     {"g_empty", rec.g_empty}});
  }
  return {
      {"algorithm", "matroid"},
      {"config", ConfigToJson(run.config)},
      {"n", run.n},
      {"rank", run.rank},
      {"dummies", run.dummies},
      {"local_search",
       {{"z", SetToJson(ls.z)},
        {"z_real", SetToJson(run.z_real)},
        {"value", run.z_value},
        {"initial", SetToJson(ls.initial)},
        {"initial_value", ls.initial_value},
        {"initializer", ls.initializer},
        {"swaps", ls.swaps},
        {"threshold", ls.threshold}}},
      {"continuous_greedy",
       {{"trace", trace},
        {"final_value", run.fractional_value},
        {"y", EmeToJson(run.greedy.y)},
        {"value_queries", run.greedy.value_queries},
        {"independence_queries", run.greedy.independence_queries}}},
      {"pipage",
       {{"set", SetToJson(run.pipage.set)},
        {"value", run.pipage.value},
        {"start_value", run.pipage.start_value},
        {"moves", run.pipage.moves}}},
      {"result",
       {{"set", SetToJson(run.set)},
        {"value", run.value},
        {"chosen", run.chosen}}},
      {"queries",
       {{"local_search", QueriesToJson(run.local_search_queries)},
        {"continuous_greedy", QueriesToJson(run.greedy_queries)},
        {"pipage", QueriesToJson(run.pipage_queries)},
        {"total", QueriesToJson(run.total_queries)}}}};
}

json KnapsackRunToJson(const KnapsackRun& run) {
  json branches = json::array();
  for (const KnapsackBranch& b : run.branches) {
    json trace = json::array();
    for (const DmcgIteration& rec : b.dmcg.trace) {
      trace.push_back({{"iteration", rec.iteration},
                       {"parts", PartsToJson(rec.parts)},
                       {"value", rec.value},
                       {"frac", rec.frac},
                       {"weighted_mass", rec.weighted_mass},
                       {"split_gain", rec.split_gain}});
    }
    const RoundingResult& r = b.rounding;
    branches.push_back(
        {{"guess", SetToJson(b.guess)},
         {"guess_weight", b.guess_weight},
         {"residual_budget", b.residual_budget},
         {"weight_limit", b.weight_limit},
         {"candidates", SetToJson(b.candidates)},
         {"filtered", b.filtered},
         {"dmcg",
          {{"trace", trace},
           {"y", EmeToJson(b.dmcg.y)},
           {"value_queries", b.dmcg.value_queries}}},
         {"rounding",
          {{"set", SetToJson(r.set)},
           {"value", r.value},
           {"start_value", r.start_value},
           {"exchanges", r.exchanges.size()},
           {"start_frac", r.start_frac},
           {"max_frac", r.max_frac},
           {"leftover", r.leftover}}},
         {"set", SetToJson(b.set)},
         {"value", b.value},
         {"margin", b.margin},
         {"overshoot_margin", run.config.epsilon * b.residual_budget -
                                  b.weight_limit + b.margin}});
  }
  json out = {{"algorithm", "knapsack"},
              {"config", ConfigToJson(run.config)},
              {"n", run.n},
              {"enum_cap", run.enum_cap},
              {"branches", branches},
              {"result", {{"set", SetToJson(run.set)}, {"value", run.value}}},
              {"queries", {{"total", QueriesToJson(run.total_queries)}}}};
  if (run.chosen >= 0) {
    const KnapsackBranch& b = run.branches[run.chosen];
    out["chosen"] = {{"guess", SetToJson(b.guess)},
                     {"residual_budget", b.residual_budget},
                     {"filtered", b.filtered},
                     {"margin", b.margin}};
  }
  return out;
}

json ChecksToJson(const CheckReport& report) {
  json out = json::array();
  for (const CheckEntry& e : report.entries()) {
    out.push_back({{"check", e.check},
                   {"iteration", e.iteration},
                   {"lhs", e.lhs},
                   {"rhs", e.rhs},
                   {"slack", e.slack},
                   {"pass", e.pass}});
  }
  return out;
}

json BruteForceToJson(const BruteForceResult& opt) {
  return {{"value", opt.opt_value},
          {"set", SetToJson(opt.opt_set)},
          {"feasible_count", opt.feasible_count}};
}

}  // namespace submax
