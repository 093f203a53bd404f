// Copyright 2026 The qrepgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrepgame/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace qrg {
namespace {

using nlohmann::json;

json PayoffJson(const Payoff& p) { return json::array({Tidy(p.first), Tidy(p.second)}); }

const char* KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kDecision:
      return "decision";
    case NodeKind::kChance:
      return "chance";
    case NodeKind::kTerminal:
      return "terminal";
  }
  return "";
}

}  // namespace

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

double Tidy(double v) { return std::strtod(FormatNumber(v).c_str(), nullptr); }

json ToJson(const Bimatrix& bm) {
  json cells = json::array();
  for (int r = 0; r < bm.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < bm.cols(); ++c) row.push_back(PayoffJson(bm.at(r, c)));
    cells.push_back(std::move(row));
  }
  return {{"rows", bm.rows()},
          {"cols", bm.cols()},
          {"row_labels", bm.row_labels()},
          {"col_labels", bm.col_labels()},
          {"cells", std::move(cells)}};
}

std::string ToCsv(const Bimatrix& bm) {
  std::string out;
  for (const std::string& label : bm.col_labels()) out += "," + label;
  out += "\n";
  for (int r = 0; r < bm.rows(); ++r) {
    out += bm.row_labels()[r];
    for (int c = 0; c < bm.cols(); ++c) {
      const Payoff& p = bm.at(r, c);
      out += "," + FormatNumber(p.first) + ";" + FormatNumber(p.second);
    }
    out += "\n";
  }
  return out;
}

json ToJson(const EquilibriumReport& report) {
  json list = json::array();
  for (const Equilibrium& e : report.equilibria) {
    list.push_back({{"row", e.row},
                    {"col", e.col},
                    {"row_label", e.row_label},
                    {"col_label", e.col_label},
                    {"payoff", PayoffJson(e.payoff)},
                    {"strict", e.strict},
                    {"payoff_dominated", e.payoff_dominated}});
  }
  return {{"kind", report.kind == EquilibriumKind::kNash ? "nash" : "subgame_perfect"},
          {"tolerance", report.tolerance},
          {"count", report.equilibria.size()},
          {"equilibria", std::move(list)}};
}

json ToJson(const CooperationAnalysis& a) {
  json samples = json::array();
  for (const CooperationSample& s : a.samples) {
    samples.push_back({{"x", Tidy(s.x)}, {"unique_ne", s.unique_ne}, {"Q", Tidy(s.q)}});
  }
  return {{"payoffs",
           {{"T", a.payoffs.T}, {"R", a.payoffs.R}, {"P", a.payoffs.P}, {"S", a.payoffs.S}}},
          {"closed_form_bound", Tidy(a.closed_form_bound)},
          {"empirical_bound", Tidy(a.empirical_bound)},
          {"grid_step", a.grid_step},
          {"bound_agrees", a.bound_agrees},
          {"payoff_improves", a.payoff_improves},
          {"samples", std::move(samples)}};
}

std::string ToCsv(const CooperationAnalysis& a) {
  std::string out = "x,unique_ne_flag,Q\n";
  for (const CooperationSample& s : a.samples) {
    out += FormatNumber(s.x) + "," + (s.unique_ne ? "1" : "0") + "," + FormatNumber(s.q) +
           "\n";
  }
  return out;
}

json ToJson(const ExtensiveTree& tree) {
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes) {
    json j = {{"id", n.id},
              {"kind", KindName(n.kind)},
              {"history", n.history},
              {"reachable", n.reachable},
              {"children", n.children}};
    if (n.kind == NodeKind::kDecision) {
      j["owner"] = n.owner;
      j["infoset"] = n.infoset;
    }
    if (!n.actions.empty()) j["actions"] = n.actions;
    if (n.kind == NodeKind::kChance) {
      json p = json::array();
      for (double v : n.probabilities) p.push_back(Tidy(v));
      j["probabilities"] = std::move(p);
    }
    if (n.kind == NodeKind::kTerminal) {
      j["payoff"] = n.payoff ? PayoffJson(*n.payoff) : json();
    }
    nodes.push_back(std::move(j));
  }
  return {{"family", tree.family}, {"root", 0}, {"nodes", std::move(nodes)}};
}

json ToJson(const NoCooperationVerdict& v) {
  json gaps = json::array();
  for (const DominanceGaps& g : v.gaps) {
    gaps.push_back({{"vs_opponent_0", Tidy(g.vs_opponent_0)},
                    {"vs_opponent_1", Tidy(g.vs_opponent_1)},
                    {"min_measured", Tidy(g.min_measured)},
                    {"max_deviation", g.max_deviation}});
  }
  const StageOnePattern& p = v.pattern;
  return {{"stage1_pattern",
           {{"R", Tidy(p.R)},
            {"S", Tidy(p.S)},
            {"T", Tidy(p.T)},
            {"P", Tidy(p.P)},
            {"mirrored", p.mirrored},
            {"pd_consistent", p.pd_consistent}}},
          {"gaps", std::move(gaps)},
          {"dominance_holds", v.dominance_holds},
          {"equilibria", ToJson(v.equilibria)},
          {"cooperation_free", v.cooperation_free}};
}

json DominanceJson(const Bimatrix& bm, double tol) {
  json out = json::object();
  for (int player = 1; player <= 2; ++player) {
    const auto& labels = player == 1 ? bm.row_labels() : bm.col_labels();
    json list = json::array();
    for (const auto& [a, b] : StrictlyDominated(bm, player, tol)) {
      list.push_back({{"dominated", a},
                      {"dominating", b},
                      {"dominated_label", labels[a]},
                      {"dominating_label", labels[b]}});
    }
    out["player" + std::to_string(player)] = std::move(list);
  }
  return out;
}

}  // namespace qrg
