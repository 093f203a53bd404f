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

#ifndef QREPGAME_SERIALIZE_HPP_
#define QREPGAME_SERIALIZE_HPP_

// JSON and CSV renderings of library results. Numbers are rounded to 15
// significant digits so that, e.g., 6.2 prints as 6.2.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qrepgame/equilibria.hpp"
#include "qrepgame/iqbaltoor.hpp"
#include "qrepgame/repeated10.hpp"
#include "qrepgame/spe.hpp"
#include "qrepgame/stagegames.hpp"

namespace qrg {

// "%.15g".
std::string FormatNumber(double v);
double Tidy(double v);

nlohmann::json ToJson(const Bimatrix& bm);
// Header row ",<col labels>", then "<row label>,u1;u2,...".
std::string ToCsv(const Bimatrix& bm);

nlohmann::json ToJson(const EquilibriumReport& report);
nlohmann::json ToJson(const CooperationAnalysis& analysis);
// Columns x, unique_ne_flag, Q.
std::string ToCsv(const CooperationAnalysis& analysis);
nlohmann::json ToJson(const ExtensiveTree& tree);
nlohmann::json ToJson(const NoCooperationVerdict& verdict);

// Strict dominance pairs of both players beyond `tol`, with labels.
nlohmann::json DominanceJson(const Bimatrix& bm, double tol = 0.0);

}  // namespace qrg

#endif  // QREPGAME_SERIALIZE_HPP_
