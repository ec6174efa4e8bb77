// Copyright 2026 The lcroute Authors
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

#ifndef LCROUTE_REPORTS_H
#define LCROUTE_REPORTS_H

#include <string>

#include "json.hpp"
#include "lcroute/butterfly_demo.h"
#include "lcroute/theorems.h"

namespace lcroute {

nlohmann::json to_json(const Quadruple &q);
nlohmann::json to_json(const TheoremReport &report);
nlohmann::json to_json(const ControlsReport &report);
nlohmann::json to_json(const FoliageReport &report);
nlohmann::json to_json(const DemoTranscript &transcript);
nlohmann::json to_json(const ButterflyDemo &demo);
nlohmann::json to_json(const Witness &witness);
nlohmann::json to_json(const VertexMinorReport &report);

/// Fixed-width tables for terminals. Timing is the only nondeterministic
/// field and is printed on its own line.
std::string summary_table(const TheoremReport &report);
std::string summary_table(const ControlsReport &report);
std::string summary_table(const FoliageReport &report);
std::string summary_table(const ButterflyDemo &demo);

}  // namespace lcroute

#endif
