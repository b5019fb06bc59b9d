// Copyright 2026 The qperm Authors
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

#pragma once

#include <span>

#include "json.hpp"

#include "qperm/analysis.hpp"
#include "qperm/ising.hpp"
#include "qperm/permanent.hpp"

namespace qperm {

/// Complex values serialize as [re, im].
nlohmann::ordered_json complex_to_json(Complex z);

nlohmann::ordered_json to_json(const PermanentEstimate& e);
nlohmann::ordered_json to_json(const ErrorBudget& b);
nlohmann::ordered_json to_json(const Window& w);
nlohmann::ordered_json to_json(const DtWindow& w);
nlohmann::ordered_json to_json(const AdvantageReport& r);
nlohmann::ordered_json to_json(const ResourceReport& r);
nlohmann::ordered_json to_json(const GaussianNormStatistic& s);

/// One object per term: index, weight, and optionally the overlap that was measured for it.
nlohmann::ordered_json terms_to_json(const TermSet& terms, std::span<const Complex> overlaps = {});

}  // namespace qperm
