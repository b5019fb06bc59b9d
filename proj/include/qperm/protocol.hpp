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

#include <vector>

#include "qperm/ising.hpp"

namespace qperm {

/// Diagonal fast-path overlaps.
OverlapEvaluator exact_overlap_evaluator();

/// Gate-level Hadamard-test overlaps from exact statevector simulation.
OverlapEvaluator statevector_overlap_evaluator();

/// Hadamard-test shot sampling. Term t is sampled with seed cfg.seed + t; unhalved terms
/// also sample the imaginary quadrature.
OverlapEvaluator shot_overlap_evaluator();

/// exact_overlap -> diagonal fast path, hadamard_shots -> shot sampling.
OverlapEvaluator evaluator_for(EvaluationMode mode);

/// Final-level detail of a protocol run.
struct ProtocolRun {
  PermanentEstimate estimate;
  TermSet terms;
  std::vector<Complex> overlaps;
};

/// generate_terms + overlaps + recombine, with Richardson extrapolation when
/// cfg.richardson_levels > 0.
PermanentEstimate run_protocol(const SquareMatrix& a, const ProtocolConfig& cfg);

/// As run_protocol, also returning the terms and overlaps of the finest level.
ProtocolRun run_protocol_detailed(const SquareMatrix& a, const ProtocolConfig& cfg);

}  // namespace qperm
