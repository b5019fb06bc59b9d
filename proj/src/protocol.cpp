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

#include "qperm/protocol.hpp"

#include <cmath>

#include "qperm/hadamard.hpp"

namespace qperm {

OverlapEvaluator exact_overlap_evaluator() {
  return [](const TermSet& terms, const ProtocolConfig& cfg) {
    std::vector<Complex> out;
    out.reserve(terms.size());
    for (const OverlapTerm& t : terms.terms) {
      out.push_back(overlap_exact(t.shifted_matrix, terms.dt / 2.0, cfg.exec).value());
    }
    return out;
  };
}

OverlapEvaluator statevector_overlap_evaluator() {
  return [](const TermSet& terms, const ProtocolConfig&) {
    std::vector<Complex> out;
    out.reserve(terms.size());
    for (const OverlapTerm& t : terms.terms) {
      out.push_back(overlap_statevector(t.shifted_matrix, terms.dt / 2.0).value());
    }
    return out;
  };
}

OverlapEvaluator shot_overlap_evaluator() {
  return [](const TermSet& terms, const ProtocolConfig& cfg) {
    std::vector<Complex> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const OverlapTerm& t = terms.terms[i];
      const OverlapResult r =
          overlap_shots(t.shifted_matrix, terms.dt / 2.0, cfg.shots_per_overlap, cfg.seed + i, !t.uses_conjugate_pair);
      out.push_back(r.value());
    }
    return out;
  };
}

OverlapEvaluator evaluator_for(EvaluationMode mode) {
  return mode == EvaluationMode::hadamard_shots ? shot_overlap_evaluator() : exact_overlap_evaluator();
}

PermanentEstimate run_protocol(const SquareMatrix& a, const ProtocolConfig& cfg) {
  return richardson_extrapolate(a, cfg, cfg.richardson_levels, evaluator_for(cfg.mode));
}

ProtocolRun run_protocol_detailed(const SquareMatrix& a, const ProtocolConfig& cfg) {
  ProtocolRun run;
  const OverlapEvaluator inner = evaluator_for(cfg.mode);
  // The last call is the finest level; keep its inputs and outputs.
  const OverlapEvaluator recording = [&](const TermSet& terms, const ProtocolConfig& level_cfg) {
    run.terms = terms;
    run.overlaps = inner(terms, level_cfg);
    return run.overlaps;
  };
  run.estimate = richardson_extrapolate(a, cfg, cfg.richardson_levels, recording);
  return run;
}

}  // namespace qperm
