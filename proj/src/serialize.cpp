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

#include "qperm/serialize.hpp"

#include <string>

namespace qperm {

using json = nlohmann::ordered_json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const PermanentEstimate& e) {
  json j;
  j["method"] = std::string(to_string(e.method));
  j["value"] = complex_to_json(e.value);
  j["error_bound"] = e.error_bound ? json(*e.error_bound) : json(nullptr);
  j["samples_used"] = e.samples_used ? json(*e.samples_used) : json(nullptr);
  j["wall_terms"] = e.wall_terms;
  if (e.standard_error) {
    j["standard_error"] = *e.standard_error;
  }
  if (e.gapp_split) {
    j["gapp_split"] = {{"positive", e.gapp_split->positive}, {"negative", e.gapp_split->negative}};
  }
  if (!e.richardson_levels.empty()) {
    json levels = json::array();
    for (const Complex& z : e.richardson_levels) {
      levels.push_back(complex_to_json(z));
    }
    j["richardson_levels"] = levels;
    j["richardson_residuals"] = e.richardson_residuals;
  }
  return j;
}

json to_json(const ErrorBudget& b) {
  return {
      {"fd_bound", b.fd_bound},
      {"ht_bound", b.ht_bound},
      {"total_bound", b.total_bound},
      {"stirling_bound", b.stirling_bound},
      {"power_bound", b.power_bound},
      {"log_power_bound", b.log_power_bound},
      {"epsilon_prefactor", b.epsilon_prefactor},
      {"gurvits_bound", b.gurvits_bound},
      {"log_gurvits_bound", b.log_gurvits_bound},
      {"case", std::string(to_string(b.case_label))},
  };
}

json to_json(const Window& w) { return {{"lower", w.lower}, {"upper", w.upper}, {"empty", w.empty}}; }

json to_json(const DtWindow& w) {
  return {
      {"exponential", to_json(w.exponential)},
      {"gurvits", to_json(w.gurvits)},
      {"chosen", w.chosen},
      {"order_factor", w.order_factor},
  };
}

json to_json(const AdvantageReport& r) {
  return {
      {"case", std::string(to_string(r.label))},
      {"ising_norm", r.ising_norm},
      {"two_norm", r.two_norm},
      {"one_norm", r.one_norm},
      {"threshold", r.threshold},
      {"norm_ratio", r.norm_ratio},
      {"in_ratio_domain", r.in_ratio_domain},
  };
}

json to_json(const ResourceReport& r) {
  return {
      {"n", r.n},
      {"complex", r.complex_input},
      {"overlaps", r.overlaps},
      {"overlaps_generated", r.overlaps_generated},
      {"qubits", r.qubits},
      {"cnots_formula", r.cnots_formula},
      {"cnots_measured", r.cnots_measured},
      {"depth_formula", r.depth_formula},
      {"depth_measured", r.depth_measured},
      {"samples_order", r.samples_order},
      {"samples_order_text", r.samples_order_text},
  };
}

json to_json(const GaussianNormStatistic& s) {
  return {
      {"n", s.n},
      {"trials", s.trials},
      {"mean_ising_norm", s.mean_ising_norm},
      {"predicted", s.predicted},
      {"minimal_k", s.minimal_k},
  };
}

json terms_to_json(const TermSet& terms, std::span<const Complex> overlaps) {
  json out = json::array();
  for (std::size_t i = 0; i < terms.terms.size(); ++i) {
    const OverlapTerm& t = terms.terms[i];
    json j;
    j["l"] = t.index.l;
    if (t.index.has_jk) {
      j["j"] = t.index.j;
      j["k"] = t.index.k;
    }
    j["weight"] = complex_to_json(t.weight);
    j["paired"] = t.uses_conjugate_pair;
    if (i < overlaps.size()) {
      j["overlap"] = complex_to_json(overlaps[i]);
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace qperm
