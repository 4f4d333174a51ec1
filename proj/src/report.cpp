#include "report.hpp"

namespace shiftspace {

namespace {

Json rational_json(const Rational& r) { return rational_string(r); }

const char* verdict_name(LiYorkeVerdict v) {
  switch (v) {
    case LiYorkeVerdict::liyorke_pattern: return "li-yorke-pattern";
    case LiYorkeVerdict::proximal_only: return "proximal-only";
    case LiYorkeVerdict::distal_only: return "distal-only";
    default: return "neither";
  }
}

}  // namespace

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

Json rle_intervals(const std::vector<bool>& bits) {
  Json out = Json::array();
  std::size_t i = 0;
  while (i < bits.size()) {
    if (!bits[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < bits.size() && bits[j + 1]) ++j;
    out.push_back({i, j});
    i = j + 1;
  }
  return out;
}

Json set_literals(const FiniteCompactSet& s) {
  Json out = Json::array();
  for (const SymbolStream& e : s.elements())
    out.push_back(e.is_eventually_periodic() ? e.exact_word().literal() : e.spec_string());
  return out;
}

Json classification_report(const SftClassification& c) {
  Json removed = Json::array();
  for (std::size_t i : c.removed) removed.push_back(i + 1);  // 1-based
  Json j{{"command", "classify"},
         {"dimension", c.original_dim},
         {"trimmed_dimension", c.trimmed_dim},
         {"removed_vertices", removed},
         {"essential_trimmed", c.essential_trimmed},
         {"empty_subshift", c.empty}};
  if (c.empty) return j;
  j["irreducible"] = c.irreducible;
  if (c.irreducible) j["period"] = c.period;
  j["aperiodic"] = c.aperiodic;
  j["primitive"] = c.primitive;
  j["transitive"] = c.transitive;
  j["totally_transitive"] = c.totally_transitive;
  j["weakly_mixing"] = c.weakly_mixing;
  j["mixing"] = c.mixing;
  j["sensitive"] = c.sensitive;
  j["dense_periodic_points"] = c.dense_periodic_points;
  j["induced_transitive"] = c.induced_transitive;
  j["induced_weakly_mixing"] = c.induced_weakly_mixing;
  j["induced_mixing"] = c.induced_mixing;
  j["induced_sensitive"] = c.induced_sensitive;
  return j;
}

Json dist_report(const std::string& lit_a, const std::string& lit_b, const Rational& value) {
  return Json{{"command", "dist"},
              {"config", {{"x", lit_a}, {"y", lit_b}}},
              {"value", rational_json(value)}};
}

Json hausdorff_report(const FiniteCompactSet& a, const FiniteCompactSet& b,
                      std::size_t depth) {
  Json j{{"command", "hausdorff"},
         {"config", {{"depth", depth}}},
         {"set_a", set_literals(a)},
         {"set_b", set_literals(b)}};
  if (a.all_eventually_periodic() && b.all_eventually_periodic()) {
    j["exact"] = true;
    j["value"] = rational_json(hausdorff_exact(a, b));
  } else {
    const auto [lo, hi] = hausdorff_bounded(a, b, depth);
    j["exact"] = false;
    j["interval"] = {rational_json(lo), rational_json(hi)};
  }
  return j;
}

Json sens_report(const std::string& system, const std::string& cylinder,
                 const SensitivityTimeSet& ts) {
  const GapStats gaps = gap_stats(ts);
  Json j{{"command", "sens"},
         {"config",
          {{"system", system},
           {"cylinder", cylinder},
           {"delta_exp", ts.delta_exp},
           {"horizon", ts.horizon},
           {"budget", ts.budget}}},
         {"qualifier", "empirical up to horizon"},
         {"anchors", ts.anchors},
         {"times", rle_intervals(ts.times)},
         {"max_gap", gaps.max_gap}};
  j["cofinite_from"] = gaps.cofinite_from ? Json(*gaps.cofinite_from) : Json(nullptr);
  j["syndetic_bound"] = gaps.syndetic_bound ? Json(*gaps.syndetic_bound) : Json(nullptr);
  return j;
}

Json liyorke_scan_report(const LiYorkeScan& scan) {
  std::vector<bool> proximal(scan.classes.size()), distal(scan.classes.size());
  for (std::size_t i = 0; i < scan.classes.size(); ++i) {
    proximal[i] = scan.classes[i] == 1;
    distal[i] = scan.classes[i] == 2;
  }
  return Json{{"horizon", scan.horizon},
              {"delta_exp", scan.delta_exp},
              {"distal_threshold", rational_json(scan.distal_threshold)},
              {"proximal_times", rle_intervals(proximal)},
              {"distal_times", rle_intervals(distal)},
              {"verdict", verdict_name(scan.verdict)}};
}

Json expansivity_report(std::size_t n, std::size_t invariance_depth) {
  const auto [s1, s2] = one_block_sets(n);
  const InvarianceAudit a1 = one_block_invariance_check(s1, invariance_depth);
  const InvarianceAudit a2 = one_block_invariance_check(s2, invariance_depth);
  const Rational value = one_block_hausdorff(n);
  const Rational two_pow_neg_n = pow2_neg(n);
  const Rational two_pow_neg_n1 = pow2_neg(n + 1);
  return Json{{"command", "expansivity-counterexample"},
              {"config", {{"n", n}, {"invariance_depth", invariance_depth}}},
              {"s1_shift_invariant", a1.invariant},
              {"s2_shift_invariant", a2.invariant},
              {"invariance_cases", a1.cases},
              {"hausdorff_value", rational_json(value)},
              {"matches_2_pow_neg_n", value == two_pow_neg_n},
              {"matches_2_pow_neg_n_minus_1", value == two_pow_neg_n1},
              {"below_delta_half", value < Rational(1, 2)}};
}

Json probe_report(const std::string& src, const std::string& dst, std::size_t horizon,
                  const std::optional<ProbeHit>& hit) {
  Json j{{"command", "probe-hyper"},
         {"config", {{"src", src}, {"dst", dst}, {"horizon", horizon}}},
         {"qualifier", "exhaustive over bounded connector lengths"},
         {"found", hit.has_value()}};
  if (hit) {
    j["iterate"] = hit->iterate;
    j["set"] = set_literals(hit->set);
  }
  return j;
}

Json periodize_report(const PeriodizeWitness& w) {
  return Json{{"kind", "periodize"},
              {"set", set_literals(w.set)},
              {"prefix_length", w.prefix_length},
              {"closeness_bound", rational_json(w.closeness_bound)},
              {"orbit_period", w.orbit_period}};
}

Json leo_report(const LeoWitness& w, const FiniteCompactSet& k_set) {
  return Json{{"kind", "leo"},
              {"set", set_literals(w.m_set)},
              {"target", set_literals(k_set)},
              {"steps", w.steps},
              {"exact", w.exact}};
}

Json full_sens_report(const FullShiftSensitivityWitness& w, const FiniteCompactSet& a,
                      std::size_t n) {
  return Json{{"kind", "full-sens"},
              {"config", {{"depth", n}}},
              {"input", set_literals(a)},
              {"set", set_literals(w.b_set)},
              {"tail_symbol", w.tail_symbol},
              {"iterate", w.iterate},
              {"separation", rational_json(w.separation)},
              {"exceeds_half", w.separation > Rational(1, 2)}};
}

Json liyorke_witness_report(const SymbolStream& x, const SymbolStream& y, std::size_t n0,
                            const LiYorkeScan& scan) {
  return Json{{"kind", "liyorke"},
              {"config", {{"n0", n0}}},
              {"x", x.spec_string()},
              {"y", y.spec_string()},
              {"scan", liyorke_scan_report(scan)}};
}

Json sft_sens_report(const SftSensitivityWitness& w, const FiniteCompactSet& a) {
  Json branches = Json::array();
  for (std::size_t b : w.branch_positions) branches.push_back(b);
  Json replaced = Json::array();
  for (bool r : w.replaced) replaced.push_back(r);
  return Json{{"kind", "sft-sens"},
              {"input", set_literals(a)},
              {"set", set_literals(w.c_set)},
              {"iterate", w.iterate},
              {"branch_positions", branches},
              {"replaced", replaced},
              {"separation", rational_json(w.separation)},
              {"certified_at_least_eighth", w.separation >= Rational(1, 8)}};
}

Json dense_periodic_report(const DensePeriodicWitness& w, std::size_t n) {
  return Json{{"kind", "dense-periodic"},
              {"config", {{"depth", n}}},
              {"set", set_literals(w.p_set)},
              {"closeness_bound", rational_json(w.closeness_bound)},
              {"orbit_period", w.orbit_period}};
}

Json example2_report(const Example2Witness& w, const std::vector<std::size_t>& offsets,
                     std::size_t depth, std::size_t horizon) {
  Json j{{"kind", "example2-hyper"},
         {"config", {{"offsets", offsets}, {"depth", depth}, {"horizon", horizon}}},
         {"found", w.found},
         {"collapse_from", w.collapse_from}};
  if (w.b_set) j["set"] = set_literals(*w.b_set);
  if (w.found) {
    j["iterate"] = w.iterate;
    j["lower_bound"] = rational_json(w.lower_bound);
    j["certified_at_least_half"] = w.lower_bound >= Rational(1, 2);
  } else {
    j["note"] = w.note;
  }
  return j;
}

}  // namespace shiftspace
