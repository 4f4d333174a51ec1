#pragma once

#include <json.hpp>

#include "experiment.hpp"
#include "hyperspace.hpp"
#include "matrix.hpp"
#include "witness.hpp"

namespace shiftspace {

// All reports are nlohmann json objects with alphabetically sorted keys and
// no floating point: rationals travel as "p" / "p/q" strings, so a report
// serializes to identical bytes on every run with the same config.
using Json = nlohmann::json;

std::string dump_report(const Json& report);  // 2-space indent + newline

Json rle_intervals(const std::vector<bool>& bits);  // [[lo,hi], ...]

Json set_literals(const FiniteCompactSet& s);

Json classification_report(const SftClassification& c);
Json dist_report(const std::string& lit_a, const std::string& lit_b, const Rational& value);
Json hausdorff_report(const FiniteCompactSet& a, const FiniteCompactSet& b,
                      std::size_t depth);
Json sens_report(const std::string& system, const std::string& cylinder,
                 const SensitivityTimeSet& ts);
Json liyorke_scan_report(const LiYorkeScan& scan);
Json expansivity_report(std::size_t n, std::size_t invariance_depth);
Json probe_report(const std::string& src, const std::string& dst, std::size_t horizon,
                  const std::optional<ProbeHit>& hit);

Json periodize_report(const PeriodizeWitness& w);
Json leo_report(const LeoWitness& w, const FiniteCompactSet& k_set);
Json full_sens_report(const FullShiftSensitivityWitness& w, const FiniteCompactSet& a,
                      std::size_t n);
Json liyorke_witness_report(const SymbolStream& x, const SymbolStream& y, std::size_t n0,
                            const LiYorkeScan& scan);
Json sft_sens_report(const SftSensitivityWitness& w, const FiniteCompactSet& a);
Json dense_periodic_report(const DensePeriodicWitness& w, std::size_t n);
Json example2_report(const Example2Witness& w, const std::vector<std::size_t>& offsets,
                     std::size_t depth, std::size_t horizon);

}  // namespace shiftspace
