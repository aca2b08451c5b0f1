#pragma once

// JSON shapes for the CLI and for anyone scripting against the library.
//
//   describe:    {ring, k, B, s1: {E, C} | "full", s2_generators, witness_t,
//                 witness_pair, defect_d, cardinality}
//   containment: {s2_in_s1, s1_in_s2, equal, defect, diagnostics[]}
//   count:       {cardinality, defect, k_over_d, class_size, class_count,
//                 crt_factors[]}
//
// Cardinalities are JSON numbers when they fit in 64 bits and decimal
// strings otherwise.

#include "json.hpp"

#include "cent2/centralizer.hpp"
#include "cent2/containment.hpp"
#include "cent2/counting.hpp"

namespace cent2 {

nlohmann::json cardinality_json(Cardinality value);
nlohmann::json matrix_json(const Mat2<Residue>& a);

nlohmann::json describe_json(const CentralizerDescription& d);
nlohmann::json containment_json(const ContainmentReport& r);

struct CountSummary {
  Cardinality cardinality = 0;
  EquivClassStructure classes;
  CrtDecomposition crt;
  std::vector<Cardinality> crt_counts;  // |Cen| over each CRT factor
};

CountSummary count_summary(const Context& ctx, const Mat2<Element>& b);
nlohmann::json count_json(const CountSummary& s);

}  // namespace cent2
