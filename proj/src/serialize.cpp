#include "cent2/serialize.hpp"

namespace cent2 {

nlohmann::json cardinality_json(Cardinality value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(value);
  return to_string(value);
}

namespace {

// Built with json::array so two-string rows are not read as key/value pairs.
nlohmann::json rows(const std::string& e, const std::string& f, const std::string& g, const std::string& h) {
  return nlohmann::json::array({nlohmann::json::array({e, f}), nlohmann::json::array({g, h})});
}

}  // namespace

nlohmann::json matrix_json(const Mat2<Residue>& a) {
  return rows(a.e.to_string(), a.f.to_string(), a.g.to_string(), a.h.to_string());
}

nlohmann::json describe_json(const CentralizerDescription& d) {
  nlohmann::json out;
  out["ring"] = d.ctx->spec();
  out["k"] = d.ctx->modulus().to_string();
  out["B"] = matrix_json(d.bhat);
  if (d.s1_generators) {
    out["s1"] = {{"E", matrix_json(d.s1_generators->first)}, {"C", matrix_json(d.s1_generators->second)}};
  } else {
    out["s1"] = "full";
  }
  out["s2_generators"] = rows(d.s2.e.generator.to_string(), d.s2.f.generator.to_string(),
                              d.s2.g.generator.to_string(), d.s2.h.generator.to_string());
  out["witness_t"] = d.witness.t.to_string();
  out["witness_pair"] = to_string(d.witness.pair);
  out["defect_d"] = d.defect.to_string();
  out["cardinality"] = cardinality_json(d.cardinality);
  return out;
}

nlohmann::json containment_json(const ContainmentReport& r) {
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& d : r.diagnostics) {
    nlohmann::json item{{"predicate", d.predicate}, {"condition", d.condition}};
    if (d.prime) {
      item["prime"] = d.prime->to_string();
      item["exponent"] = d.exponent;
    }
    diags.push_back(std::move(item));
  }
  return {{"s2_in_s1", r.s2_subset_s1},
          {"s1_in_s2", r.s1_subset_s2},
          {"equal", r.s1_equals_s2},
          {"defect", r.defect.to_string()},
          {"diagnostics", std::move(diags)}};
}

CountSummary count_summary(const Context& ctx, const Mat2<Element>& b) {
  CountSummary s{count(*ctx, b), equiv_structure(ctx, b), crt_decompose(ctx), {}};
  for (const auto& f : s.crt.factors) s.crt_counts.push_back(count(*f.ctx, b));
  return s;
}

nlohmann::json count_json(const CountSummary& s) {
  nlohmann::json factors = nlohmann::json::array();
  for (std::size_t i = 0; i < s.crt.factors.size(); ++i) {
    const auto& f = s.crt.factors[i];
    factors.push_back({{"prime", f.prime_power.prime.to_string()},
                       {"exponent", f.prime_power.exponent},
                       {"ring", f.ctx->spec()},
                       {"cardinality", cardinality_json(s.crt_counts[i])}});
  }
  return {{"cardinality", cardinality_json(s.cardinality)},
          {"defect", s.classes.d.to_string()},
          {"k_over_d", s.classes.k_over_d.to_string()},
          {"class_size", cardinality_json(s.classes.class_size)},
          {"class_count", cardinality_json(s.classes.class_count)},
          {"crt_factors", std::move(factors)}};
}

}  // namespace cent2
