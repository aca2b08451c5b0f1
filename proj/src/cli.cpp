#include "cent2/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cent2/oracle.hpp"
#include "cent2/parse.hpp"
#include "cent2/serialize.hpp"

namespace cent2::cli {

namespace {

constexpr const char* kGrammar = R"(Literals:
  --ring    int/<k> | gauss/<a+bi> | poly/<p>/<f>     e.g. int/12, gauss/1+1i, poly/2/x^2+x+1
  --matrix  "[[e,f],[g,h]]" with entries in the base ring
  Gaussian imaginary parts need an explicit coefficient: 1i, -1i, 3+6i.
)";

// A ParseError raised while reading one option's value, with that value.
struct InputError {
  std::string option;
  std::string text;
  ParseError error;
};

template <class F>
auto parsing(const std::string& option, const std::string& text, F f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError{option, text, e};
  }
}

struct Options {
  std::string ring = "";
  std::string matrix = "";
  std::string format = "text";
  std::uint64_t budget = Budget{}.cap;
  unsigned threads = 0;
  bool keep_lift = false;
  bool exhaustive = false;
  bool verify = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  std::int64_t p = 0;

  Budget limits() const { return {budget, threads}; }
};

Context ring_of(const Options& o) {
  return parsing("--ring", o.ring, [&] { return parse_ring(o.ring); });
}

// The matrix as a lift: canonical representatives unless --keep-lift.
Mat2<Element> matrix_of(const Options& o, const QuotientContext& ctx) {
  Mat2<Element> b = parsing("--matrix", o.matrix, [&] { return parse_matrix2(o.matrix, ctx.ring()); });
  return o.keep_lift ? b : lift(reduce(ctx, b));
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string ideal_text(const PrincipalIdeal& i) { return "<" + i.generator.to_string() + ">"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_describe(const Options& o, std::ostream& out) {
  Context ctx = ring_of(o);
  const CentralizerDescription d = describe(ctx, matrix_of(o, *ctx));
  if (o.format == "json") {
    print_json(out, describe_json(d));
    return kOk;
  }
  out << "ring       " << ctx->spec() << '\n';
  out << "B          " << to_string(d.bhat) << '\n';
  if (d.s1_generators) {
    out << "S1         {vE + wC}  E = " << to_string(d.s1_generators->first)
        << "  C = " << to_string(d.s1_generators->second) << '\n';
  } else {
    out << "S1         full matrix ring\n";
  }
  out << "S2         [[" << ideal_text(d.s2.e) << "," << ideal_text(d.s2.f) << "],[" << ideal_text(d.s2.g) << ","
      << ideal_text(d.s2.h) << "]]\n";
  out << "witness t  " << d.witness.t.to_string() << "  (" << to_string(d.witness.pair) << ")\n";
  out << "defect d   " << d.defect.to_string() << '\n';
  out << "|Cen|      " << to_string(d.cardinality) << '\n';
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  Context ctx = ring_of(o);
  const CountSummary s = count_summary(ctx, matrix_of(o, *ctx));
  if (o.format == "json") {
    print_json(out, count_json(s));
    return kOk;
  }
  out << "cardinality  " << to_string(s.cardinality) << '\n';
  out << "defect d     " << s.classes.d.to_string() << '\n';
  out << "k/d          " << s.classes.k_over_d.to_string() << '\n';
  out << "class size   " << to_string(s.classes.class_size) << '\n';
  out << "classes      " << to_string(s.classes.class_count) << '\n';
  for (std::size_t i = 0; i < s.crt.factors.size(); ++i)
    out << "crt factor   " << s.crt.factors[i].ctx->spec() << "  |Cen| = " << to_string(s.crt_counts[i]) << '\n';
  return kOk;
}

int cmd_containment(const Options& o, std::ostream& out) {
  Context ctx = ring_of(o);
  const ContainmentReport r = report(*ctx, matrix_of(o, *ctx));
  if (o.format == "json") {
    print_json(out, containment_json(r));
    return kOk;
  }
  out << "S2 in S1   " << yes_no(r.s2_subset_s1) << '\n';
  out << "S1 in S2   " << yes_no(r.s1_subset_s2) << '\n';
  out << "S1 = S2    " << yes_no(r.s1_equals_s2) << '\n';
  out << "defect d   " << r.defect.to_string() << '\n';
  for (const auto& d : r.diagnostics) {
    out << "  " << d.predicate << ": " << d.condition;
    if (d.prime) out << " [prime " << d.prime->to_string() << "^" << d.exponent << "]";
    out << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Context ctx = ring_of(o);
  const Mat2<Element> b = matrix_of(o, *ctx);
  const Budget budget = o.limits();
  const oracle::FiniteRing ring(ctx);
  const oracle::InstanceCheck inst = oracle::check_instance(ring, b, budget);
  const bool transpose_ok = oracle::transpose_check(ring, reduce(*ctx, b), budget);
  std::mt19937_64 rng(o.seed);
  const oracle::EquivCheck eq = oracle::check_equivalence(ring, b, rng, 200, budget);
  const oracle::CrtCheck crt = oracle::check_crt(ctx, b, budget);

  std::vector<std::string> mismatches = inst.mismatches;
  if (!transpose_ok) mismatches.push_back("Cen(B^T) != Cen(B)^T");
  mismatches.insert(mismatches.end(), eq.mismatches.begin(), eq.mismatches.end());
  mismatches.insert(mismatches.end(), crt.mismatches.begin(), crt.mismatches.end());

  if (o.format == "json") {
    print_json(out, {{"ok", mismatches.empty()},
                     {"formula_count", cardinality_json(inst.formula_count)},
                     {"oracle_count", inst.oracle_count},
                     {"sumset_matches", inst.sumset_matches},
                     {"transpose_ok", transpose_ok},
                     {"classes_ok", eq.ok()},
                     {"crt_ok", crt.ok()},
                     {"seed", o.seed},
                     {"mismatches", mismatches}});
  } else {
    out << "formula count  " << to_string(inst.formula_count) << '\n';
    out << "oracle count   " << inst.oracle_count << '\n';
    out << "S1 + S2 = Cen  " << yes_no(inst.sumset_matches) << '\n';
    out << "transpose law  " << yes_no(transpose_ok) << '\n';
    out << "classes        " << (eq.degenerate ? "single class" : yes_no(eq.ok())) << '\n';
    out << "crt            " << yes_no(crt.ok()) << '\n';
    for (const auto& m : mismatches) out << "mismatch: " << m << '\n';
    out << (mismatches.empty() ? "ok" : "FAILED") << '\n';
  }
  return mismatches.empty() ? kOk : kMismatch;
}

int cmd_crt(const Options& o, std::ostream& out) {
  Context ctx = ring_of(o);
  const CrtDecomposition dec = crt_decompose(ctx);
  std::optional<Mat2<Element>> b;
  if (!o.matrix.empty()) b = matrix_of(o, *ctx);
  nlohmann::json factors = nlohmann::json::array();
  Cardinality product = 1;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const auto& f = dec.factors[i];
    nlohmann::json item{{"ring", f.ctx->spec()},
                        {"size", f.ctx->size()},
                        {"idempotent", ctx->reduce(dec.idempotents[i]).to_string()}};
    if (b) {
      Cardinality c = count(*f.ctx, *b);
      product = checked_mul(product, c);
      item["cardinality"] = cardinality_json(c);
    }
    factors.push_back(std::move(item));
  }
  if (o.format == "json") {
    nlohmann::json j{{"ring", ctx->spec()}, {"factors", factors}};
    if (b) {
      j["cardinality"] = cardinality_json(count(*ctx, *b));
      j["product"] = cardinality_json(product);
    }
    print_json(out, j);
    return kOk;
  }
  out << ctx->spec() << " =";
  for (std::size_t i = 0; i < dec.factors.size(); ++i) out << (i ? " + " : " ") << dec.factors[i].ctx->spec();
  out << '\n';
  for (const auto& f : factors) {
    out << "  " << f["ring"].get<std::string>() << "  size " << f["size"] << "  idempotent "
        << f["idempotent"].get<std::string>();
    if (b) out << "  |Cen| " << f["cardinality"].dump();
    out << '\n';
  }
  if (b) out << "product " << to_string(product) << "  |Cen| " << to_string(count(*ctx, *b)) << '\n';
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  Context ctx = ring_of(o);
  const Budget budget = o.limits();
  const std::uint64_t n = ctx->size();
  if (o.exhaustive == (o.sample > 0)) {
    err << "error: sweep needs exactly one of --exhaustive or --sample <n>\n";
    return kUsage;
  }
  std::vector<Mat2<Element>> matrices;
  const auto residues = ctx->enumerate();
  if (o.exhaustive) {
    require_budget("exhaustive sweep rows", checked::mul(checked::mul(n, n), checked::mul(n, n)), budget);
    for (const auto& e : residues)
      for (const auto& f : residues)
        for (const auto& g : residues)
          for (const auto& h : residues) matrices.push_back({e.lift(), f.lift(), g.lift(), h.lift()});
  } else {
    std::mt19937_64 rng(o.seed);
    auto draw = [&] { return residues[static_cast<std::size_t>(rng() % n)].lift(); };
    for (std::uint64_t i = 0; i < o.sample; ++i) {
      Element e = draw(), f = draw(), g = draw(), h = draw();
      matrices.push_back({e, f, g, h});
    }
  }
  std::optional<oracle::FiniteRing> ring;
  if (o.verify) ring.emplace(ctx);

  const bool json = o.format == "json";
  nlohmann::json rows = nlohmann::json::array();
  if (!json) out << "matrix,defect,formula_count,oracle_count,s2_in_s1,s1_in_s2,equal,ok\n";
  std::uint64_t mismatches = 0;
  for (const auto& b : matrices) {
    const ContainmentReport r = report(*ctx, b);
    const Cardinality formula = count(*ctx, b);
    std::optional<oracle::InstanceCheck> check;
    if (ring) check = oracle::check_instance(*ring, b, budget);
    const bool ok = !check || check->ok();
    if (!ok) ++mismatches;
    const std::string m = to_string(b);
    if (json) {
      nlohmann::json row{{"matrix", m},
                         {"defect", r.defect.to_string()},
                         {"formula_count", cardinality_json(formula)},
                         {"s2_in_s1", r.s2_subset_s1},
                         {"s1_in_s2", r.s1_subset_s2},
                         {"equal", r.s1_equals_s2},
                         {"ok", ok}};
      if (check) {
        row["oracle_count"] = check->oracle_count;
        row["mismatches"] = check->mismatches;
      }
      rows.push_back(std::move(row));
    } else {
      out << '"' << m << "\"," << r.defect.to_string() << ',' << to_string(formula) << ','
          << (check ? std::to_string(check->oracle_count) : "") << ',' << r.s2_subset_s1 << ',' << r.s1_subset_s2 << ','
          << r.s1_equals_s2 << ',' << ok << '\n';
    }
  }
  const std::string seed = o.exhaustive ? "-" : std::to_string(o.seed);
  if (json) {
    print_json(out, {{"ring", ctx->spec()},
                     {"rows", rows},
                     {"summary", {{"rows", matrices.size()}, {"mismatches", mismatches}, {"seed", seed}}}});
  } else {
    out << "# summary rows=" << matrices.size() << " mismatches=" << mismatches << " seed=" << seed
        << " verified=" << (o.verify ? 1 : 0) << '\n';
  }
  return mismatches == 0 ? kOk : kMismatch;
}

int cmd_field(const Options& o, std::ostream& out) {
  const Mat2<Element> b = parsing("--matrix", o.matrix, [&] { return parse_matrix2(o.matrix, BaseRing::integers()); });
  const FieldCentralizer fc = field_centralizer(o.p, b);
  nlohmann::json j{{"p", o.p}, {"case", to_string(fc.which)}, {"cardinality", cardinality_json(fc.cardinality)}};
  if (fc.parameters) {
    j["P"] = matrix_json(fc.parameters->first);
    j["Q"] = matrix_json(fc.parameters->second);
  }
  if (o.verify) {
    const oracle::FieldCheck check = oracle::check_field(o.p, b, o.limits());
    j["oracle_count"] = check.oracle_count;
    j["elements_match"] = check.elements_match;
  }
  if (o.format == "json") {
    print_json(out, j);
  } else {
    out << "case         " << to_string(fc.which) << '\n';
    if (fc.parameters)
      out << "Cen          {aP + bQ}  P = " << to_string(fc.parameters->first) << "  Q = " << to_string(fc.parameters->second)
          << '\n';
    else
      out << "Cen          full matrix ring\n";
    out << "cardinality  " << to_string(fc.cardinality) << '\n';
    if (o.verify) out << "oracle       " << j["oracle_count"] << (j["elements_match"].get<bool>() ? "  match" : "  MISMATCH") << '\n';
  }
  if (o.verify && !j["elements_match"].get<bool>()) return kMismatch;
  return kOk;
}

void report_input_error(const InputError& e, std::ostream& err) {
  err << "error: " << e.option << ": " << e.error.message() << '\n';
  err << "  " << e.text << '\n';
  err << "  " << std::string(std::min(e.error.position(), e.text.size()), ' ') << "^\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Centralizers of 2x2 matrices over R/<k> for R = Z, Z[i], F_p[x].", "cent2");
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_matrix) {
    sub->add_option("--ring", o.ring, "ring spec")->required();
    auto* m = sub->add_option("--matrix", o.matrix, "2x2 matrix literal");
    if (needs_matrix) m->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", o.budget, "enumeration cap for oracles");
    sub->add_option("--threads", o.threads, "oracle worker threads (0 = all cores)");
    sub->add_flag("--keep-lift", o.keep_lift, "use the matrix entries as given instead of canonical representatives");
  };

  auto* describe_cmd = app.add_subcommand("describe", "S1, S2, witness, defect and cardinality");
  common(describe_cmd, true);
  auto* count_cmd = app.add_subcommand("count", "exact |Cen| with class and CRT structure");
  common(count_cmd, true);
  auto* containment_cmd = app.add_subcommand("containment", "S2 in S1, S1 in S2, S1 = S2");
  common(containment_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "cross-check one matrix against the enumeration oracles");
  common(verify_cmd, true);
  verify_cmd->add_option("--seed", o.seed, "seed for class resampling");
  auto* crt_cmd = app.add_subcommand("crt", "prime-power splitting of R/<k>");
  common(crt_cmd, false);
  auto* sweep_cmd = app.add_subcommand("sweep", "one CSV row per matrix");
  common(sweep_cmd, false);
  sweep_cmd->add_flag("--exhaustive", o.exhaustive, "every matrix over R/<k>");
  sweep_cmd->add_option("--sample", o.sample, "number of random matrices");
  sweep_cmd->add_option("--seed", o.seed, "PRNG seed for --sample");
  sweep_cmd->add_flag("--verify", o.verify, "compare every row with the oracles");
  auto* field_cmd = app.add_subcommand("field", "centralizer over F_p by case");
  field_cmd->add_option("--p", o.p, "prime")->required();
  field_cmd->add_option("--matrix", o.matrix, "2x2 integer matrix literal")->required();
  field_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  field_cmd->add_option("--budget", o.budget, "enumeration cap for --verify");
  field_cmd->add_flag("--verify", o.verify, "compare with brute force");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (describe_cmd->parsed()) return cmd_describe(o, out);
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (containment_cmd->parsed()) return cmd_containment(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (crt_cmd->parsed()) return cmd_crt(o, out);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out, err);
    if (field_cmd->parsed()) return cmd_field(o, out);
  } catch (const InputError& e) {
    report_input_error(e, err);
    return kUsage;
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cent2::cli
