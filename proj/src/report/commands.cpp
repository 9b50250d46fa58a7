#include "report/commands.hpp"

#include <map>

#include "padic/errors.hpp"
#include "padic/literal.hpp"

namespace report {

namespace {

// Truncated literals and exp_p carry this many digits beyond the catalog's
// guard so that rounding in the cubic's coefficients stays below the target.
constexpr int kInputSlack = 4;

padic::PrecisionContext input_context(int digits) {
  return padic::PrecisionContext::with_digits(digits + potts::kCatalogGuardDigits + kInputSlack);
}

Json header(const std::string& command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

struct ErrorKind {
  const char* name;
  ExitCode code;
};

ErrorKind classify_error(const std::exception& e) {
  if (dynamic_cast<const padic::ParseError*>(&e)) return {"parse", ExitCode::Parse};
  if (dynamic_cast<const padic::ResourceError*>(&e)) return {"resource", ExitCode::Resource};
  if (dynamic_cast<const padic::InvariantViolation*>(&e)) return {"invariant", ExitCode::Oracle};
  if (dynamic_cast<const padic::PrecisionError*>(&e)) return {"precision", ExitCode::Domain};
  if (dynamic_cast<const padic::SingularityError*>(&e)) return {"singularity", ExitCode::Domain};
  if (dynamic_cast<const padic::HypothesisError*>(&e)) return {"hypothesis", ExitCode::Domain};
  if (dynamic_cast<const padic::DomainError*>(&e)) return {"domain", ExitCode::Domain};
  return {"internal", ExitCode::Domain};
}

Json error_json(const std::exception& e) {
  return Json{{"kind", classify_error(e).name}, {"message", e.what()}};
}

std::optional<cayley::WitnessReport> try_witness(const potts::ModelParams& params, const potts::MeasureCatalog& catalog,
                                                 int levels) {
  try {
    return cayley::witness_trajectories(params, catalog, levels);
  } catch (const padic::DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

potts::ModelParams build_params(const ModelSpec& spec) {
  if (spec.rho.has_value() == spec.exp_of.has_value()) {
    throw padic::ParseError("give exactly one of --rho and --exp");
  }
  const padic::Prime prime(spec.p);
  const padic::PrecisionContext ctx = input_context(spec.digits);
  if (spec.rho) return potts::ModelParams::with_rho(prime, spec.q, padic::parse_literal(*spec.rho, prime, ctx));
  return potts::ModelParams::with_coupling(prime, spec.q, padic::parse_literal(*spec.exp_of, prime, ctx), ctx);
}

potts::WitnessProbe common_witness_probe(int levels) {
  return [levels](const potts::ModelParams& params, const potts::MeasureCatalog& catalog) {
    return cayley::find_common_witness(params, catalog, levels).has_value();
  };
}

CommandResult classify(const ClassifyOptions& opts) {
  const potts::ModelParams params = build_params(opts.model);
  const potts::RegimeVerdict verdict = potts::regime_classify(params);
  const potts::MeasureCatalog catalog = potts::fixed_points(params, opts.model.digits);
  const potts::PredictionCheck prediction = potts::check_prediction(verdict, catalog);
  const potts::TransitionVerdict transition =
      potts::transition_classify(params, catalog, common_witness_probe(opts.witness_levels));

  CommandResult r{header("classify"), verdict.covered() ? ExitCode::Ok : ExitCode::Uncovered};
  r.record["params"] = params_json(params, opts.model.digits);
  r.record["verdict"] = verdict_json(verdict);
  r.record["catalog"] = catalog_json(catalog);
  r.record["prediction"] = prediction_json(prediction);
  r.record["transition"] = transition_json(transition);
  if (auto w = try_witness(params, catalog, opts.witness_levels)) {
    r.record["witness"] = witness_json(*w);
  } else if (auto c = cayley::find_common_witness(params, catalog, opts.witness_levels)) {
    r.record["witness"] = Json{{"common", common_witness_json(*c)}};
  } else {
    r.record["witness"] = nullptr;
  }
  return r;
}

CommandResult roots(const RootsOptions& opts) {
  const padic::Prime prime(opts.p);
  const padic::PrecisionContext ctx = input_context(opts.digits);
  const padic::CubicProblem problem(padic::parse_literal(opts.a, prime, ctx), padic::parse_literal(opts.b, prime, ctx));
  const padic::ZpStarRootReport report = padic::zp_star_root_count(problem);

  CommandResult r{header("roots"), ExitCode::Ok};
  r.record["params"] = Json{{"p", opts.p},
                            {"a", padic_json(problem.a)},
                            {"b", padic_json(problem.b)},
                            {"digits", opts.digits}};
  r.record["report"] = root_report_json(report);
  Json list = Json::array();
  for (const auto& y : padic::zp_star_roots(problem, opts.digits)) list.push_back(padic_json(y));
  r.record["roots"] = list;
  if (opts.oracle_depth) {
    const int oracle = padic::brute_force_root_count(problem, *opts.oracle_depth);
    const bool agrees = oracle == report.count;
    r.record["oracle"] = Json{{"depth", *opts.oracle_depth}, {"count", oracle}, {"agrees", agrees}};
    if (!agrees) r.code = ExitCode::Oracle;
  } else {
    r.record["oracle"] = nullptr;
  }
  return r;
}

CommandResult simulate(const SimulateOptions& opts) {
  const potts::ModelParams params = build_params(opts.model);
  if (opts.n < 1) throw padic::DomainError("simulate needs n >= 1");
  cayley::enumeration_size(params.q, cayley::TreeSlice(opts.n));
  const potts::MeasureCatalog catalog = potts::fixed_points(params, opts.model.digits);

  const char* check_name = opts.check == SimulateCheck::Compatibility ? "compat"
                           : opts.check == SimulateCheck::Recursion   ? "recursion"
                                                                      : "norms";
  CommandResult r{header("simulate"), ExitCode::Ok};
  r.record["params"] = params_json(params, opts.model.digits);
  r.record["n"] = opts.n;
  r.record["check"] = check_name;
  Json results = Json::array();
  bool matched_label = !opts.measure.has_value();
  for (const auto& m : catalog.measures) {
    if (opts.measure && *opts.measure != m.label) continue;
    matched_label = true;
    const cayley::BoundaryField field = cayley::BoundaryField::invariant_line(m.x, params.q);
    Json entry{{"measure", m.label}, {"x", padic_json(m.x)}};
    bool pass = false;
    switch (opts.check) {
      case SimulateCheck::Compatibility: {
        const auto c = cayley::check_compatibility(params, field, opts.n, opts.model.digits);
        entry["report"] = compatibility_json(c);
        pass = c.pass;
        break;
      }
      case SimulateCheck::Recursion: {
        const auto c = cayley::check_partition_recursion(params, field, opts.n);
        entry["report"] = recursion_json(c);
        pass = c.recursion_holds && c.closed_form_holds && c.norm_identity_holds;
        break;
      }
      case SimulateCheck::Norms: {
        const cayley::TreeSlice slice(opts.n);
        const auto c = cayley::check_closed_form_norms(params, m.x, slice);
        entry["report"] = norm_check_json(c);
        const auto table = cayley::enumerate_measure(params, field, slice);
        Json rows = Json::array();
        for (const auto& cls : table.classes) {
          const padic::PadicNumber mu = cls.weight / table.partition;
          rows.push_back({{"hamiltonian", cls.hamiltonian},
                          {"leaf_counts", cls.leaf_counts},
                          {"configurations", cls.configurations},
                          {"enumerated", norm_json(mu.norm())},
                          {"closed_form",
                           Json{{"exp", cayley::closed_form_log_norm(m.x, params, opts.n, cls.hamiltonian,
                                                                     cls.leaf_counts[1])}}}});
        }
        entry["table"] = rows;
        pass = c.pass();
        break;
      }
    }
    entry["pass"] = pass;
    if (!pass) r.code = ExitCode::Oracle;
    results.push_back(entry);
  }
  if (!matched_label) throw padic::DomainError("no catalogued measure is labelled " + *opts.measure);
  r.record["results"] = results;
  return r;
}

CommandResult scan(const ScanOptions& opts) {
  CommandResult r{header("scan"), ExitCode::Ok};
  r.record["params"] = Json{{"p", opts.p},
                            {"q_from", opts.q_from},
                            {"q_to", opts.q_to},
                            {"rho", opts.rho ? Json(*opts.rho) : Json(nullptr)},
                            {"exp_of", opts.exp_of ? Json(*opts.exp_of) : Json(nullptr)},
                            {"digits", opts.digits}};
  Json rows = Json::array();
  std::map<std::string, int> by_regime;
  std::map<std::string, int> by_transition;
  int disagreements = 0;
  int errors = 0;
  for (long q = opts.q_from; q <= opts.q_to; ++q) {
    Json row{{"q", q}};
    try {
      const potts::ModelParams params = build_params({opts.p, q, opts.rho, opts.exp_of, opts.digits});
      const auto verdict = potts::regime_classify(params);
      const auto catalog = potts::fixed_points(params, opts.digits);
      const auto prediction = potts::check_prediction(verdict, catalog);
      const auto transition = potts::transition_classify(params, catalog, common_witness_probe(10));
      row["regime"] = potts::to_string(verdict.regime);
      row["subcase"] = verdict.subcase;
      row["predicted_measures"] = verdict.predicted_measures ? Json(*verdict.predicted_measures) : Json(nullptr);
      row["measures"] = catalog.size();
      row["prediction_agrees"] = prediction.agrees;
      row["transition"] = potts::to_string(transition.kind);
      ++by_regime[potts::to_string(verdict.regime)];
      ++by_transition[potts::to_string(transition.kind)];
      disagreements += prediction.agrees ? 0 : 1;
    } catch (const std::exception& e) {
      row["error"] = error_json(e);
      ++errors;
      if (classify_error(e).code == ExitCode::Oracle) r.code = ExitCode::Oracle;
      if (classify_error(e).code == ExitCode::Parse) throw;
    }
    rows.push_back(row);
  }
  Json regimes = Json::object();
  for (const auto& [k, v] : by_regime) regimes[k] = v;
  Json transitions = Json::object();
  for (const auto& [k, v] : by_transition) transitions[k] = v;
  r.record["rows"] = rows;
  r.record["summary"] = Json{{"points", rows.size()},
                             {"regimes", regimes},
                             {"transitions", transitions},
                             {"prediction_disagreements", disagreements},
                             {"errors", errors}};
  return r;
}

CommandResult error_result(const std::exception& e, const std::string& command) {
  CommandResult r{header(command), classify_error(e).code};
  r.record["error"] = error_json(e);
  return r;
}

}  // namespace report
