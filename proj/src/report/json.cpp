#include "report/json.hpp"

#include <climits>

#include "padic/literal.hpp"

namespace report {

Json norm_json(const padic::Norm& n) {
  if (n.is_zero()) return Json{{"zero", true}};
  return Json{{"exp", n.exponent()}};
}

Json padic_json(const padic::PadicNumber& x) {
  Json j;
  j["literal"] = padic::format_literal(x);
  j["exact"] = x.is_exact();
  if (!x.is_zero()) {
    j["valuation"] = x.valuation();
    if (!x.is_exact()) j["absolute_precision"] = x.absolute_precision();
  }
  j["norm"] = norm_json(x.norm());
  return j;
}

Json params_json(const potts::ModelParams& params, int digits) {
  Json j;
  j["p"] = params.prime.value();
  j["q"] = params.q;
  j["rho"] = padic_json(params.rho);
  j["rho_source"] = params.source == potts::RhoSource::ExpOf ? "exp_of" : "literal";
  if (params.coupling) j["coupling"] = padic_json(*params.coupling);
  j["digits"] = digits;
  return j;
}

Json verdict_json(const potts::RegimeVerdict& v) {
  Json j;
  j["regime"] = potts::to_string(v.regime);
  j["subcase"] = v.subcase;
  j["predicted_measures"] = v.predicted_measures ? Json(*v.predicted_measures) : Json(nullptr);
  j["predicted_ep_measures"] = v.predicted_ep_measures ? Json(*v.predicted_ep_measures) : Json(nullptr);
  Json details = Json::object();
  for (const auto& [k, value] : v.details) details[k] = value;
  j["details"] = details;
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json guards = Json::array();
    for (const auto& g : c.guards) guards.push_back({{"condition", g.condition}, {"observed", g.observed}, {"pass", g.pass}});
    checks.push_back({{"regime", potts::to_string(c.regime)}, {"matched", c.matched()}, {"guards", guards}});
  }
  j["checks"] = checks;
  return j;
}

Json prediction_json(const potts::PredictionCheck& c) {
  Json j{{"agrees", c.agrees}};
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

Json catalog_json(const potts::MeasureCatalog& c) {
  Json measures = Json::array();
  for (const auto& m : c.measures) {
    Json e;
    e["label"] = m.label;
    e["x"] = padic_json(m.x);
    if (m.z) e["z"] = padic_json(*m.z);
    e["denom_norm"] = norm_json(m.boundedness.denom_norm);
    e["root_norm"] = norm_json(m.boundedness.root_norm);
    e["growth"] = m.boundedness.growth;
    e["bounded"] = m.boundedness.bounded;
    e["in_Ep"] = m.in_Ep;
    e["residual_digits"] = m.residual_digits;
    measures.push_back(e);
  }
  Json j;
  j["count"] = c.size();
  j["measures"] = measures;
  j["scales"] = c.scales;
  j["alpha"] = padic_json(c.coefficients.alpha);
  j["beta"] = padic_json(c.coefficients.beta);
  return j;
}

Json transition_json(const potts::TransitionVerdict& t) {
  return Json{{"kind", potts::to_string(t.kind)},
              {"bounded", t.bounded},
              {"unbounded", t.unbounded},
              {"witness_checked", t.witness_checked},
              {"witness_passed", t.witness_passed}};
}

Json series_json(const cayley::NormSeries& s) {
  Json exps = Json::array();
  for (auto e : s.log_norms) exps.push_back(Json{{"exp", e}});
  return Json{{"measure", s.label},
              {"norms", exps},
              {"strictly_increasing", s.strictly_increasing()},
              {"strictly_decreasing", s.strictly_decreasing()}};
}

Json common_witness_json(const cayley::CommonWitness& w) {
  Json seq = Json::array();
  for (const auto& pt : w.sequence) seq.push_back({{"n", pt.n}, {"hamiltonian", pt.hamiltonian}, {"ones", pt.ones}});
  return Json{{"sequence", seq},
              {"unbounded", series_json(w.unbounded)},
              {"bounded", series_json(w.bounded)},
              {"holds", w.holds()}};
}

Json witness_json(const cayley::WitnessReport& w) {
  Json j;
  j["levels"] = w.n_max;
  j["mu0_alternating"] = series_json(w.mu0_alternating);
  j["mu2_tilde"] = series_json(w.mu2_tilde);
  j["product_tilde"] = series_json(w.product_tilde);
  j["product_bounded"] = w.product_bounded;
  j["common"] = w.common ? common_witness_json(*w.common) : Json(nullptr);
  return j;
}

Json root_report_json(const padic::ZpStarRootReport& r) {
  Json j;
  j["norm_class"] = padic::to_string(r.norm_class);
  j["solvable"] = r.solvable;
  j["count"] = r.count;
  j["rule"] = r.rule;
  j["a0"] = r.a0;
  j["b0"] = r.b0;
  j["d0"] = r.d0_integer;
  j["u_p_minus_2"] = r.u_p_minus_2;
  if (r.discriminant) j["discriminant"] = padic_json(*r.discriminant);
  if (r.discriminant_digit) j["discriminant_digit"] = *r.discriminant_digit;
  return j;
}

Json compatibility_json(const cayley::CompatibilityReport& r) {
  Json j;
  j["base_configurations"] = r.base_configurations;
  j["terms"] = r.terms;
  // Residual norm relative to mu_{n-1}(sigma): p^-worst_agreement, or zero.
  j["max_relative_residual"] = r.worst_agreement == INT_MAX ? norm_json(padic::Norm::zero())
                                                           : norm_json(padic::Norm::power(-r.worst_agreement));
  j["required_digits"] = r.required_digits;
  j["pass"] = r.pass;
  return j;
}

Json recursion_json(const cayley::RecursionReport& r) {
  return Json{{"a", padic_json(r.a)},
              {"partition", padic_json(r.partition)},
              {"previous_partition", padic_json(r.previous_partition)},
              {"recursion_holds", r.recursion_holds},
              {"closed_form_holds", r.closed_form_holds},
              {"closed_form_without_root_factor_holds", r.closed_form_without_root_holds},
              {"norm_identity_holds", r.norm_identity_holds}};
}

Json norm_check_json(const cayley::NormCheckReport& r) {
  Json j{{"configurations", r.configurations},
         {"classes", r.classes},
         {"mismatched_configurations", r.mismatched_configurations},
         {"normalized", r.normalized},
         {"pass", r.pass()}};
  if (!r.first_mismatch.empty()) j["first_mismatch"] = r.first_mismatch;
  return j;
}

}  // namespace report
