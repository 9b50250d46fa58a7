#include "potts/regime.hpp"

#include <string>

#include "padic/cubic.hpp"
#include "padic/literal.hpp"
#include "padic/modular.hpp"

namespace potts {

namespace {

using i64 = std::int64_t;

std::string norm_text(const PadicNumber& x) {
  if (x.is_zero()) return "0";
  return std::to_string(x.prime().value()) + "^" + std::to_string(-x.valuation());
}

std::string observed(const std::string& name, const PadicNumber& x) { return name + " = " + norm_text(x); }

// |x|_p <= p^-k
bool norm_at_most(const PadicNumber& x, int k) { return x.is_zero() || x.valuation() >= k; }

bool is_unit(const PadicNumber& x) { return !x.is_zero() && x.valuation() == 0; }

// |x|_p < |y|_p
bool norm_less(const PadicNumber& x, const PadicNumber& y) {
  if (y.is_zero()) return false;
  return x.is_zero() || x.valuation() > y.valuation();
}

i64 residue_of(const mpq_class& v, i64 p) {
  mpz_class num = v.get_num() % p;
  mpz_class den = v.get_den() % p;
  const i64 n = padic::modp::reduce(num.get_si(), p);
  return padic::modp::mul(n, padic::modp::inverse(padic::modp::reduce(den.get_si(), p), p), p);
}

struct SequenceData {
  i64 d0 = 0;  // -4 a0^3 - 27 b0^2 as an integer
  i64 u = 0;   // u_{p-2} under the calibrated convention
  i64 lhs = 0;  // D0 u^2 mod p
  i64 rhs = 0;  // 9 a0^2 mod p
};

SequenceData sequence_data(i64 a0, i64 b0, const Prime& prime) {
  const i64 p = prime.value();
  SequenceData s;
  s.d0 = -4 * a0 * a0 * a0 - 27 * b0 * b0;
  s.u = padic::u_sequence(a0, b0, prime, static_cast<int>(p - 2))[static_cast<std::size_t>(p - 2)];
  s.lhs = padic::modp::mul(padic::modp::reduce(s.d0, p), padic::modp::mul(s.u, s.u, p), p);
  s.rhs = padic::modp::mul(9, padic::modp::mul(a0, a0, p), p);
  return s;
}

void add_sequence_details(RegimeVerdict& v, i64 a0, i64 b0, const SequenceData& s) {
  v.details.emplace_back("a0", a0);
  v.details.emplace_back("b0", b0);
  v.details.emplace_back("d0", s.d0);
  v.details.emplace_back("u_p_minus_2", s.u);
  v.details.emplace_back("d0_u_squared_mod_p", s.lhs);
  v.details.emplace_back("nine_a0_squared_mod_p", s.rhs);
}

RegimeCheck ep_small_q(const ModelParams& params) {
  const PadicNumber& rho = params.rho;
  const PadicNumber q = params.q_value();
  const PadicNumber t = rho - PadicNumber::one(params.prime);
  return {Regime::EpSmallQ,
          {{"rho in E_p", "rho = " + padic::format_literal(rho), padic::is_in_Ep(rho)},
           {"|q|_p <= p^-3", observed("|q|_p", q), norm_at_most(q, 3)},
           {"|rho-1|_p <= p^-3", observed("|rho-1|_p", t), norm_at_most(t, 3)},
           {"rho != 1", observed("|rho-1|_p", t), !t.is_zero()}}};
}

RegimeCheck ep_unit_q(const ModelParams& params) {
  const Prime& prime = params.prime;
  const PadicNumber& rho = params.rho;
  const long qi = params.q;
  const PadicNumber q = params.q_value();
  const PadicNumber q1 = PadicNumber::from_integer(qi - 1, prime);
  const PadicNumber q2 = PadicNumber::from_integer(2 * qi - 1, prime);
  const PadicNumber q4 = PadicNumber::from_integer(4 * qi - 3, prime);
  const PadicNumber t = rho - PadicNumber::one(prime);
  return {Regime::EpUnitQ,
          {{"rho in E_p", "rho = " + padic::format_literal(rho), padic::is_in_Ep(rho)},
           {"|q|_p = 1", observed("|q|_p", q), is_unit(q)},
           {"|q-1|_p = 1", observed("|q-1|_p", q1), is_unit(q1)},
           {"|2q-1|_p = 1", observed("|2q-1|_p", q2), is_unit(q2)},
           {"|rho-1|_p <= p^-3", observed("|rho-1|_p", t), norm_at_most(t, 3)},
           {"rho != 1", observed("|rho-1|_p", t), !t.is_zero()},
           {"|rho-1|_p < |4q-3|_p", observed("|rho-1|_p", t) + ", " + observed("|4q-3|_p", q4), norm_less(t, q4)}}};
}

RegimeCheck uniqueness(const ModelParams& params) {
  const PadicNumber q = params.q_value();
  return {Regime::Uniqueness,
          {{"rho in E_p", "rho = " + padic::format_literal(params.rho), padic::is_in_Ep(params.rho)},
           {"|q|_p = 1", observed("|q|_p", q), is_unit(q)}}};
}

RegimeCheck small_rho_small_q(const ModelParams& params, RegimeVerdict& scratch) {
  const Prime& prime = params.prime;
  const i64 p = prime.value();
  const PadicNumber q = params.q_value();
  RegimeCheck c{Regime::SmallRhoSmallQ,
                {{"|rho|_p <= p^-2", observed("|rho|_p", params.rho), norm_at_most(params.rho, 2)},
                 {"|q|_p <= p^-2", observed("|q|_p", q), norm_at_most(q, 2)}}};
  if (p != 11 && p != 19) {
    const i64 a0 = residue_of(mpq_class(-4, 3), p);
    const i64 b0 = residue_of(mpq_class(-38, 27), p);
    const SequenceData s = sequence_data(a0, b0, prime);
    add_sequence_details(scratch, a0, b0, s);
    c.guards.push_back({"D0 u_{p-2}^2 mod p not in {0, 9 a0^2}",
                        "D0 u^2 = " + std::to_string(s.lhs) + ", 9 a0^2 = " + std::to_string(s.rhs),
                        s.lhs != 0 && s.lhs != s.rhs});
  }
  return c;
}

RegimeCheck small_rho_near_one_q(const ModelParams& params) {
  const PadicNumber q1 = PadicNumber::from_integer(params.q - 1, params.prime);
  const bool near = !q1.is_zero() && q1.valuation() >= 1;
  const bool small = near && params.rho.valuation() > 2 * q1.valuation();
  return {Regime::SmallRhoNearOneQ,
          {{"|q-1|_p < 1", observed("|q-1|_p", q1), near},
           {"|rho|_p < |q-1|_p^2", observed("|rho|_p", params.rho) + ", " + observed("|q-1|_p", q1), small}}};
}

void decide_ep_unit_q(const ModelParams& params, RegimeVerdict& v) {
  const Prime& prime = params.prime;
  const i64 p = prime.value();
  const long qi = params.q;
  const i64 a0 = padic::modp::reduce(3 * (qi - 1), p);
  const i64 b0 = padic::modp::reduce(2 * padic::modp::mul(qi - 1, 2 * qi - 1, p), p);
  const SequenceData s = sequence_data(a0, b0, prime);
  add_sequence_details(v, a0, b0, s);
  v.details.emplace_back("u3_with_minus_b0", -b0);

  const mpz_class four_q = 4 * mpz_class(qi) - 3;
  const int e = padic::valuation_of(four_q, p);
  v.details.emplace_back("four_q_minus_3_ord", e);
  v.predicted_ep_measures = 1;
  if (e == 0) {
    if (s.u == 0) {
      v.subcase = "unit_discriminant_sequence_vanishes";
      v.predicted_measures = 4;
    } else if (s.lhs == s.rhs) {
      v.subcase = "unit_discriminant_no_root";
      v.predicted_measures = 1;
    } else {
      v.subcase = "unit_discriminant_single_root";
      v.predicted_measures = 2;
    }
    return;
  }
  if (e % 2 == 1) {
    v.subcase = "odd_order_discriminant";
    v.predicted_measures = 2;
    return;
  }
  // Leading digit of D = -108 q (q-1)^2 (4q-3) + O(|rho-1|_p).
  const mpz_class lead = -108 * mpz_class(qi) * mpz_class(qi - 1) * mpz_class(qi - 1) * four_q / prime.power(e);
  mpz_class r = lead % p;
  if (r < 0) r += p;
  const i64 residue = r.get_si();
  const bool square = padic::modp::is_square(residue, p);
  v.details.emplace_back("rescaled_discriminant_mod_p", residue);
  v.details.emplace_back("rescaled_discriminant_is_square", square ? 1 : 0);
  v.subcase = square ? "even_order_residue" : "even_order_nonresidue";
  v.predicted_measures = square ? 4 : 2;
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::EpSmallQ: return "E_p_small_q";
    case Regime::EpUnitQ: return "E_p_unit_q";
    case Regime::Uniqueness: return "uniqueness";
    case Regime::SmallRhoSmallQ: return "small_rho_small_q";
    case Regime::SmallRhoNearOneQ: return "small_rho_near1_q";
    case Regime::Uncovered: return "uncovered";
  }
  return "uncovered";
}

std::string to_string(Transition t) {
  switch (t) {
    case Transition::None: return "none";
    case Transition::Phase: return "phase";
    case Transition::Quasi: return "quasi";
    case Transition::Strong: return "strong";
  }
  return "none";
}

bool RegimeCheck::matched() const {
  for (const auto& g : guards) {
    if (!g.pass) return false;
  }
  return true;
}

std::optional<std::int64_t> RegimeVerdict::detail(const std::string& key) const {
  for (const auto& [k, value] : details) {
    if (k == key) return value;
  }
  return std::nullopt;
}

RegimeVerdict regime_classify(const ModelParams& params) {
  RegimeVerdict v;
  const i64 p = params.prime.value();

  v.checks.push_back(ep_small_q(params));
  if (v.checks.back().matched()) {
    v.regime = Regime::EpSmallQ;
    v.subcase = "three_roots_near_one";
    v.predicted_measures = 4;
    v.predicted_ep_measures = 4;
    return v;
  }
  v.checks.push_back(ep_unit_q(params));
  if (v.checks.back().matched()) {
    v.regime = Regime::EpUnitQ;
    decide_ep_unit_q(params, v);
    return v;
  }
  v.checks.push_back(uniqueness(params));
  if (v.checks.back().matched()) {
    v.regime = Regime::Uniqueness;
    v.subcase = "single_ep_root";
    v.predicted_ep_measures = 1;
    return v;
  }
  RegimeVerdict scratch;
  v.checks.push_back(small_rho_small_q(params, scratch));
  if (v.checks.back().matched()) {
    v.regime = Regime::SmallRhoSmallQ;
    v.details = scratch.details;
    v.subcase = p == 11 ? "discriminant_order_one" : p == 19 ? "beta_order_one" : "unit_discriminant_single_root";
    v.predicted_measures = 2;
    return v;
  }
  v.checks.push_back(small_rho_near_one_q(params));
  if (v.checks.back().matched()) {
    v.regime = Regime::SmallRhoNearOneQ;
    const bool root = padic::modp::is_square(padic::modp::reduce(-3, p), p);
    v.details.emplace_back("minus_three_is_square", root ? 1 : 0);
    v.subcase = root ? "sqrt_minus_three_exists" : "sqrt_minus_three_absent";
    v.predicted_measures = root ? 4 : 2;
    return v;
  }
  v.details = scratch.details;
  return v;
}

PredictionCheck check_prediction(const RegimeVerdict& verdict, const MeasureCatalog& catalog) {
  PredictionCheck c;
  if (verdict.predicted_measures && static_cast<std::size_t>(*verdict.predicted_measures) != catalog.size()) {
    c.agrees = false;
    c.message = to_string(verdict.regime) + "/" + verdict.subcase + " predicts " +
                std::to_string(*verdict.predicted_measures) + " measures, found " + std::to_string(catalog.size());
    return c;
  }
  if (verdict.predicted_ep_measures) {
    int ep = 0;
    for (const auto& m : catalog.measures) ep += m.in_Ep ? 1 : 0;
    if (ep != *verdict.predicted_ep_measures) {
      c.agrees = false;
      c.message = to_string(verdict.regime) + " predicts " + std::to_string(*verdict.predicted_ep_measures) +
                  " E_p-valued measures, found " + std::to_string(ep);
    }
  }
  return c;
}

TransitionVerdict transition_classify(const ModelParams& params, const MeasureCatalog& catalog,
                                      const WitnessProbe& probe) {
  TransitionVerdict t;
  for (const auto& m : catalog.measures) (m.boundedness.bounded ? t.bounded : t.unbounded) += 1;
  if (catalog.size() < 2) return t;
  if (t.unbounded == 0) {
    t.kind = Transition::Quasi;
    return t;
  }
  t.kind = Transition::Phase;
  if (t.bounded > 0 && probe) {
    t.witness_checked = true;
    t.witness_passed = probe(params, catalog);
    if (t.witness_passed) t.kind = Transition::Strong;
  }
  return t;
}

}  // namespace potts
