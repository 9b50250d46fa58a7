#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potts/catalog.hpp"
#include "potts/model.hpp"

// Which existence rule covers (p, q, rho), the measure count it predicts,
// and the resulting transition type.
namespace potts {

enum class Regime {
  EpSmallQ,        // rho in E_p, |q|_p <= p^-3, |rho-1|_p <= p^-3
  EpUnitQ,         // rho in E_p, |q|_p = |q-1|_p = |2q-1|_p = 1, |rho-1|_p < |4q-3|_p
  Uniqueness,      // rho in E_p, |q|_p = 1: a single E_p-valued field
  SmallRhoSmallQ,  // |rho|_p, |q|_p <= p^-2
  SmallRhoNearOneQ,  // |rho|_p < |q-1|_p^2 < 1
  Uncovered,
};

std::string to_string(Regime r);

struct Guard {
  std::string condition;
  std::string observed;
  bool pass = false;
};

struct RegimeCheck {
  Regime regime = Regime::Uncovered;
  std::vector<Guard> guards;
  bool matched() const;
};

struct RegimeVerdict {
  Regime regime = Regime::Uncovered;
  /// Which branch of the rule applies, e.g. "even_order_residue".
  std::string subcase;
  /// Total number of translation-invariant measures the rule predicts,
  /// including the trivial one; unset for uncovered and for the uniqueness
  /// rule, which predicts only the E_p-valued count.
  std::optional<int> predicted_measures;
  std::optional<int> predicted_ep_measures;
  /// Every regime tried, in order, with all guard values.
  std::vector<RegimeCheck> checks;
  /// Residue data of the decision (a0, b0, D0, sequence values, ...).
  std::vector<std::pair<std::string, std::int64_t>> details;

  bool covered() const { return regime != Regime::Uncovered; }
  std::optional<std::int64_t> detail(const std::string& key) const;
};

/// Evaluates the regimes in the order E_p small q, E_p unit q, uniqueness,
/// small rho small q, small rho with q near 1.  Guards are exact norm
/// comparisons; the first regime whose guards all pass is the verdict.
RegimeVerdict regime_classify(const ModelParams& params);

struct PredictionCheck {
  bool agrees = true;
  /// Empty when the prediction agrees or there is none.
  std::string message;
};

/// Compares the verdict's predicted counts with the roots actually found.
/// The rules are the published ones; they are not adjusted to fit.
PredictionCheck check_prediction(const RegimeVerdict& verdict, const MeasureCatalog& catalog);

enum class Transition { None, Phase, Quasi, Strong };

std::string to_string(Transition t);

/// Decides whether witness configurations separate a bounded measure from an
/// unbounded one (norms -> 0 and -> infinity on a common sequence).
using WitnessProbe = std::function<bool(const ModelParams&, const MeasureCatalog&)>;

struct TransitionVerdict {
  Transition kind = Transition::None;
  int bounded = 0;
  int unbounded = 0;
  bool witness_checked = false;
  bool witness_passed = false;
};

/// none with a single measure; quasi when every measure is bounded; phase
/// when some measure is unbounded, upgraded to strong when `probe` finds a
/// common configuration sequence on which a bounded measure's norm vanishes
/// and an unbounded one's diverges.
TransitionVerdict transition_classify(const ModelParams& params, const MeasureCatalog& catalog,
                                      const WitnessProbe& probe = {});

}  // namespace potts
