#include "cayley/witness.hpp"

#include <algorithm>
#include <functional>

#include "padic/errors.hpp"

namespace cayley {

namespace {

constexpr int kMaxWitnessLevel = 18;

void require_levels(int n_max) {
  if (n_max < 1 || n_max > kMaxWitnessLevel) {
    throw padic::DomainError("witness levels must be in [1, " + std::to_string(kMaxWitnessLevel) + "]");
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

}  // namespace

Configuration alternating_configuration(int n) {
  const TreeSlice slice(2 * n);
  Configuration c(static_cast<std::size_t>(slice.vertex_count()));
  for (int m = 0; m <= 2 * n; ++m) {
    const auto begin = static_cast<std::size_t>(TreeSlice::level_begin(m));
    std::fill_n(c.begin() + static_cast<std::ptrdiff_t>(begin), TreeSlice::level_size(m), m % 2 == 0 ? 1 : 0);
  }
  return c;
}

Configuration tilde_configuration(int n) {
  if (n < 1) throw padic::DomainError("sigma~_n needs n >= 1");
  const TreeSlice slice(n);
  Configuration c(static_cast<std::size_t>(slice.vertex_count()), 0);
  std::fill_n(c.begin(), TreeSlice::ball_size(n - 1), 1);
  return c;
}

Configuration prefix_configuration(int n, std::int64_t hamiltonian) {
  if (n < 1) throw padic::DomainError("prefix configurations need n >= 1");
  if (hamiltonian < 0 || hamiltonian + 1 > TreeSlice::ball_size(n - 1)) {
    throw padic::DomainError("prefix configuration needs 0 <= H < |V_{n-1}|");
  }
  const TreeSlice slice(n);
  Configuration c(static_cast<std::size_t>(slice.vertex_count()), 0);
  for (std::int64_t v = 0; v < slice.vertex_count(); ++v) {
    if (v <= hamiltonian) {
      c[static_cast<std::size_t>(v)] = 1;
    } else {
      c[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(slice.parent(v))] == 0 ? 2 : 0;
    }
  }
  return c;
}

bool NormSeries::strictly_increasing() const {
  return std::adjacent_find(log_norms.begin(), log_norms.end(), std::greater_equal<>()) == log_norms.end();
}

bool NormSeries::strictly_decreasing() const {
  return std::adjacent_find(log_norms.begin(), log_norms.end(), std::less_equal<>()) == log_norms.end();
}

NormSeries norm_series(const potts::MeasureEntry& measure, const potts::ModelParams& params,
                       const std::vector<SequencePoint>& sequence) {
  NormSeries s{measure.label, {}};
  for (const auto& pt : sequence) {
    s.log_norms.push_back(closed_form_log_norm(measure.x, params, pt.n, pt.hamiltonian, pt.ones));
  }
  return s;
}

WitnessReport witness_trajectories(const potts::ModelParams& params, const MeasureCatalog& catalog, int n_max) {
  require_levels(n_max);
  const int m = padic::PadicNumber::from_integer(params.q - 1, params.prime).valuation();
  if (m < 1 || params.rho.valuation() <= 2 * m) {
    throw padic::DomainError("witness trajectories need |rho|_p < |q-1|_p^2 < 1");
  }
  const potts::MeasureEntry* mu2 = nullptr;
  for (std::size_t i = 1; i < catalog.size() && !mu2; ++i) {
    if (catalog.measures[i].x.valuation() == 0) mu2 = &catalog.measures[i];
  }
  if (!mu2) throw padic::DomainError("witness trajectories need a catalogued root of norm 1");
  const potts::MeasureEntry& mu0 = catalog.measures.front();

  std::vector<SequencePoint> alternating;
  std::vector<SequencePoint> tilde;
  for (int n = 1; n <= n_max; ++n) {
    alternating.push_back({2 * n, 0, TreeSlice::level_size(2 * n)});
    tilde.push_back({n, TreeSlice::ball_size(n - 1) - 1, 0});
  }

  WitnessReport r;
  r.n_max = n_max;
  r.mu0_alternating = norm_series(mu0, params, alternating);
  r.mu2_tilde = norm_series(*mu2, params, tilde);
  const NormSeries mu0_tilde = norm_series(mu0, params, tilde);
  r.product_tilde.label = mu0.label + "*" + mu2->label;
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    r.product_tilde.log_norms.push_back(mu0_tilde.log_norms[i] + r.mu2_tilde.log_norms[i]);
  }
  r.product_bounded = std::all_of(r.product_tilde.log_norms.begin(), r.product_tilde.log_norms.end(),
                                  [](std::int64_t e) { return e <= 0; });
  r.common = find_common_witness(params, catalog, n_max);
  return r;
}

std::optional<CommonWitness> find_common_witness(const potts::ModelParams& params, const MeasureCatalog& catalog,
                                                 int n_max) {
  require_levels(n_max);
  const std::int64_t vr = params.rho.valuation();
  if (vr <= 0) return std::nullopt;
  for (const auto& u : catalog.measures) {
    if (u.boundedness.bounded) continue;
    const std::int64_t vd = potts::g_denominator(u.x, params).valuation();
    std::vector<SequencePoint> seq;
    for (int n = 1; n <= n_max; ++n) {
      const std::int64_t ball = TreeSlice::ball_size(n - 1);
      const std::int64_t h = std::clamp<std::int64_t>(floor_div(3 * ball * vd - 1, 2 * vr), 0, ball - 1);
      seq.push_back({n, h, 0});
    }
    for (const auto& b : catalog.measures) {
      if (!b.boundedness.bounded) continue;
      CommonWitness w{seq, norm_series(u, params, seq), norm_series(b, params, seq)};
      if (w.holds()) return w;
    }
  }
  return std::nullopt;
}

}  // namespace cayley
