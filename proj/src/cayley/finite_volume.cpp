#include "cayley/finite_volume.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <string>

#include "padic/errors.hpp"

namespace cayley {

namespace {

using padic::Agreement;

// Accumulates exactly where possible; a sum that cancels below the tracked
// precision cannot be trusted as a partition value.
PadicNumber accumulate(const PadicNumber& acc, const PadicNumber& term, const char* what) {
  auto s = PadicNumber::try_add(acc, term);
  if (!s) throw padic::PrecisionError(std::string(what) + " cancels below the tracked precision");
  return *s;
}

void require_nonzero_partition(const PadicNumber& z) {
  if (z.is_zero()) throw padic::PrecisionError("Z_n is indistinguishable from 0");
}

void require_field_matches(const ModelParams& params, const BoundaryField& field) {
  if (static_cast<long>(field.q()) != params.q) {
    throw padic::DomainError("boundary field has " + std::to_string(field.q()) + " components, q = " +
                             std::to_string(params.q));
  }
}

// Weight of one class: rho^H prod_i h_i^{c_i}.
PadicNumber class_weight(const ModelParams& params, const BoundaryField& field, std::int64_t hamiltonian,
                         const std::vector<int>& counts) {
  PadicNumber w = params.rho.pow(static_cast<long>(hamiltonian));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) w *= field.h[i].pow(counts[i]);
  }
  return w;
}

// Histogram of (H, boundary spin counts) over every configuration on V_n.
class Histogram {
 public:
  Histogram(long q, const TreeSlice& slice)
      : q_(static_cast<int>(q)), slice_(slice), config_(static_cast<std::size_t>(slice.vertex_count()), 0), counts_(static_cast<std::size_t>(q), 0) {}

  std::map<std::vector<std::int64_t>, std::int64_t> run() {
    visit(0, 0);
    return std::move(classes_);
  }

 private:
  void visit(std::int64_t v, std::int64_t h) {
    if (v == slice_.vertex_count()) {
      std::vector<std::int64_t> key{h};
      key.insert(key.end(), counts_.begin(), counts_.end());
      ++classes_[key];
      return;
    }
    const bool leaf = v >= TreeSlice::level_begin(slice_.depth());
    const std::int64_t parent = slice_.parent(v);
    for (int s = 0; s < q_; ++s) {
      config_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(s);
      const std::int64_t dh = parent >= 0 && config_[static_cast<std::size_t>(parent)] == s ? 1 : 0;
      if (leaf) ++counts_[static_cast<std::size_t>(s)];
      visit(v + 1, h + dh);
      if (leaf) --counts_[static_cast<std::size_t>(s)];
    }
  }

  int q_;
  const TreeSlice& slice_;
  Configuration config_;
  std::vector<std::int64_t> counts_;
  std::map<std::vector<std::int64_t>, std::int64_t> classes_;
};

std::vector<int> counts_of(const std::vector<std::int64_t>& key) {
  std::vector<int> c;
  for (std::size_t i = 1; i < key.size(); ++i) c.push_back(static_cast<int>(key[i]));
  return c;
}

// Relative agreement of x with a nonzero reference y, in digits beyond ord(y).
int relative_agreement(const PadicNumber& x, const PadicNumber& y) {
  const Agreement ag = padic::agreement(x, y);
  if (ag.exact) return INT_MAX;
  return ag.digits - y.valuation();
}

}  // namespace

BoundaryField::BoundaryField(std::vector<PadicNumber> components) : h(std::move(components)) {
  if (h.size() < 3) throw padic::DomainError("boundary field needs q >= 3 components");
  const PadicNumber one = PadicNumber::one(h[0].prime());
  if (!h[0].is_exact() || !padic::agreement(h[0], one).exact) {
    throw padic::DomainError("boundary field must be normalized with h_0 = 1");
  }
  for (const auto& c : h) {
    if (c.is_zero()) throw padic::DomainError("boundary field components must be nonzero");
  }
}

BoundaryField BoundaryField::invariant_line(const PadicNumber& x, long q) {
  if (q < 3) throw padic::DomainError("q must be at least 3");
  std::vector<PadicNumber> h(static_cast<std::size_t>(q), PadicNumber::one(x.prime()));
  h[1] = x;
  return BoundaryField(std::move(h));
}

std::int64_t enumeration_size(long q, const TreeSlice& slice) {
  std::int64_t n = 1;
  for (std::int64_t i = 0; i < slice.vertex_count(); ++i) {
    if (n > kEnumerationBudget / q) {
      throw padic::ResourceError("exhaustive enumeration needs " + std::to_string(q) + "^" +
                                 std::to_string(slice.vertex_count()) + " configurations; the budget is " +
                                 std::to_string(kEnumerationBudget));
    }
    n *= q;
  }
  return n;
}

MeasureTable enumerate_measure(const ModelParams& params, const BoundaryField& field, const TreeSlice& slice) {
  require_field_matches(params, field);
  MeasureTable table{{}, PadicNumber::zero(params.prime), enumeration_size(params.q, slice)};
  for (const auto& [key, count] : Histogram(params.q, slice).run()) {
    WeightClass c{key[0], counts_of(key), count, PadicNumber::zero(params.prime)};
    c.weight = class_weight(params, field, c.hamiltonian, c.leaf_counts);
    table.partition = accumulate(table.partition, c.weight * PadicNumber::from_integer(static_cast<long>(count), params.prime),
                                 "Z_n");
    table.classes.push_back(std::move(c));
  }
  require_nonzero_partition(table.partition);
  return table;
}

PadicNumber finite_measure(const ModelParams& params, const BoundaryField& field, const TreeSlice& slice,
                           const Configuration& config, const PadicNumber& partition) {
  require_field_matches(params, field);
  require_nonzero_partition(partition);
  const std::int64_t h = hamiltonian(config, slice);
  std::vector<int> counts(field.q(), 0);
  const std::int64_t begin = TreeSlice::level_begin(slice.depth());
  for (std::int64_t v = begin; v < slice.vertex_count(); ++v) {
    const std::uint8_t s = config[static_cast<std::size_t>(v)];
    if (s >= field.q()) throw padic::DomainError("spin out of range");
    ++counts[s];
  }
  return class_weight(params, field, h, counts) / partition;
}

std::int64_t closed_form_log_norm(const PadicNumber& x, const ModelParams& params, int n, std::int64_t hamiltonian,
                                  std::int64_t ones) {
  const PadicNumber root_factor = potts::checked_sum(x, PadicNumber::from_integer(params.q - 1, params.prime), "x + q - 1");
  const PadicNumber d = potts::g_denominator(x, params);
  return -ones * x.valuation() - hamiltonian * params.rho.valuation() + root_factor.valuation() +
         3 * TreeSlice::ball_size(n - 1) * d.valuation();
}

NormCheckReport check_closed_form_norms(const ModelParams& params, const PadicNumber& x, const TreeSlice& slice) {
  const BoundaryField field = BoundaryField::invariant_line(x, params.q);
  const MeasureTable table = enumerate_measure(params, field, slice);
  NormCheckReport report;
  report.configurations = table.configurations;
  report.classes = static_cast<std::int64_t>(table.classes.size());
  PadicNumber total = PadicNumber::zero(params.prime);
  for (const auto& c : table.classes) {
    const PadicNumber mu = c.weight / table.partition;
    const std::int64_t enumerated = mu.norm().exponent();
    const std::int64_t closed = closed_form_log_norm(x, params, slice.depth(), c.hamiltonian, c.leaf_counts[1]);
    if (enumerated != closed) {
      report.mismatched_configurations += c.configurations;
      if (report.first_mismatch.empty()) {
        report.first_mismatch = "H = " + std::to_string(c.hamiltonian) + ": enumerated p^" + std::to_string(enumerated) +
                                ", closed form p^" + std::to_string(closed);
      }
    }
    total = accumulate(total, mu * PadicNumber::from_integer(static_cast<long>(c.configurations), params.prime),
                       "sum of mu_n");
  }
  report.normalized = padic::agreement(total, PadicNumber::one(params.prime)).indistinguishable();
  return report;
}

CompatibilityReport check_compatibility(const ModelParams& params, const BoundaryField& field, int n,
                                        int required_digits) {
  if (n < 1) throw padic::DomainError("compatibility needs n >= 1");
  require_field_matches(params, field);
  const TreeSlice fine(n);
  const TreeSlice coarse(n - 1);
  enumeration_size(params.q, fine);
  const PadicNumber z_fine = enumerate_measure(params, field, fine).partition;
  const PadicNumber z_coarse = enumerate_measure(params, field, coarse).partition;

  CompatibilityReport report;
  report.required_digits = required_digits;
  report.worst_agreement = INT_MAX;
  const int q = static_cast<int>(params.q);
  const std::int64_t boundary_begin = TreeSlice::level_begin(n - 1);
  const std::int64_t boundary_end = coarse.vertex_count();
  const std::int64_t extension = TreeSlice::level_size(n);

  // Odometer over configurations on V_{n-1}.
  Configuration base(static_cast<std::size_t>(coarse.vertex_count()), 0);
  Configuration full(static_cast<std::size_t>(fine.vertex_count()), 0);
  std::vector<int> omega(static_cast<std::size_t>(extension), 0);
  for (;;) {
    const std::int64_t h_base = hamiltonian(base, coarse);
    std::vector<int> coarse_counts(static_cast<std::size_t>(q), 0);
    for (std::int64_t v = boundary_begin; v < boundary_end; ++v) ++coarse_counts[base[static_cast<std::size_t>(v)]];
    const PadicNumber mu_coarse = class_weight(params, field, h_base, coarse_counts) / z_coarse;

    // Histogram the extensions by (added H, boundary counts), then sum.
    std::map<std::vector<std::int64_t>, std::int64_t> ext;
    std::fill(omega.begin(), omega.end(), 0);
    for (;;) {
      std::vector<std::int64_t> key(static_cast<std::size_t>(q) + 1, 0);
      for (std::int64_t j = 0; j < extension; ++j) {
        const std::int64_t parent = boundary_begin + j / TreeSlice::kOrder;
        key[0] += base[static_cast<std::size_t>(parent)] == omega[static_cast<std::size_t>(j)] ? 1 : 0;
        ++key[static_cast<std::size_t>(omega[static_cast<std::size_t>(j)]) + 1];
      }
      ++ext[key];
      ++report.terms;
      std::size_t k = 0;
      while (k < omega.size() && ++omega[k] == q) omega[k++] = 0;
      if (k == omega.size()) break;
    }
    PadicNumber sum = PadicNumber::zero(params.prime);
    for (const auto& [key, count] : ext) {
      const PadicNumber w = class_weight(params, field, h_base + key[0], counts_of(key));
      sum = accumulate(sum, w * PadicNumber::from_integer(static_cast<long>(count), params.prime), "compatibility sum");
    }
    sum /= z_fine;
    report.worst_agreement = std::min(report.worst_agreement, relative_agreement(sum, mu_coarse));
    ++report.base_configurations;

    std::size_t k = 0;
    while (k < base.size() && ++base[k] == q) base[k++] = 0;
    if (k == base.size()) break;
  }
  report.pass = report.worst_agreement >= required_digits;
  return report;
}

RecursionReport check_partition_recursion(const ModelParams& params, const BoundaryField& field, int n) {
  if (n < 1) throw padic::DomainError("partition recursion needs n >= 1");
  require_field_matches(params, field);
  const padic::Prime& prime = params.prime;

  PadicNumber total = PadicNumber::zero(prime);
  for (const auto& h : field.h) total = accumulate(total, h, "sum of h_i");
  std::vector<PadicNumber> a_i;
  for (std::size_t i = 0; i < field.q(); ++i) {
    const PadicNumber s = accumulate(total, field.h[i] * (params.rho - PadicNumber::one(prime)), "sum_j rho^delta h_j");
    a_i.push_back(s.pow(3) / field.h[i]);
  }
  for (std::size_t i = 1; i < a_i.size(); ++i) {
    if (!padic::agreement(a_i[i], a_i[0]).indistinguishable()) {
      throw padic::HypothesisError("boundary field does not make (sum_j rho^delta_ij h_j)^3 / h_i independent of i");
    }
  }

  RecursionReport r{a_i[0], enumerate_measure(params, field, TreeSlice(n)).partition,
                    enumerate_measure(params, field, TreeSlice(n - 1)).partition};
  const PadicNumber stepped = r.a.pow(static_cast<long>(TreeSlice::level_size(n - 1))) * r.previous_partition;
  r.recursion_holds = padic::agreement(r.partition, stepped).indistinguishable();
  const PadicNumber a_power = r.a.pow(static_cast<long>(TreeSlice::ball_size(n - 1)));
  r.closed_form_holds = padic::agreement(r.partition, total * a_power).indistinguishable();
  r.closed_form_without_root_holds = padic::agreement(r.partition, a_power).indistinguishable();
  r.norm_identity_holds = r.partition.valuation() == total.valuation() + a_power.valuation();
  return r;
}

}  // namespace cayley
