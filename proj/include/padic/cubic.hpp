#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic/padic_number.hpp"

// Root counting and extraction for depressed cubics x^3 + a x = b over F_p
// and over the p-adic units Z_p^*.
namespace padic {

struct PowerResidue {
  bool is_residue = false;
  int solution_count = 0;
};

/// Whether x^q = a has a solution in F_p, and how many.  DomainError for a == 0.
PowerResidue qth_power_residue(std::int64_t a, int q, const Prime& prime);

/// Polynomial over Z_p, lowest degree first.
using ZpPolynomial = std::vector<PadicNumber>;

/// Unique root x0 of `poly` with x0 == seed mod p^(contact_order + 1).
///
/// Requires f(seed) == 0 mod p^(2i+1) and ord_p f'(seed) == i for i =
/// contact_order; otherwise HypothesisError.  The root is refined until it is
/// known modulo p^target_precision, or as far as the coefficients allow.
PadicNumber hensel_lift(const ZpPolynomial& poly, const PadicNumber& seed, int contact_order,
                        int target_precision);

/// Sign of the third term of the root-counting sequence: u_3 = +b or u_3 = -b.
enum class UThreeSign { Positive, Negative };

/// The convention under which the sequence criterion agrees with exhaustive
/// F_p root counting; see calibrate_u3_sign.
inline constexpr UThreeSign kCalibratedSign = UThreeSign::Positive;

/// u_1 = 0, u_2 = -a0, u_3 = +-b0, u_{n+3} = b0 u_n - a0 u_{n+1} (mod p).
/// Element k of the result is u_k for 1 <= k <= max(upto, 3); element 0 is unused.
std::vector<std::int64_t> u_sequence(std::int64_t a0, std::int64_t b0, const Prime& prime, int upto,
                                     UThreeSign sign = kCalibratedSign);

struct SignCalibration {
  UThreeSign sign = kCalibratedSign;
  long pairs_checked = 0;
  long mismatches_positive = 0;
  long mismatches_negative = 0;
};

/// Runs the sequence criterion under both sign conventions against an
/// exhaustive root scan for every (a, b) in (F_p^*)^2 and every listed prime,
/// and picks the convention with no mismatches.  InvariantViolation if neither
/// convention is clean.
SignCalibration calibrate_u3_sign(std::span<const std::int64_t> primes);

struct FpRoot {
  std::int64_t value = 0;
  int multiplicity = 1;
  /// 3x^2 + a != 0 mod p
  bool simple = true;
};

struct FpCubicReport {
  std::int64_t a_bar = 0;
  std::int64_t b_bar = 0;
  /// -4a^3 - 27b^2 mod p
  std::int64_t discriminant = 0;
  std::int64_t u_p_minus_2 = 0;
  /// Count with multiplicity, from the sequence criterion; equals the scan.
  int count = 0;
  std::vector<FpRoot> roots;
};

/// Sequence-criterion count of x^3 + a x = b in F_p, checked against an
/// exhaustive scan (InvariantViolation on disagreement).  DomainError if ab == 0.
FpCubicReport count_roots_fp_cubic(std::int64_t a_bar, std::int64_t b_bar, const Prime& prime);

/// Which necessary norm condition a unit root would satisfy.
enum class NormClass {
  CubeResidue,       // |a| < |b| = 1
  SquareResidue,     // |b| < |a| = 1
  UnitCoefficients,  // |a| = |b| = 1
  PoleCoefficients,  // |a| = |b| > 1
  None,
};

std::string to_string(NormClass c);

struct CubicProblem {
  PadicNumber a;
  PadicNumber b;

  /// DomainError when a or b is exactly zero or the primes differ.
  CubicProblem(PadicNumber a_coeff, PadicNumber b_coeff);
  const Prime& prime() const { return a.prime(); }
};

struct Solvability {
  bool solvable = false;
  NormClass norm_class = NormClass::None;
};

Solvability zp_star_solvable(const CubicProblem& problem);

struct ZpStarRootReport {
  NormClass norm_class = NormClass::None;
  bool solvable = false;
  int count = 0;
  /// Which row of the counting table decided `count`.
  std::string rule;
  /// Leading digits of the unit parts of a and b.
  std::int64_t a0 = 0;
  std::int64_t b0 = 0;
  /// -4 a0^3 - 27 b0^2 as an integer, and the sequence value at p - 2.
  std::int64_t d0_integer = 0;
  std::int64_t u_p_minus_2 = 0;
  /// -4 a*^3 - 27 b*^2 with a*, b* the unit parts; set for unit and pole classes.
  std::optional<PadicNumber> discriminant;
  /// Leading digit of the discriminant when 0 < |D|_p < 1.
  std::optional<int> discriminant_digit;
  std::optional<int> oracle_count;
};

/// Number of roots in Z_p^*, counted with multiplicity.
ZpStarRootReport zp_star_root_count(const CubicProblem& problem);

/// Every root in Z_p^*, to `target_precision` digits where the coefficients
/// allow.  A double root appears twice.  The list length always equals
/// zp_star_root_count(problem).count (InvariantViolation otherwise).
std::vector<PadicNumber> zp_star_roots(const CubicProblem& problem, int target_precision);

/// Exhaustive oracle: residue classes of units mod p^depth solving the
/// denominator-cleared cubic that still lift `extra` digits further.
/// ResourceError when the enumeration outgrows word-size residues.
int brute_force_root_count(const CubicProblem& problem, int depth, int extra = 2);

}  // namespace padic
