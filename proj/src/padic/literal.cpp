#include "padic/literal.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "padic/errors.hpp"

namespace padic {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_start) fail("expected an integer");
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return mpz_class(token, 10);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad p-adic literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int small_int(Cursor& c, const mpz_class& value) {
  if (!value.fits_sint_p()) c.fail("exponent out of range");
  return static_cast<int>(value.get_si());
}

}  // namespace

PadicNumber parse_literal(std::string_view text, const Prime& prime, const PrecisionContext& ctx) {
  const std::string base_digits = std::to_string(prime.value());
  Cursor c(text);
  if (c.done()) c.fail("empty literal");

  // Pure rational form.
  {
    Cursor probe(text);
    bool rational = true;
    try {
      probe.integer();
      if (probe.accept("/")) probe.integer();
      rational = probe.done();
    } catch (const ParseError&) {
      rational = false;
    }
    if (rational) {
      mpz_class num = c.integer();
      mpz_class den = 1;
      if (c.accept("/")) den = c.integer();
      if (den == 0) throw DomainError("zero denominator in literal");
      return PadicNumber::from_rational(num, den, prime, ctx);
    }
  }

  auto base = [&](Cursor& cur) {
    if (cur.accept("p")) return true;
    return cur.accept(base_digits);
  };

  int shift = 0;
  if (!c.accept("(")) {
    if (!base(c)) c.fail("expected 'p^v *' or '('");
    c.expect("^");
    shift = small_int(c, c.integer());
    c.expect("*");
    c.expect("(");
  }

  std::map<int, mpz_class> terms;
  bool truncated = false;
  bool first = true;
  while (true) {
    if (!first && c.accept(")")) break;
    if (!first) c.expect("+");
    first = false;
    if (c.accept("...")) {
      truncated = true;
      c.expect(")");
      break;
    }
    mpz_class digit = c.integer();
    int power = 0;
    if (c.accept("*")) {
      if (!base(c)) c.fail("expected the prime after '*'");
      power = 1;
      if (c.accept("^")) power = small_int(c, c.integer());
    }
    if (power < 0) c.fail("negative digit position");
    if (digit < 0 || digit >= prime.value()) c.fail("digit out of range [0, p)");
    if (terms.count(power)) c.fail("digit position repeated");
    terms[power] = digit;
  }
  if (!c.done()) c.fail("trailing characters");
  if (terms.empty()) c.fail("no digits");

  mpz_class value = 0;
  int top = 0;
  for (const auto& [power, digit] : terms) {
    value += digit * prime.power(power);
    top = std::max(top, power);
  }
  if (!truncated) {
    return PadicNumber::from_rational(mpq_class(value), prime, ctx).shifted(shift);
  }
  return PadicNumber::from_residue(prime, value, top + 1).shifted(shift);
}

std::string format_literal(const PadicNumber& x) {
  if (x.is_zero()) return "0";
  if (x.is_exact()) {
    const mpq_class& q = *x.exact_value();
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  const std::string p = std::to_string(x.prime().value());
  std::string out = p + "^" + std::to_string(x.valuation()) + " * (";
  const auto digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += " + ";
    out += std::to_string(digits[i]);
    if (i == 1) out += "*" + p;
    if (i > 1) out += "*" + p + "^" + std::to_string(i);
  }
  out += " + ...)";
  return out;
}

}  // namespace padic
