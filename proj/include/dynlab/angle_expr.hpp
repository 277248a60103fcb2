#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dynlab/types.hpp"

namespace dynlab {

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return {-num, den}; }
  bool is_zero() const { return num == 0; }
  Real value() const { return static_cast<Real>(num) / static_cast<Real>(den); }
  bool operator==(const Rational&) const = default;
};

/// pi^pi_power * sqrt(radicand), radicand squarefree.
struct Monomial {
  int pi_power = 0;
  std::int64_t radicand = 1;
  auto operator<=>(const Monomial&) const = default;
};

/// Exact sum of rational multiples of monomials.
using SymbolicForm = std::map<Monomial, Rational>;

enum class AngleTag { PiRational, Decimal, Sqrt, Expression };

/// Parsed angle. Grammar (whitespace ignored, optional leading sign):
///   expr := term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := INT ['/' INT] | DECIMAL | 'pi' | 'sqrt(' INT ')'
class AngleExpr {
 public:
  static AngleExpr parse(const std::string& text);

  const std::string& source() const noexcept { return source_; }
  const SymbolicForm& form() const noexcept { return form_; }
  AngleTag tag() const noexcept { return tag_; }
  Real value() const noexcept { return value_; }
  /// Value reduced into [0, 2 pi).
  Real reduced() const { return reduce_angle(value_); }
  /// (p, q) with value = (p/q) pi, when the form is exactly a rational multiple of pi.
  std::optional<std::pair<std::int64_t, std::int64_t>> pi_rational() const;
  /// Normalized printing of the exact form, e.g. "3/7*pi" or "1 + sqrt(2)".
  std::string canonical() const;

 private:
  std::string source_;
  SymbolicForm form_;
  AngleTag tag_ = AngleTag::Expression;
  Real value_ = 0;
};

std::string angle_tag_name(AngleTag tag);

}  // namespace dynlab
