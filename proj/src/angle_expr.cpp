#include "dynlab/angle_expr.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dynlab/error.hpp"

namespace dynlab {

namespace {

constexpr std::int64_t kMaxRadicand = 1'000'000'000'000;

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational reduce(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) num = -num, den = -den;
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) num /= a, den /= a;
  return {narrow(num), narrow(den)};
}

// n = k^2 * s with s squarefree.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t outside = 1, inside = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      outside *= p;
    }
    if (n % p == 0) {
      n /= p;
      inside *= p;
    }
  }
  return {outside, inside * n};
}

void add_term(SymbolicForm& f, const Monomial& m, const Rational& c) {
  auto [it, fresh] = f.emplace(m, c);
  if (!fresh) it->second = it->second + c;
  if (it->second.is_zero()) f.erase(it);
}

SymbolicForm multiply(const SymbolicForm& a, const SymbolicForm& b) {
  SymbolicForm out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const __int128 product = static_cast<__int128>(ma.radicand) * mb.radicand;
      if (product > kMaxRadicand) throw std::overflow_error("radicand too large");
      const auto [k, s] = split_square(static_cast<std::int64_t>(product));
      add_term(out, Monomial{ma.pi_power + mb.pi_power, s}, ca * cb * Rational{k, 1});
    }
  return out;
}

SymbolicForm negate(SymbolicForm f) {
  for (auto& [m, c] : f) c = -c;
  return f;
}

SymbolicForm constant(const Rational& r) {
  SymbolicForm f;
  if (!r.is_zero()) f[Monomial{}] = r;
  return f;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  SymbolicForm run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty angle expression");
    SymbolicForm f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SymbolicForm expr() {
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    SymbolicForm acc = term();
    if (negative) acc = negate(std::move(acc));
    while (true) {
      const std::size_t at = pos_;
      if (eat('+')) {
        merge(acc, term(), at);
      } else if (eat('-')) {
        merge(acc, negate(term()), at);
      } else {
        return acc;
      }
    }
  }

  void merge(SymbolicForm& acc, const SymbolicForm& rhs, std::size_t at) {
    try {
      for (const auto& [m, c] : rhs) add_term(acc, m, c);
    } catch (const std::exception& e) {
      throw ParseError(at, e.what());
    }
  }

  SymbolicForm term() {
    SymbolicForm acc = factor();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (!eat('*')) return acc;
      const SymbolicForm rhs = factor();
      try {
        acc = multiply(acc, rhs);
      } catch (const std::exception& e) {
        throw ParseError(at, e.what());
      }
    }
  }

  std::int64_t integer(std::string& digits) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(start, "expected digits");
    digits = s_.substr(start, pos_ - start);
    if (digits.size() > 18) throw ParseError(start, "integer too long");
    return std::stoll(digits);
  }

  SymbolicForm factor() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      SymbolicForm f;
      f[Monomial{1, 1}] = Rational{1, 1};
      return f;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) throw ParseError(pos_, "expected '(' after sqrt");
      std::string digits;
      const std::size_t arg_at = pos_;
      const std::int64_t n = integer(digits);
      if (n > kMaxRadicand) throw ParseError(arg_at, "radicand too large");
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      if (n == 0) return {};
      const auto [k, r] = split_square(n);
      SymbolicForm f;
      f[Monomial{0, r}] = Rational{k, 1};
      return f;
    }
    if (!std::isdigit(static_cast<unsigned char>(s_[pos_]))) throw ParseError(start, "expected a number, pi or sqrt");
    std::string digits;
    const std::int64_t whole = integer(digits);
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::string frac;
      const std::size_t frac_at = pos_;
      integer(frac);
      if (digits.size() + frac.size() > 18) throw ParseError(frac_at, "decimal has too many digits");
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      return constant(reduce(static_cast<__int128>(whole) * scale + std::stoll(frac), scale));
    }
    const std::size_t slash = pos_;
    if (eat('/')) {
      std::string den_digits;
      const std::int64_t den = integer(den_digits);
      if (den == 0) throw ParseError(slash, "zero denominator");
      return constant(reduce(whole, den));
    }
    return constant(Rational{whole, 1});
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string rational_text(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) { return reduce(num, den); }

Rational Rational::operator+(const Rational& o) const {
  return reduce(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return reduce(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}

AngleExpr AngleExpr::parse(const std::string& text) {
  AngleExpr out;
  out.source_ = text;
  out.form_ = Parser(text).run();

  Real value = 0;
  for (const auto& [m, c] : out.form_)
    value += c.value() * std::pow(kPi, static_cast<Real>(m.pi_power)) * std::sqrt(static_cast<Real>(m.radicand));
  out.value_ = value;

  if (out.form_.empty()) {
    out.tag_ = AngleTag::PiRational;
  } else if (out.form_.size() == 1) {
    const Monomial& m = out.form_.begin()->first;
    if (m.pi_power == 1 && m.radicand == 1)
      out.tag_ = AngleTag::PiRational;
    else if (m.pi_power == 0 && m.radicand == 1)
      out.tag_ = AngleTag::Decimal;
    else if (m.pi_power == 0)
      out.tag_ = AngleTag::Sqrt;
  }
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> AngleExpr::pi_rational() const {
  if (tag_ != AngleTag::PiRational) return std::nullopt;
  if (form_.empty()) return std::pair<std::int64_t, std::int64_t>{0, 1};
  const Rational& c = form_.begin()->second;
  return std::pair{c.num, c.den};
}

std::string AngleExpr::canonical() const {
  if (form_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : form_) {
    const bool negative = c.num < 0;
    const Rational mag{negative ? -c.num : c.num, c.den};
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    if (m.pi_power == 1) factors = "pi";
    if (m.pi_power > 1) factors = "pi^" + std::to_string(m.pi_power);
    if (m.radicand != 1) factors += (factors.empty() ? "" : "*") + std::string("sqrt(") + std::to_string(m.radicand) + ")";
    if (factors.empty())
      out += rational_text(mag);
    else if (mag == Rational{1, 1})
      out += factors;
    else
      out += rational_text(mag) + "*" + factors;
  }
  return out;
}

std::string angle_tag_name(AngleTag tag) {
  switch (tag) {
    case AngleTag::PiRational:
      return "pi_rational";
    case AngleTag::Decimal:
      return "decimal";
    case AngleTag::Sqrt:
      return "sqrt";
    case AngleTag::Expression:
      return "expression";
  }
  return "expression";
}

}  // namespace dynlab
