#pragma once

#include <initializer_list>
#include <vector>

#include "dynlab/types.hpp"

namespace dynlab {

/// One summand p(z) e^{frequency z}; coefficients[k] multiplies z^k.
struct ExpTerm {
  Complex frequency;
  std::vector<Complex> coefficients;

  bool operator==(const ExpTerm&) const = default;
};

/// Exponential polynomial sum_j p_j(z) e^{alpha_j z}.
///
/// Construction normalizes: frequencies within kMergeTol are merged by adding
/// coefficients, trailing zero coefficients are trimmed, empty terms dropped,
/// and terms are ordered by (Re, Im) of the frequency.
class ExpPolynomial {
 public:
  ExpPolynomial() = default;
  explicit ExpPolynomial(std::vector<ExpTerm> terms);

  /// e_alpha : z -> e^{alpha z}, optionally scaled.
  static ExpPolynomial exponential(Complex alpha, Complex scale = 1);
  /// Plain polynomial (frequency 0).
  static ExpPolynomial polynomial(std::vector<Complex> coefficients);
  static ExpPolynomial constant(Complex c) { return polynomial({c}); }

  const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<Complex> frequencies() const;
  int max_degree() const;

  Complex operator()(Complex z) const;

  /// h*(z) = conj(h(conj z)): conjugated frequencies and coefficients.
  ExpPolynomial conjugate() const;

  ExpPolynomial operator+(const ExpPolynomial& other) const;
  ExpPolynomial operator-(const ExpPolynomial& other) const;
  ExpPolynomial operator*(const ExpPolynomial& other) const;
  ExpPolynomial operator*(Complex s) const;

  bool operator==(const ExpPolynomial&) const = default;

 private:
  std::vector<ExpTerm> terms_;
};

inline ExpPolynomial operator*(Complex s, const ExpPolynomial& f) { return f * s; }

/// Horner evaluation of sum_k c[k] z^k.
Complex horner(const std::vector<Complex>& c, Complex z);

}  // namespace dynlab
