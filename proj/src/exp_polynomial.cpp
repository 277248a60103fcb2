#include "dynlab/exp_polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace dynlab {

namespace {

bool frequency_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void add_into(std::vector<Complex>& dst, const std::vector<Complex>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), Complex{0});
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
}

}  // namespace

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ExpPolynomial::ExpPolynomial(std::vector<ExpTerm> terms) {
  std::vector<ExpTerm> merged;
  for (auto& t : terms) {
    auto hit = std::find_if(merged.begin(), merged.end(), [&](const ExpTerm& m) {
      return std::abs(m.frequency - t.frequency) <= kMergeTol;
    });
    if (hit == merged.end()) {
      merged.push_back(std::move(t));
    } else {
      add_into(hit->coefficients, t.coefficients);
    }
  }
  for (auto& t : merged) {
    while (!t.coefficients.empty() && t.coefficients.back() == Complex{0}) t.coefficients.pop_back();
  }
  std::erase_if(merged, [](const ExpTerm& t) { return t.coefficients.empty(); });
  std::sort(merged.begin(), merged.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return frequency_less(a.frequency, b.frequency); });
  terms_ = std::move(merged);
}

ExpPolynomial ExpPolynomial::exponential(Complex alpha, Complex scale) {
  return ExpPolynomial({ExpTerm{alpha, {scale}}});
}

ExpPolynomial ExpPolynomial::polynomial(std::vector<Complex> coefficients) {
  return ExpPolynomial({ExpTerm{Complex{0}, std::move(coefficients)}});
}

std::vector<Complex> ExpPolynomial::frequencies() const {
  std::vector<Complex> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.frequency);
  return out;
}

int ExpPolynomial::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.coefficients.size()) - 1);
  return d;
}

Complex ExpPolynomial::operator()(Complex z) const {
  Complex acc{0};
  for (const auto& t : terms_) acc += horner(t.coefficients, z) * std::exp(t.frequency * z);
  return acc;
}

ExpPolynomial ExpPolynomial::conjugate() const {
  std::vector<ExpTerm> out;
  for (const auto& t : terms_) {
    ExpTerm c{std::conj(t.frequency), {}};
    for (const auto& a : t.coefficients) c.coefficients.push_back(std::conj(a));
    out.push_back(std::move(c));
  }
  return ExpPolynomial(std::move(out));
}

ExpPolynomial ExpPolynomial::operator+(const ExpPolynomial& other) const {
  std::vector<ExpTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return ExpPolynomial(std::move(all));
}

ExpPolynomial ExpPolynomial::operator-(const ExpPolynomial& other) const {
  return *this + other * Complex{-1};
}

ExpPolynomial ExpPolynomial::operator*(Complex s) const {
  std::vector<ExpTerm> out = terms_;
  for (auto& t : out)
    for (auto& c : t.coefficients) c *= s;
  return ExpPolynomial(std::move(out));
}

ExpPolynomial ExpPolynomial::operator*(const ExpPolynomial& other) const {
  std::vector<ExpTerm> out;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      ExpTerm t{a.frequency + b.frequency,
                std::vector<Complex>(a.coefficients.size() + b.coefficients.size() - 1, Complex{0})};
      for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients.size(); ++j)
          t.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
      out.push_back(std::move(t));
    }
  }
  return ExpPolynomial(std::move(out));
}

}  // namespace dynlab
