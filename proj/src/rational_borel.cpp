#include "dynlab/rational_borel.hpp"

#include <algorithm>

namespace dynlab {

namespace {

Complex ipow(Complex base, std::size_t e) {
  Complex r{1};
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Real factorial(std::size_t n) {
  Real f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<Real>(k);
  return f;
}

}  // namespace

BorelPole::BorelPole(Complex location, std::vector<Complex> principal) : location_(location) {
  scaled_.reserve(principal.size());
  for (std::size_t i = 0; i < principal.size(); ++i) scaled_.push_back(principal[i] / factorial(i));
}

BorelPole BorelPole::from_scaled(Complex location, std::vector<Complex> scaled) {
  BorelPole p;
  p.location_ = location;
  p.scaled_ = std::move(scaled);
  return p;
}

std::vector<Complex> BorelPole::principal() const {
  std::vector<Complex> c;
  c.reserve(scaled_.size());
  for (std::size_t i = 0; i < scaled_.size(); ++i) c.push_back(scaled_[i] * factorial(i));
  return c;
}

Complex BorelPole::operator()(Complex z) const {
  const Complex w = Complex{1} / (z - location_);
  Complex acc{0};
  Complex pw = w;
  for (std::size_t i = 0; i < scaled_.size(); ++i) {
    acc += scaled_[i] * factorial(i) * pw;
    pw *= w;
  }
  return acc;
}

RationalBorel::RationalBorel(std::vector<BorelPole> poles) {
  std::vector<BorelPole> merged;
  for (auto& p : poles) {
    auto hit = std::find_if(merged.begin(), merged.end(), [&](const BorelPole& m) {
      return std::abs(m.location_ - p.location_) <= kMergeTol;
    });
    if (hit == merged.end()) {
      merged.push_back(std::move(p));
      continue;
    }
    if (hit->scaled_.size() < p.scaled_.size()) hit->scaled_.resize(p.scaled_.size(), Complex{0});
    for (std::size_t i = 0; i < p.scaled_.size(); ++i) hit->scaled_[i] += p.scaled_[i];
  }
  for (auto& p : merged)
    while (!p.scaled_.empty() && p.scaled_.back() == Complex{0}) p.scaled_.pop_back();
  std::erase_if(merged, [](const BorelPole& p) { return p.scaled_.empty(); });
  std::sort(merged.begin(), merged.end(), [](const BorelPole& a, const BorelPole& b) {
    if (a.location_.real() != b.location_.real()) return a.location_.real() < b.location_.real();
    return a.location_.imag() < b.location_.imag();
  });
  poles_ = std::move(merged);
}

std::vector<Complex> RationalBorel::pole_locations() const {
  std::vector<Complex> out;
  for (const auto& p : poles_) out.push_back(p.location());
  return out;
}

bool RationalBorel::all_simple() const {
  return std::all_of(poles_.begin(), poles_.end(), [](const BorelPole& p) { return p.order() == 1; });
}

Complex RationalBorel::operator()(Complex z) const {
  Complex acc{0};
  for (const auto& p : poles_) acc += p(z);
  return acc;
}

std::vector<Complex> RationalBorel::laurent_at_infinity(std::size_t count) const {
  // (nu-1)!/(z-a)^nu = sum_{n>=nu-1} n!/(n-nu+1)! a^{n-nu+1} z^{-(n+1)}, so with
  // scaled d_nu the coefficient of z^{-(n+1)} is sum_nu d_nu n!/(n-nu+1)! a^{n-nu+1}.
  std::vector<Complex> a(count, Complex{0});
  for (const auto& p : poles_) {
    for (std::size_t n = 0; n < count; ++n) {
      for (std::size_t i = 0; i < p.scaled_.size() && i <= n; ++i) {
        // falling factorial n (n-1) ... (n-i+1)
        Real ff = 1;
        for (std::size_t k = 0; k < i; ++k) ff *= static_cast<Real>(n - k);
        a[n] += p.scaled_[i] * ff * ipow(p.location_, n - i);
      }
    }
  }
  return a;
}

RationalBorel RationalBorel::operator+(const RationalBorel& other) const {
  std::vector<BorelPole> all = poles_;
  all.insert(all.end(), other.poles_.begin(), other.poles_.end());
  return RationalBorel(std::move(all));
}

}  // namespace dynlab
