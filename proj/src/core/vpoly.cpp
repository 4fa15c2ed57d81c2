#include "vpoly.hpp"

#include "error.hpp"

namespace w2b {

VPoly::VPoly(long long constant) {
  if (constant != 0) c_.push_back(constant);
}

VPoly::VPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

VPoly VPoly::v(int k) {
  require(k >= 0, errc::invalid_argument, "monomial degree must be >= 0");
  std::vector<long long> c(k + 1, 0);
  c[k] = 1;
  return VPoly(std::move(c));
}

long long VPoly::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
}

void VPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

VPoly VPoly::operator+(const VPoly& o) const {
  std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return VPoly(std::move(c));
}

VPoly VPoly::operator-(const VPoly& o) const { return *this + (-o); }

VPoly VPoly::operator-() const {
  std::vector<long long> c = c_;
  for (auto& x : c) x = -x;
  return VPoly(std::move(c));
}

VPoly VPoly::operator*(const VPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return VPoly(std::move(c));
}

long long VPoly::eval(long long x) const {
  long long r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

long long VPoly::derivative_at_one() const {
  long long r = 0;
  for (size_t i = 1; i < c_.size(); ++i) r += static_cast<long long>(i) * c_[i];
  return r;
}

VPoly VPoly::negate_variable() const {
  std::vector<long long> c = c_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return VPoly(std::move(c));
}

VPoly VPoly::reciprocal_shift(int w) const {
  require(degree() <= w, errc::invalid_argument, "reciprocal_shift needs degree <= w");
  std::vector<long long> c(w + 1, 0);
  for (int k = 0; k <= degree(); ++k) c[w - k] = coeff(k);
  return VPoly(std::move(c));
}

std::string VPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    long long a = c_[k];
    if (a == 0) continue;
    if (!s.empty()) s += a > 0 ? "+" : "-";
    else if (a < 0) s += "-";
    long long m = a < 0 ? -a : a;
    if (m != 1 || k == 0) s += std::to_string(m);
    if (k >= 1) s += "v";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace w2b
