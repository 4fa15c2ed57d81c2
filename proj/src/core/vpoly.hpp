#pragma once

#include <string>
#include <vector>

namespace w2b {

/// Polynomial in v with integer coefficients, stored ascending with no
/// trailing zeros.
class VPoly {
public:
  VPoly() = default;
  explicit VPoly(long long constant);
  explicit VPoly(std::vector<long long> coeffs);
  static VPoly v(int k = 1);

  const std::vector<long long>& coeffs() const { return c_; }
  long long coeff(int k) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  VPoly operator+(const VPoly&) const;
  VPoly operator-(const VPoly&) const;
  VPoly operator*(const VPoly&) const;
  VPoly operator-() const;
  bool operator==(const VPoly&) const = default;

  long long eval(long long x) const;
  long long derivative_at_one() const;
  /// v -> -v.
  VPoly negate_variable() const;
  /// v^w * p(1/v); requires degree <= w.
  VPoly reciprocal_shift(int w) const;

  /// "0", "1", "v", "v^2", "1+v", "2v^2", ...
  std::string str() const;

private:
  void trim();
  std::vector<long long> c_;
};

}  // namespace w2b
