#pragma once

// Univariate polynomials and rational functions of the spectral parameter z
// over the rationals.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaudin/rational.hpp"

namespace gaudin {

/// Raised when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  PoleError(const Rational& pole, const std::string& what) : std::domain_error(what), pole_(pole) {}
  const Rational& pole() const { return pole_; }

 private:
  Rational pole_;
};

/// Dense polynomial in z, coefficients stored from degree 0 upward, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly z() { return UPoly(std::vector<Rational>{0, 1}); }
  /// z − p
  static UPoly linear_factor(const Rational& p) { return UPoly(std::vector<Rational>{-p, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& c, const UPoly& a);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  /// Coefficients of p(x0 + t) as a polynomial in t.
  UPoly shifted(const Rational& x0) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);

/// num(z)/den(z) in lowest terms with monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFun(UPoly num, UPoly den);

  static RatFun z() { return RatFun(UPoly::z(), UPoly(Rational(1))); }
  /// 1/(z − p)^order
  static RatFun pole(const Rational& p, int order = 1);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  RatFun operator-() const { return RatFun(-num_, den_, Canonical{}); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFun derivative() const;
  /// Throws PoleError naming the point when it is a pole.
  Rational evaluate(const Rational& x) const;
  /// Multiplicity of (z − p) in the denominator.
  int pole_order(const Rational& p) const;
  /// Coefficient of (z − p)^n in the Laurent expansion at p.
  Rational laurent_coefficient(const Rational& p, int n) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RatFun(UPoly num, UPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  UPoly num_;
  UPoly den_;
};

/// Res_{z=p} (z − p)^order f(z): the coefficient of (z − p)^{−1} in (z − p)^order f.
/// Negative orders are allowed (res_{z=0} z^{−(a+1)} f picks the z^a coefficient).
Rational residue(const RatFun& f, const Rational& p, int order);

}  // namespace gaudin
