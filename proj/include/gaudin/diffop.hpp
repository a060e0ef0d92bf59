#pragma once

// Algebra elements with z-dependent coefficients (LaxEntry) and polynomials
// in ∂_z over them (DiffOpEntry). z is central for the site generators;
// ∂_z acts only on the rational-function parts.

#include <map>
#include <vector>

#include "gaudin/ncalgebra.hpp"
#include "gaudin/ratfun.hpp"

namespace gaudin {

/// Σ_m f_m(z) · m with m a normal-form monomial and f_m a rational function.
class LaxEntry {
 public:
  using TermMap = std::map<Monomial, RatFun, MonomialOrder>;

  LaxEntry() = default;
  explicit LaxEntry(AlgebraPtr alg) : alg_(std::move(alg)) {}
  LaxEntry(const NCPoly& p, const RatFun& f = RatFun(1));

  static LaxEntry constant(AlgebraPtr alg, const RatFun& f);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaxEntry zero_like() const { return LaxEntry(alg_); }
  LaxEntry one_like() const { return constant(alg_, RatFun(1)); }

  LaxEntry operator-() const;
  LaxEntry& operator+=(const LaxEntry& o);
  LaxEntry& operator-=(const LaxEntry& o);
  friend LaxEntry operator+(LaxEntry a, const LaxEntry& b) { return a += b; }
  friend LaxEntry operator-(LaxEntry a, const LaxEntry& b) { return a -= b; }
  friend LaxEntry operator*(const LaxEntry& a, const LaxEntry& b);
  friend LaxEntry operator*(const RatFun& f, const LaxEntry& a);
  friend LaxEntry operator*(const Rational& c, const LaxEntry& a) { return RatFun(c) * a; }
  bool operator==(const LaxEntry& o) const { return terms_ == o.terms_; }

  /// d/dz applied to every coefficient.
  LaxEntry derivative() const;
  /// Substitutes z = point; throws PoleError naming the offending pole.
  NCPoly eval_z(const Rational& point) const;
  /// Res_{z=p} (z − p)^order of every coefficient.
  NCPoly residue(const Rational& p, int order) const;
  /// Coefficient of (z − p)^n of every coefficient.
  NCPoly laurent_coefficient(const Rational& p, int n) const;
  /// Largest pole order at p over all coefficients.
  int pole_order(const Rational& p) const;
  /// Highest z-degree when every coefficient is a polynomial; -1 for zero.
  int polynomial_degree() const;
  bool is_polynomial() const;
  /// Algebra-degree-d part.
  LaxEntry homogeneous_part(int d) const;

  std::string to_string() const;

 private:
  void add(const Monomial& m, const RatFun& f);
  AlgebraPtr alg_;
  TermMap terms_;
};

/// Σ_k A_k(z) ∂_z^k with coefficients written to the left of ∂.
class DiffOpEntry {
 public:
  DiffOpEntry() = default;
  explicit DiffOpEntry(AlgebraPtr alg) : alg_(std::move(alg)) {}
  DiffOpEntry(const LaxEntry& e);  // NOLINT(google-explicit-constructor)

  /// ∂_z^k
  static DiffOpEntry d(AlgebraPtr alg, int k = 1);
  static DiffOpEntry constant(AlgebraPtr alg, const RatFun& f) { return DiffOpEntry(LaxEntry::constant(std::move(alg), f)); }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<int, LaxEntry>& coefficients() const { return coeffs_; }
  LaxEntry coefficient(int k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// ∂-degree; -1 for zero.
  int order() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  DiffOpEntry zero_like() const { return DiffOpEntry(alg_); }
  DiffOpEntry one_like() const { return constant(alg_, RatFun(1)); }

  DiffOpEntry operator-() const;
  DiffOpEntry& operator+=(const DiffOpEntry& o);
  DiffOpEntry& operator-=(const DiffOpEntry& o);
  friend DiffOpEntry operator+(DiffOpEntry a, const DiffOpEntry& b) { return a += b; }
  friend DiffOpEntry operator-(DiffOpEntry a, const DiffOpEntry& b) { return a -= b; }
  /// Uses ∂^i B = Σ_l C(i,l) B^{(l)} ∂^{i−l}.
  friend DiffOpEntry operator*(const DiffOpEntry& a, const DiffOpEntry& b);
  friend DiffOpEntry operator*(const Rational& c, const DiffOpEntry& a);
  bool operator==(const DiffOpEntry& o) const { return coeffs_ == o.coeffs_; }

  /// ∂-coefficients evaluated at z = point, index k holds the ∂^k coefficient.
  std::vector<NCPoly> eval_z(const Rational& point) const;

  std::string to_string() const;

 private:
  void add(int k, const LaxEntry& e);
  AlgebraPtr alg_;
  std::map<int, LaxEntry> coeffs_;
};

LaxEntry lax_commutator(const LaxEntry& a, const LaxEntry& b);
DiffOpEntry diffop_commutator(const DiffOpEntry& a, const DiffOpEntry& b);
inline DiffOpEntry diffop_multiply(const DiffOpEntry& a, const DiffOpEntry& b) { return a * b; }

}  // namespace gaudin
