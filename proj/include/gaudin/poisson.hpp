#pragma once

// Linear Poisson structures on gl(r)*^N given by block operators.
//
// Block (i,j) = Σ_k c_ijk ad(X_k) induces
//   {x^{(i)}_ab, x^{(j)}_cd} = Σ_k c_ijk (δ_bc x^{(k)}_ad − δ_da x^{(k)}_cb),
// i.e. {F,G} = Σ_{i,j,k} c_ijk Tr(∇F_i [X_k, ∇G_j]) with (∇F_i)_ba = ∂F/∂x^{(i)}_ab.
// The standard bracket has c_ijk = δ_ij δ_jk.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gaudin/lax.hpp"
#include "gaudin/report.hpp"

namespace gaudin {

class PoissonOperator {
 public:
  explicit PoissonOperator(int sites, std::string name = "operator");

  int sites() const { return n_; }
  const std::string& name() const { return name_; }
  const Rational& coefficient(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set(int i, int j, int k, const Rational& v) { c_[index(i, j, k)] = v; }
  /// Adds v·ad(X_k) to block (i,j) and, when i ≠ j, to block (j,i).
  void add_symmetric(int i, int j, int k, const Rational& v);

  /// Coefficients of block (i,j) over X_1..X_N.
  std::vector<Rational> block(int i, int j) const;
  /// "ad(2 X_3 - X_2 - X_1)" or "0".
  std::string block_string(int i, int j) const;
  /// c_ijk = c_jik for all i, j, k: the induced bracket is antisymmetric.
  bool symmetric() const;

  bool operator==(const PoissonOperator& o) const { return n_ == o.n_ && c_ == o.c_; }

 private:
  std::size_t index(int i, int j, int k) const;

  int n_;
  std::string name_;
  std::vector<Rational> c_;
};

/// θ(n) = 1 for n > 0, 0 otherwise.
int theta(int n);
/// r_ijk = (k−1)δ_ij δ_jk − θ(i−k)δ_ij + θ(j−i)δ_ik + θ(i−j)δ_jk.
Rational r_ijk(int i, int j, int k);

PoissonOperator standard_operator(int sites);
PoissonOperator limit_operator(int sites);
/// The tabulated five-site operator, with z_ij = z_i − z_j. Rejects coincident z.
PoissonOperator fivesite_operator(const std::vector<Rational>& z);
/// Copy with block (i,i) negated.
PoissonOperator corrupted(const PoissonOperator& op, int i);

struct BracketSpec {
  enum class Kind { Standard, LimitRijk, Operator, Pencil };

  Kind kind = Kind::Standard;
  std::shared_ptr<const PoissonOperator> op;
  Rational lambda, mu;
  std::shared_ptr<const BracketSpec> first, second;

  static BracketSpec standard();
  static BracketSpec limit();
  static BracketSpec from_operator(PoissonOperator op);
  static BracketSpec pencil(const Rational& lambda, const BracketSpec& first, const Rational& mu,
                            const BracketSpec& second);

  std::string name() const;
};

/// Coefficient table of `spec` on N sites.
PoissonOperator operator_of(const BracketSpec& spec, int sites);

/// {F,G} under `spec`. Classical mode only.
NCPoly bracket_eval(const BracketSpec& spec, const NCPoly& F, const NCPoly& G);

/// Jacobi cyclic sum on random triples of coordinates and of degree-≤2 polynomials.
Report jacobi_check(const BracketSpec& spec, const AlgebraPtr& alg, int trials, std::uint64_t seed);

/// jacobi_check on first + second and first − second.
Report compatibility_check(const BracketSpec& first, const BracketSpec& second, const AlgebraPtr& alg, int trials,
                           std::uint64_t seed);

/// All pairwise brackets of the family under `spec`.
Report family_commutes_under(const BracketSpec& spec, const InvariantFamily& family);

/// {F,G} = −{G,F} on random pairs.
Report antisymmetry_check(const BracketSpec& spec, const AlgebraPtr& alg, int trials, std::uint64_t seed);

/// {F,GH} = {F,G}H + G{F,H} on random triples.
Report leibniz_check(const BracketSpec& spec, const AlgebraPtr& alg, int trials, std::uint64_t seed);

/// Block-by-block comparison of two operators; witnesses name differing blocks.
Report operator_comparison(const PoissonOperator& actual, const PoissonOperator& expected, const std::string& spec = "");

}  // namespace gaudin
