#pragma once

// Lax matrices of Gaudin type and their spectral invariants.
//
// Entry convention: L(z)_{ab} = Σ_i e_ab^{(i)}/(z − z_i), i.e. the site block
// X_i has (a,b) entry e_ab^{(i)}. With this convention ∂_z − L(z) is a Manin
// matrix in the quantum case; classical traces do not depend on it.

#include <optional>
#include <string>
#include <vector>

#include "gaudin/diffop.hpp"
#include "gaudin/matrix.hpp"

namespace gaudin {

struct Pole {
  Rational point;
  int order = 1;
  bool operator==(const Pole&) const = default;
};

/// Σ_{i∈sites} X_i placed at a simple pole.
struct PoleBlock {
  std::vector<int> sites;
  Rational point;
};

class LaxMatrix {
 public:
  LaxMatrix(std::string id, AlgebraPtr alg, SquareMatrix<LaxEntry> entries, std::vector<Pole> poles, bool polynomial);

  const std::string& id() const { return id_; }
  const AlgebraPtr& algebra() const { return alg_; }
  int size() const { return entries_.size(); }
  const LaxEntry& operator()(int a, int b) const { return entries_(a, b); }
  const SquareMatrix<LaxEntry>& entries() const { return entries_; }
  const std::vector<Pole>& poles() const { return poles_; }
  bool polynomial() const { return polynomial_; }

  /// Structural equality of the entries (ids and pole bookkeeping are metadata).
  bool same_entries(const LaxMatrix& o) const { return entries_ == o.entries_; }

  std::string to_string() const;

 private:
  std::string id_;
  AlgebraPtr alg_;
  SquareMatrix<LaxEntry> entries_;
  std::vector<Pole> poles_;
  bool polynomial_;
};

/// X_S = Σ_{i∈S} X_i as an r×r matrix of z-independent entries.
SquareMatrix<LaxEntry> site_block(const AlgebraPtr& alg, const std::vector<int>& sites);

/// Σ_blocks X_{S}/(z − p). Rejects repeated points and sites outside 1..N.
LaxMatrix rational_lax(std::string id, const AlgebraPtr& alg, const std::vector<PoleBlock>& blocks);

/// L_G(z) = Σ_i X_i/(z − z_i); needs N pairwise distinct poles.
LaxMatrix gaudin_lax(const AlgebraPtr& alg, const std::vector<Rational>& poles);

/// L_k(z) = z X_k + Σ_{i>k} X_i, 1 ≤ k ≤ N−1.
LaxMatrix bending_lax(const AlgebraPtr& alg, int k);

/// L_k(z) = X_{k+1}/(z − z2) + (Σ_{i≤k} X_i)/(z − z1), 1 ≤ k ≤ N−1, z1 ≠ z2.
LaxMatrix bending_lax_rational(const AlgebraPtr& alg, int k, const Rational& z1, const Rational& z2);

struct Provenance {
  std::string matrix;
  int power = 0;
  /// Empty for polynomial matrices; `order` is then the z-power.
  std::optional<Rational> pole;
  int order = 0;

  std::string to_string() const;
  bool operator==(const Provenance&) const = default;
};

struct Invariant {
  NCPoly value;
  Provenance provenance;
};

struct InvariantFamily {
  std::vector<Invariant> members;

  std::vector<NCPoly> values() const;
  void append(const InvariantFamily& other);
  std::size_t size() const { return members.size(); }
};

/// Tr L^m for m = 1..max_power.
std::vector<LaxEntry> trace_powers(const LaxMatrix& L, int max_power);

/// Residues Res_{z=p} (z − p)^k Tr L^m over every declared pole and every k below the
/// pole order of Tr L^m; for polynomial matrices the z^a coefficients. Zero members are
/// dropped. Classical mode only.
InvariantFamily spectral_invariants(const LaxMatrix& L, int max_power);

/// H_i = Σ_{k≠i} Tr(X_i X_k)/(z_i − z_k); valid in both modes.
std::vector<NCPoly> quadratic_hamiltonians(const AlgebraPtr& alg, const std::vector<Rational>& poles);

/// H_G = Σ_{i≠j} Tr(X_i X_j); needs N ≥ 2.
NCPoly physical_hamiltonian(const AlgebraPtr& alg);

/// Rejects repeated entries (used for pole lists).
void require_distinct(const std::vector<Rational>& points, const std::string& what);

}  // namespace gaudin
