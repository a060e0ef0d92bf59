#pragma once

// Limit Lax families obtained by letting groups of poles collide, and the
// quantum counterparts built from Talalaev generators of the factor algebras.
//
// Every collision node with children c_1..c_m contributes the m-point Lax matrix
// Σ_j X_{c_j}/(z − p_j), where X_{c} is the sum of the site blocks below c.
// Positions p_j: leaves keep their own pole, nested nodes use their @location (or
// the smallest non-negative integer not used elsewhere). A node with exactly two
// children is placed at the first two configured poles instead; a two-point family
// does not depend on where its poles sit, and this makes the left comb reproduce
// bending_lax_rational(k, z_1, z_2) entry for entry.

#include <cstdint>
#include <string>
#include <vector>

#include "gaudin/lax.hpp"
#include "gaudin/manin.hpp"
#include "gaudin/pattern.hpp"
#include "gaudin/report.hpp"

namespace gaudin {

struct CollisionNode {
  /// Pattern text of the node.
  std::string label;
  /// Sites summed into each child's block.
  std::vector<std::vector<int>> child_sites;
  std::vector<Rational> positions;
};

struct LimitFamily {
  std::vector<LaxMatrix> matrices;
  /// Parallel to `matrices`.
  std::vector<CollisionNode> nodes;

  /// Spectral invariants (powers 1..r) of every matrix. Classical mode.
  InvariantFamily invariants() const;
};

/// Collision nodes in post-order. `poles` lists z_1..z_N.
std::vector<CollisionNode> collision_nodes(const GluingPattern& pattern, const std::vector<Rational>& poles);

/// The matrix of one node over `alg`.
LaxMatrix node_lax(const AlgebraPtr& alg, const CollisionNode& node);

/// L_1 = Σ_{i>k} X_i/(z − u_i), L_2 = Σ_{i≤k} X_i/(z − z_i) + (Σ_{i>k} X_i)/(z − w),
/// with k = fixed.size() and N − k = collapsing.size().
LimitFamily elementary_glue(const AlgebraPtr& alg, const std::vector<Rational>& fixed,
                            const std::vector<Rational>& collapsing, const Rational& w);

/// One matrix per collision node, inner nodes first.
LimitFamily iterate_pattern(const AlgebraPtr& alg, const GluingPattern& pattern, const std::vector<Rational>& poles);

/// Members as labelled polynomials (label = provenance).
std::vector<NamedPoly> named(const InvariantFamily& family);

/// Jacobian ranks of `family` and `generic` at `trials` random integer points.
Report rank_completeness_check(const InvariantFamily& family, const InvariantFamily& generic, int trials,
                               std::uint64_t seed);

/// H_G as a combination of degree-≤2 members, products of two degree-1 members and 1.
Report hg_membership_check(const InvariantFamily& family);

/// Homomorphism sending e_ab^{(j)} to Σ_{i∈blocks[j−1]} e_ab^{(i)}; blocks must be disjoint
/// subsets of the target sites, one per source site.
NCPoly spread_map(const NCPoly& p, const AlgebraPtr& target, const std::vector<std::vector<int>>& blocks);

/// D_{k,N}: the last source site (k+1) is spread over k+1..N.
NCPoly quantum_D_map(const NCPoly& p, const AlgebraPtr& target);
/// I_{k,N}: e_ab^{(j)} ↦ e_ab^{(j+k)} with k = N − source sites.
NCPoly quantum_I_map(const NCPoly& p, const AlgebraPtr& target);

/// Partial-fraction coefficients Res_{z=p}(z − p)^j QH_i(z), i < r, over every pole:
/// a finite generating set of the Gaudin subalgebra at `poles`.
std::vector<NamedPoly> gaudin_algebra_generators(const AlgebraPtr& alg, const std::vector<Rational>& poles);

struct LimitAlgebra {
  std::vector<CollisionNode> nodes;
  /// Generators of each node's factor algebra, spread into the full algebra.
  std::vector<std::vector<NamedPoly>> generators;

  std::vector<NamedPoly> all() const;
};

LimitAlgebra limit_gaudin_algebra(const AlgebraPtr& alg, const GluingPattern& pattern,
                                  const std::vector<Rational>& poles);

/// Residues of Tr L_k^{[m]}, m = 1..r, for the rational bending matrices, k = 1..N−1.
InvariantFamily quantum_bending_generators(const AlgebraPtr& alg, const Rational& z1, const Rational& z2);

/// classical_limit of each quantum bending generator against the classical bending
/// invariant with the same provenance.
Report bending_symbol_check(const AlgebraPtr& alg, const Rational& z1, const Rational& z2);

/// Degree-≤2 part of the subalgebra generated by `gens`: generators of degree ≤ 2,
/// products of two generators of degree ≤ 1, and 1.
std::vector<NCPoly> degree_two_slice(const std::vector<NCPoly>& gens);

/// Same Q-span of the degree-≤2 slices.
Report same_slice_check(const std::vector<NamedPoly>& a, const std::vector<NamedPoly>& b, const std::string& spec = "");

}  // namespace gaudin
