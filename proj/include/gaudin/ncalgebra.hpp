#pragma once

// Exact kernel for U(gl(r))^{⊗N} (Quantum) and S(gl(r))^{⊗N} (Classical).
//
// Elements are sparse rational combinations of PBW-ordered monomials in the
// matrix units e_ab^{(i)}. The generator order is lexicographic on
// (site, row, col); a monomial is in normal form when its letters are
// non-decreasing. In Classical mode the same representation is a
// commutative polynomial ring.

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaudin/rational.hpp"

namespace gaudin {

enum class Mode { Quantum, Classical };

std::string to_string(Mode mode);

struct Signature {
  int rank = 1;
  int sites = 1;
  Mode mode = Mode::Quantum;

  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& sig);

/// Thrown for contract violations inside the algebra layer (mode or signature mismatch, bad indices).
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// e_ab^{(i)}; all indices are 1-based.
struct Generator {
  int site = 1;
  int row = 1;
  int col = 1;

  auto operator<=>(const Generator&) const = default;
};

using Letter = std::uint32_t;
using Monomial = std::vector<Letter>;

/// Graded lexicographic order: shorter words first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Terms = std::map<Monomial, Rational, MonomialOrder>;

/// Shared, immutable-by-contract algebra context. One instance per signature
/// (see get()); it owns the straightening memo, which is mutex guarded.
class Algebra {
 public:
  static std::shared_ptr<const Algebra> get(const Signature& sig);
  static std::shared_ptr<const Algebra> get(int rank, int sites, Mode mode) {
    return get(Signature{rank, sites, mode});
  }

  const Signature& signature() const { return sig_; }
  int rank() const { return sig_.rank; }
  int sites() const { return sig_.sites; }
  Mode mode() const { return sig_.mode; }
  bool quantum() const { return sig_.mode == Mode::Quantum; }
  std::size_t num_generators() const {
    return static_cast<std::size_t>(sig_.sites) * sig_.rank * sig_.rank;
  }

  Letter letter(const Generator& g) const;
  Letter letter(int site, int row, int col) const { return letter(Generator{site, row, col}); }
  Generator generator(Letter l) const;

  /// Structure constants [e_ab^{(i)}, e_cd^{(j)}] = δ_ij (δ_bc e_ad − δ_da e_cb).
  /// The same table is the Lie–Poisson bracket on coordinate functions.
  Terms bracket_letters(Letter x, Letter y) const;

  /// Normal form of the product of two normal-form monomials.
  Terms multiply_monomials(const Monomial& a, const Monomial& b) const;

  /// Same signature with the other mode (classical_limit target).
  std::shared_ptr<const Algebra> with_mode(Mode mode) const { return get(Signature{sig_.rank, sig_.sites, mode}); }

  explicit Algebra(const Signature& sig);

 private:
  std::shared_ptr<const Terms> multiply_letter(const Monomial& m, Letter g) const;

  Signature sig_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Monomial, Letter>, std::shared_ptr<const Terms>> memo_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Degree of the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  NCPoly(AlgebraPtr alg, Terms terms);

  static NCPoly constant(AlgebraPtr alg, const Rational& c);
  static NCPoly generator(AlgebraPtr alg, int site, int row, int col);
  static NCPoly monomial(AlgebraPtr alg, Monomial m, const Rational& c = 1);

  const AlgebraPtr& algebra() const { return alg_; }
  const Signature& signature() const;
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree; kZeroDegree for the zero element.
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  /// Part of exact degree d.
  NCPoly homogeneous_part(int d) const;

  NCPoly zero_like() const { return NCPoly(alg_); }
  NCPoly one_like() const { return constant(alg_, 1); }

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }

  bool operator==(const NCPoly& o) const;

  /// `c * e[a,b]@i * ...` in PBW order; Classical mode prints `x[a,b]@i`.
  std::string to_string() const;

 private:
  void add_scaled(const Terms& t, const Rational& c);

  AlgebraPtr alg_;
  Terms terms_;
};

/// Algebra product; rejects operands from different signatures.
NCPoly multiply(const NCPoly& p, const NCPoly& q);
/// pq − qp; Quantum mode only.
NCPoly commutator(const NCPoly& p, const NCPoly& q);
/// Product Lie–Poisson bracket extended by Leibniz; Classical mode only.
NCPoly poisson_bracket(const NCPoly& p, const NCPoly& q);
/// commutator in Quantum mode, poisson_bracket in Classical mode.
NCPoly bracket(const NCPoly& p, const NCPoly& q);

/// Biderivation determined by its values on pairs of generators. Classical mode.
using LetterBracket = std::function<Terms(Letter, Letter)>;
NCPoly leibniz_bracket(const NCPoly& p, const NCPoly& q, const LetterBracket& on_letters);

/// Top filtration-degree part with commuting generators.
NCPoly classical_limit(const NCPoly& p);

/// Σ_i e_aa^{(i)} for a = 1..r.
std::vector<NCPoly> diagonal_generators(const AlgebraPtr& alg);

/// ∂p/∂x for a generator letter. Classical mode.
NCPoly partial_derivative(const NCPoly& p, Letter x);

/// Value at a point of gl(r)^N (indexed by Letter). Classical mode.
Rational evaluate(const NCPoly& p, std::span<const Rational> point);

/// Algebra homomorphism determined by generator images, applied to a normal-ordered
/// element and re-normalized in the target algebra.
NCPoly substitute(const NCPoly& p, const AlgebraPtr& target, const std::function<NCPoly(Letter)>& image);

/// Tr(X_i X_j) = Σ_{a,b} e_ab^{(i)} e_ba^{(j)}.
NCPoly trace_product(const AlgebraPtr& alg, int i, int j);

}  // namespace gaudin
