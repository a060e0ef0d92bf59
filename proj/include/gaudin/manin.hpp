#pragma once

// Manin matrices: the predicate, column determinants, the Cramer / Schur /
// Cayley–Hamilton / Newton checks, quantum powers and Talalaev's generators.
//
// Most routines are templates over the entry ring E (NCPoly, LaxEntry,
// DiffOpEntry, TPoly<...>); E must support +, -, *, Rational * E, is_zero,
// zero_like, one_like and to_string.

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gaudin/diffop.hpp"
#include "gaudin/lax.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/report.hpp"

namespace gaudin {

using DiffOpMatrix = SquareMatrix<DiffOpEntry>;
using ScalarMatrix = SquareMatrix<NCPoly>;

template <class E>
E ring_commutator(const E& a, const E& b) {
  return a * b - b * a;
}

// ------------------------------------------------------------------ TPoly

/// Polynomial in a central variable t with coefficients in E (low → high).
template <class E>
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(const E& constant) : zero_(constant.zero_like()) {
    if (!constant.is_zero()) c_.push_back(constant);
  }
  /// t · unit
  static TPoly t(const E& unit) {
    TPoly p(unit.zero_like());
    p.c_ = {unit.zero_like(), unit};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  E coefficient(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : zero_; }
  bool is_zero() const { return c_.empty(); }
  TPoly zero_like() const { return TPoly(zero_); }
  TPoly one_like() const { return TPoly(zero_.one_like()); }

  /// d/dt
  TPoly derivative() const {
    TPoly out(zero_);
    for (int k = 1; k <= degree(); ++k) out.set(k - 1, Rational(k) * c_[static_cast<std::size_t>(k)]);
    return out;
  }

  TPoly& operator+=(const TPoly& o) {
    for (int k = 0; k <= o.degree(); ++k) set(k, coefficient(k) + o.c_[static_cast<std::size_t>(k)]);
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    for (int k = 0; k <= o.degree(); ++k) set(k, coefficient(k) - o.c_[static_cast<std::size_t>(k)]);
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out(a.zero_);
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) {
        out.set(i + j, out.coefficient(i + j) + a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)]);
      }
    return out;
  }
  friend TPoly operator*(const Rational& s, TPoly a) {
    for (int k = 0; k <= a.degree(); ++k) a.set(k, s * a.c_[static_cast<std::size_t>(k)]);
    return a;
  }
  bool operator==(const TPoly& o) const { return c_ == o.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[static_cast<std::size_t>(k)].to_string() + ")";
      if (k > 0) s += " t^" + std::to_string(k);
    }
    return s;
  }

 private:
  void set(int k, E v) {
    if (k > degree()) {
      if (v.is_zero()) return;
      c_.resize(static_cast<std::size_t>(k) + 1, zero_);
    }
    c_[static_cast<std::size_t>(k)] = std::move(v);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  E zero_;
  std::vector<E> c_;
};

// ------------------------------------------------------------------ predicate

struct ManinViolation {
  /// "column": [M_ij, M_kj] ≠ 0; "cross": [M_ij, M_kl] ≠ [M_kj, M_il]. Indices are 1-based.
  std::string condition;
  int i = 0, k = 0, j = 0, l = 0;
  std::string lhs, rhs;

  Json to_json() const {
    return Json{{"condition", condition}, {"rows", {i, k}}, {"cols", {j, l}}, {"lhs", lhs}, {"rhs", rhs}};
  }
};

template <class E>
std::optional<ManinViolation> manin_violation(const SquareMatrix<E>& M) {
  const int n = M.size();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        E c = ring_commutator(M(i, j), M(k, j));
        if (!c.is_zero()) return ManinViolation{"column", i + 1, k + 1, j + 1, j + 1, c.to_string(), "0"};
      }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
          E a = ring_commutator(M(i, j), M(k, l));
          E b = ring_commutator(M(k, j), M(i, l));
          if (!(a - b).is_zero()) return ManinViolation{"cross", i + 1, k + 1, j + 1, l + 1, a.to_string(), b.to_string()};
        }
  return std::nullopt;
}

template <class E>
bool is_manin(const SquareMatrix<E>& M) {
  return !manin_violation(M).has_value();
}

template <class E>
Report manin_report(const SquareMatrix<E>& M, const std::string& spec = "") {
  Report rep("is_manin", spec);
  rep.trials = 1;
  if (auto v = manin_violation(M)) rep.fail(v->to_json());
  return rep;
}

// ------------------------------------------------------------------ column determinant

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b] ? 1 : 0;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// det^col M = Σ_σ (−1)^σ M_{σ(p1),p1} M_{σ(p2),p2} ⋯ with columns multiplied in
/// the order p (0-based; default 0, 1, …, n−1).
template <class E>
E col_det(const SquareMatrix<E>& M, std::vector<int> order = {}) {
  const int n = M.size();
  if (n == 0) throw std::invalid_argument("col_det of an empty matrix");
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int c = 0; c < n; ++c) {
      if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(c)] != c) {
        throw std::invalid_argument("column order is not a permutation");
      }
    }
  }
  // suffix[mask] = signed sum over assignments of the rows in mask to the remaining columns,
  // multiplied left to right; the sign of the chosen row inside the mask gives the Laplace sign.
  std::map<unsigned, E> suffix;
  const unsigned full = (1u << n) - 1;
  std::function<E(unsigned, int)> expand = [&](unsigned mask, int t) -> E {
    if (t == n) return M.one();
    auto it = suffix.find(mask);
    if (it != suffix.end()) return it->second;
    E acc = M.zero();
    int pos = 0;
    for (int row = 0; row < n; ++row) {
      if (!(mask & (1u << row))) continue;
      const E& m = M(row, order[static_cast<std::size_t>(t)]);
      if (!m.is_zero()) {
        E rest = expand(mask & ~(1u << row), t + 1);
        if (!rest.is_zero()) {
          if (pos % 2 == 0) {
            acc += m * rest;
          } else {
            acc -= m * rest;
          }
        }
      }
      ++pos;
    }
    suffix.emplace(mask, acc);
    return acc;
  };
  E det = expand(full, 0);
  return detail::permutation_sign(order) > 0 ? det : Rational(-1) * det;
}

template <class E>
Report column_order_invariance(const SquareMatrix<E>& M) {
  Report rep("column_order_invariance");
  std::vector<int> order(static_cast<std::size_t>(M.size()));
  std::iota(order.begin(), order.end(), 0);
  const E reference = col_det(M, order);
  int count = 0;
  do {
    ++count;
    E d = col_det(M, order);
    if (!(d - reference).is_zero()) rep.fail(Json{{"order", order}, {"difference", (d - reference).to_string()}});
  } while (std::next_permutation(order.begin(), order.end()));
  rep.trials = count;
  rep.details["orders"] = count;
  return rep;
}

/// adj(M)_{ij} = (−1)^{i+j} det^col of M without row j and column i.
template <class E>
SquareMatrix<E> adjugate(const SquareMatrix<E>& M) {
  const int n = M.size();
  SquareMatrix<E> adj(n, M.zero());
  if (n == 1) {
    adj(0, 0) = M.one();
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      E minor = col_det(M.minor(j, i));
      adj(i, j) = (i + j) % 2 == 0 ? minor : Rational(-1) * minor;
    }
  return adj;
}

/// Left Cramer formula adj(M) M = det^col(M)·1.
template <class E>
Report cramer_check(const SquareMatrix<E>& M) {
  Report rep("cramer");
  rep.trials = 1;
  SquareMatrix<E> lhs = adjugate(M) * M;
  SquareMatrix<E> rhs = SquareMatrix<E>::identity(M.size(), col_det(M));
  for (int i = 0; i < M.size(); ++i)
    for (int j = 0; j < M.size(); ++j) {
      E r = lhs(i, j) - rhs(i, j);
      if (!r.is_zero()) rep.fail(Json{{"entry", {i + 1, j + 1}}, {"residual", r.to_string()}});
    }
  return rep;
}

// ------------------------------------------------------------------ Newton identities

/// σ_k from det^col(t + M) = Σ_k σ_k t^{n−k}; σ_0 = 1.
template <class E>
std::vector<E> elementary_coefficients(const SquareMatrix<E>& M) {
  const int n = M.size();
  using T = TPoly<E>;
  SquareMatrix<T> shifted = M.map([](const E& e) { return T(e); });
  for (int i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) + T::t(M.one());
  T det = col_det(shifted);
  std::vector<E> sigma;
  for (int k = 0; k <= n; ++k) sigma.push_back(det.coefficient(n - k));
  return sigma;
}

/// τ_i = Tr M^i for i = 0..n (τ_0 = n).
template <class E>
std::vector<E> power_traces(const SquareMatrix<E>& M) {
  std::vector<E> tau{Rational(M.size()) * M.one()};
  SquareMatrix<E> P = M;
  for (int i = 1; i <= M.size(); ++i) {
    if (i > 1) P = P * M;
    tau.push_back(P.trace());
  }
  return tau;
}

template <class E>
Report newton_check(const SquareMatrix<E>& M) {
  Report rep("newton");
  const int n = M.size();
  auto sigma = elementary_coefficients(M);
  auto tau = power_traces(M);
  for (int k = 1; k <= n; ++k) {
    E lhs = Rational((k % 2 == 1 ? 1 : -1) * k) * sigma[static_cast<std::size_t>(k)];
    E rhs = M.zero();
    for (int i = 0; i < k; ++i) {
      E term = sigma[static_cast<std::size_t>(i)] * tau[static_cast<std::size_t>(k - i)];
      rhs += i % 2 == 0 ? term : Rational(-1) * term;
    }
    ++rep.trials;
    if (!(lhs - rhs).is_zero()) rep.fail(Json{{"identity", "newton"}, {"k", k}, {"residual", (lhs - rhs).to_string()}});
  }
  // Tr adj(t + M) = ∂_t det^col(t + M)
  using T = TPoly<E>;
  SquareMatrix<T> shifted = M.map([](const E& e) { return T(e); });
  for (int i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) + T::t(M.one());
  T diff = adjugate(shifted).trace() - col_det(shifted).derivative();
  ++rep.trials;
  if (!diff.is_zero()) rep.fail(Json{{"identity", "adjugate-trace"}, {"residual", diff.to_string()}});
  // σ_k as sums of principal column minors (independent of the t-expansion).
  for (int k = 1; k <= n; ++k) {
    E sum = M.zero();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      sum += col_det(M.submatrix(idx, idx));
    }
    ++rep.trials;
    if (!(sum - sigma[static_cast<std::size_t>(k)]).is_zero()) {
      rep.fail(Json{{"identity", "principal-minors"}, {"k", k}, {"residual", (sum - sigma[static_cast<std::size_t>(k)]).to_string()}});
    }
  }
  return rep;
}

// ------------------------------------------------------------------ ∂-free checks

/// det^col(t − M)|_{t=M} with the coefficients of t^k placed left of M^k
/// (and, for the record, to the right).
Report cayley_hamilton_check(const ScalarMatrix& M);

/// det^col [[A,B],[C,D]] = det(A) det^col(D − C A^{-1} B) for a constant invertible
/// top-left split×split block A, and the mirrored formula when D is constant and invertible.
Report schur_check(const ScalarMatrix& M, int split = 1);

Report manin_property_suite(const ScalarMatrix& M, int split = 1);
Report manin_property_suite(const DiffOpMatrix& M);

// ------------------------------------------------------------------ Lax-matrix side

/// ∂_z·1 − L(z).
DiffOpMatrix manin_operator(const LaxMatrix& L);

/// L^{[0]} = 1, L^{[i]} = L^{[i−1]} L − ∂_z L^{[i−1]}.
std::vector<SquareMatrix<LaxEntry>> quantum_powers(const LaxMatrix& L, int m);

struct TalalaevOutput {
  AlgebraPtr algebra;
  /// det^col(∂_z − L) = Σ_i qh[i] ∂_z^i, so qh[r] = 1.
  std::vector<LaxEntry> qh;
  /// qtr[k−1][j] = QTr^k_j: Tr((∂_z − L)^k) = Σ_j QTr^k_j ∂_z^{k−j}, k = 1..r.
  std::vector<std::vector<LaxEntry>> qtr;
};

TalalaevOutput talalaev_generators(const LaxMatrix& L);

struct NamedPoly {
  std::string label;
  NCPoly value;
};

/// QH_i(u) for i < r and the zeroth-order traces QTr^k_k(u), at every point u.
std::vector<NamedPoly> evaluate_talalaev(const TalalaevOutput& out, const std::vector<Rational>& points,
                                         bool include_traces = true);

/// Constant c with QTr^k_k = c · Tr L^{[k]}, per k = 1..r (nullopt when not proportional).
std::vector<std::optional<Rational>> qtr_normalization(const LaxMatrix& L, const TalalaevOutput& out);

/// All pairwise brackets (commutators or Poisson brackets by mode). Mixed signatures throw.
Report commutation_matrix(const std::vector<NamedPoly>& gens, const std::string& spec = "");
Report commutation_matrix(const std::vector<NCPoly>& gens, const std::string& spec = "");

/// Two lists pairwise across (every a with every b).
Report cross_commutation(const std::vector<NamedPoly>& a, const std::vector<NamedPoly>& b, const std::string& spec = "");

}  // namespace gaudin
