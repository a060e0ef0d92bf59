#include "gaudin/lax.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gaudin {

LaxMatrix::LaxMatrix(std::string id, AlgebraPtr alg, SquareMatrix<LaxEntry> entries, std::vector<Pole> poles,
                     bool polynomial)
    : id_(std::move(id)), alg_(std::move(alg)), entries_(std::move(entries)), poles_(std::move(poles)),
      polynomial_(polynomial) {}

std::string LaxMatrix::to_string() const {
  std::ostringstream os;
  os << id_ << " [" << gaudin::to_string(alg_->signature()) << "]\n";
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) os << "  (" << a + 1 << "," << b + 1 << "): " << entries_(a, b).to_string() << "\n";
  }
  return os.str();
}

void require_distinct(const std::vector<Rational>& points, const std::string& what) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("repeated " + what + ": " + points[i].get_str() + " appears more than once");
      }
    }
  }
}

SquareMatrix<LaxEntry> site_block(const AlgebraPtr& alg, const std::vector<int>& sites) {
  const int r = alg->rank();
  SquareMatrix<LaxEntry> X(r, LaxEntry(alg));
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      NCPoly s(alg);
      for (int i : sites) s += NCPoly::generator(alg, i, a, b);
      X(a - 1, b - 1) = LaxEntry(s);
    }
  }
  return X;
}

LaxMatrix rational_lax(std::string id, const AlgebraPtr& alg, const std::vector<PoleBlock>& blocks) {
  std::vector<Rational> points;
  for (const auto& b : blocks) points.push_back(b.point);
  require_distinct(points, "poles");
  const int r = alg->rank();
  SquareMatrix<LaxEntry> L(r, LaxEntry(alg));
  std::vector<Pole> poles;
  for (const auto& block : blocks) {
    for (int i : block.sites) {
      if (i < 1 || i > alg->sites()) throw std::invalid_argument("site index out of range in Lax block");
    }
    const RatFun f = RatFun::pole(block.point);
    auto X = site_block(alg, block.sites);
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) L(a, b) += f * X(a, b);
    }
    poles.push_back(Pole{block.point, 1});
  }
  return LaxMatrix(std::move(id), alg, std::move(L), std::move(poles), false);
}

LaxMatrix gaudin_lax(const AlgebraPtr& alg, const std::vector<Rational>& poles) {
  if (static_cast<int>(poles.size()) != alg->sites()) {
    throw std::invalid_argument("gaudin_lax needs exactly N = " + std::to_string(alg->sites()) + " poles");
  }
  std::vector<PoleBlock> blocks;
  for (int i = 0; i < alg->sites(); ++i) blocks.push_back(PoleBlock{{i + 1}, poles[static_cast<std::size_t>(i)]});
  return rational_lax("gaudin", alg, blocks);
}

LaxMatrix bending_lax(const AlgebraPtr& alg, int k) {
  const int N = alg->sites();
  if (k < 1 || k > N - 1) throw std::invalid_argument("bending index k must lie in 1..N-1");
  const int r = alg->rank();
  std::vector<int> tail;
  for (int i = k + 1; i <= N; ++i) tail.push_back(i);
  auto head = site_block(alg, {k});
  auto rest = site_block(alg, tail);
  SquareMatrix<LaxEntry> L(r, LaxEntry(alg));
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) L(a, b) = RatFun::z() * head(a, b) + rest(a, b);
  }
  return LaxMatrix("bending[" + std::to_string(k) + "]", alg, std::move(L), {}, true);
}

LaxMatrix bending_lax_rational(const AlgebraPtr& alg, int k, const Rational& z1, const Rational& z2) {
  const int N = alg->sites();
  if (k < 1 || k > N - 1) throw std::invalid_argument("bending index k must lie in 1..N-1");
  if (z1 == z2) throw std::invalid_argument("bending_lax_rational needs z1 != z2");
  std::vector<int> head;
  for (int i = 1; i <= k; ++i) head.push_back(i);
  return rational_lax("bending-rational[" + std::to_string(k) + "]", alg,
                      {PoleBlock{head, z1}, PoleBlock{{k + 1}, z2}});
}

std::string Provenance::to_string() const {
  std::ostringstream os;
  os << matrix << " m=" << power;
  if (pole) {
    os << " pole=" << pole->get_str() << " k=" << order;
  } else {
    os << " z^" << order;
  }
  return os.str();
}

std::vector<NCPoly> InvariantFamily::values() const {
  std::vector<NCPoly> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.value);
  return out;
}

void InvariantFamily::append(const InvariantFamily& other) {
  members.insert(members.end(), other.members.begin(), other.members.end());
}

std::vector<LaxEntry> trace_powers(const LaxMatrix& L, int max_power) {
  std::vector<LaxEntry> out;
  SquareMatrix<LaxEntry> P = L.entries();
  for (int m = 1; m <= max_power; ++m) {
    if (m > 1) P = P * L.entries();
    out.push_back(P.trace());
  }
  return out;
}

InvariantFamily spectral_invariants(const LaxMatrix& L, int max_power) {
  if (L.algebra()->quantum()) {
    throw AlgebraError("spectral_invariants is classical; quantum invariants come from the Manin construction");
  }
  InvariantFamily fam;
  auto traces = trace_powers(L, max_power);
  for (int m = 1; m <= max_power; ++m) {
    const LaxEntry& T = traces[static_cast<std::size_t>(m - 1)];
    if (L.polynomial()) {
      for (int a = 0; a <= T.polynomial_degree(); ++a) {
        NCPoly v = T.laurent_coefficient(0, a);
        if (!v.is_zero()) fam.members.push_back({std::move(v), Provenance{L.id(), m, std::nullopt, a}});
      }
      continue;
    }
    for (const auto& pole : L.poles()) {
      const int order = T.pole_order(pole.point);
      for (int k = 0; k < order; ++k) {
        NCPoly v = T.residue(pole.point, k);
        if (!v.is_zero()) fam.members.push_back({std::move(v), Provenance{L.id(), m, pole.point, k}});
      }
    }
  }
  return fam;
}

std::vector<NCPoly> quadratic_hamiltonians(const AlgebraPtr& alg, const std::vector<Rational>& poles) {
  if (static_cast<int>(poles.size()) != alg->sites()) throw std::invalid_argument("need one pole per site");
  require_distinct(poles, "poles");
  std::vector<NCPoly> out;
  for (int i = 1; i <= alg->sites(); ++i) {
    NCPoly h(alg);
    for (int k = 1; k <= alg->sites(); ++k) {
      if (k == i) continue;
      const Rational w = 1 / (poles[static_cast<std::size_t>(i - 1)] - poles[static_cast<std::size_t>(k - 1)]);
      h += w * trace_product(alg, i, k);
    }
    out.push_back(std::move(h));
  }
  return out;
}

NCPoly physical_hamiltonian(const AlgebraPtr& alg) {
  if (alg->sites() < 2) throw std::invalid_argument("physical_hamiltonian needs N >= 2");
  NCPoly h(alg);
  for (int i = 1; i <= alg->sites(); ++i) {
    for (int j = 1; j <= alg->sites(); ++j) {
      if (i != j) h += trace_product(alg, i, j);
    }
  }
  return h;
}

}  // namespace gaudin
