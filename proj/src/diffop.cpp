#include "gaudin/diffop.hpp"

#include <sstream>

namespace gaudin {

namespace {

const AlgebraPtr& pick(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b && a->signature() != b->signature()) {
    throw AlgebraError("signature mismatch: " + to_string(a->signature()) + " vs " + to_string(b->signature()));
  }
  return a;
}

Rational binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace

// ---------------------------------------------------------------- LaxEntry

LaxEntry::LaxEntry(const NCPoly& p, const RatFun& f) : alg_(p.algebra()) {
  if (f.is_zero()) return;
  for (const auto& [m, c] : p.terms()) terms_.emplace(m, RatFun(c) * f);
}

LaxEntry LaxEntry::constant(AlgebraPtr alg, const RatFun& f) {
  LaxEntry e(std::move(alg));
  if (!f.is_zero()) e.terms_.emplace(Monomial{}, f);
  return e;
}

void LaxEntry::add(const Monomial& m, const RatFun& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, f);
  if (!inserted) {
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaxEntry LaxEntry::operator-() const {
  LaxEntry out = *this;
  for (auto& [m, f] : out.terms_) f = -f;
  return out;
}

LaxEntry& LaxEntry::operator+=(const LaxEntry& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [m, f] : o.terms_) add(m, f);
  return *this;
}

LaxEntry& LaxEntry::operator-=(const LaxEntry& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [m, f] : o.terms_) add(m, -f);
  return *this;
}

LaxEntry operator*(const LaxEntry& a, const LaxEntry& b) {
  const AlgebraPtr& alg = pick(a.alg_, b.alg_);
  LaxEntry out(alg);
  if (a.is_zero() || b.is_zero()) return out;
  // Group by product monomial so each RatFun sum is formed once.
  std::map<Monomial, std::vector<std::pair<Rational, const RatFun*>>, MonomialOrder> pending;
  std::map<std::pair<const RatFun*, const RatFun*>, RatFun> products;
  for (const auto& [m1, f1] : a.terms_) {
    for (const auto& [m2, f2] : b.terms_) {
      const RatFun& fg = products.emplace(std::make_pair(&f1, &f2), f1 * f2).first->second;
      for (const auto& [u, c] : alg->multiply_monomials(m1, m2)) pending[u].emplace_back(c, &fg);
    }
  }
  for (const auto& [u, parts] : pending) {
    RatFun sum;
    for (const auto& [c, f] : parts) sum = sum + RatFun(c) * *f;
    if (!sum.is_zero()) out.terms_.emplace(u, std::move(sum));
  }
  return out;
}

LaxEntry operator*(const RatFun& f, const LaxEntry& a) {
  LaxEntry out(a.alg_);
  if (f.is_zero()) return out;
  for (const auto& [m, g] : a.terms_) out.add(m, f * g);
  return out;
}

LaxEntry LaxEntry::derivative() const {
  LaxEntry out(alg_);
  for (const auto& [m, f] : terms_) out.add(m, f.derivative());
  return out;
}

NCPoly LaxEntry::eval_z(const Rational& point) const {
  Terms t;
  for (const auto& [m, f] : terms_) {
    Rational v = f.evaluate(point);
    if (v != 0) t.emplace(m, v);
  }
  return NCPoly(alg_, std::move(t));
}

NCPoly LaxEntry::residue(const Rational& p, int order) const { return laurent_coefficient(p, -1 - order); }

NCPoly LaxEntry::laurent_coefficient(const Rational& p, int n) const {
  Terms t;
  for (const auto& [m, f] : terms_) {
    Rational v = f.laurent_coefficient(p, n);
    if (v != 0) t.emplace(m, v);
  }
  return NCPoly(alg_, std::move(t));
}

int LaxEntry::pole_order(const Rational& p) const {
  int best = 0;
  for (const auto& [m, f] : terms_) best = std::max(best, f.pole_order(p));
  return best;
}

bool LaxEntry::is_polynomial() const {
  for (const auto& [m, f] : terms_) {
    if (!f.is_polynomial()) return false;
  }
  return true;
}

int LaxEntry::polynomial_degree() const {
  int best = -1;
  for (const auto& [m, f] : terms_) best = std::max(best, f.numerator().degree());
  return best;
}

LaxEntry LaxEntry::homogeneous_part(int d) const {
  LaxEntry out(alg_);
  for (const auto& [m, f] : terms_) {
    if (static_cast<int>(m.size()) == d) out.terms_.emplace(m, f);
  }
  return out;
}

std::string LaxEntry::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << f.to_string() << "]";
    if (!m.empty()) os << " * " << NCPoly::monomial(alg_, m).to_string().substr(4);
  }
  return os.str();
}

LaxEntry lax_commutator(const LaxEntry& a, const LaxEntry& b) { return a * b - b * a; }

// ---------------------------------------------------------------- DiffOpEntry

DiffOpEntry::DiffOpEntry(const LaxEntry& e) : alg_(e.algebra()) {
  if (!e.is_zero()) coeffs_.emplace(0, e);
}

DiffOpEntry DiffOpEntry::d(AlgebraPtr alg, int k) {
  DiffOpEntry out(alg);
  out.coeffs_.emplace(k, LaxEntry::constant(std::move(alg), RatFun(1)));
  return out;
}

LaxEntry DiffOpEntry::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaxEntry(alg_) : it->second;
}

void DiffOpEntry::add(int k, const LaxEntry& e) {
  if (e.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DiffOpEntry DiffOpEntry::operator-() const {
  DiffOpEntry out = *this;
  for (auto& [k, e] : out.coeffs_) e = -e;
  return out;
}

DiffOpEntry& DiffOpEntry::operator+=(const DiffOpEntry& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [k, e] : o.coeffs_) add(k, e);
  return *this;
}

DiffOpEntry& DiffOpEntry::operator-=(const DiffOpEntry& o) {
  alg_ = pick(alg_, o.alg_);
  for (const auto& [k, e] : o.coeffs_) add(k, -e);
  return *this;
}

DiffOpEntry operator*(const DiffOpEntry& a, const DiffOpEntry& b) {
  DiffOpEntry out(pick(a.alg_, b.alg_));
  for (const auto& [i, A] : a.coeffs_) {
    for (const auto& [j, B] : b.coeffs_) {
      LaxEntry deriv = B;
      for (int l = 0; l <= i; ++l) {
        if (l > 0) deriv = deriv.derivative();
        if (deriv.is_zero()) break;
        out.add(i - l + j, binomial(i, l) * (A * deriv));
      }
    }
  }
  return out;
}

DiffOpEntry operator*(const Rational& c, const DiffOpEntry& a) {
  DiffOpEntry out(a.alg_);
  if (c == 0) return out;
  for (const auto& [k, e] : a.coeffs_) out.add(k, c * e);
  return out;
}

std::vector<NCPoly> DiffOpEntry::eval_z(const Rational& point) const {
  std::vector<NCPoly> out(static_cast<std::size_t>(std::max(order(), 0) + 1), NCPoly(alg_));
  for (const auto& [k, e] : coeffs_) out[static_cast<std::size_t>(k)] = e.eval_z(point);
  return out;
}

std::string DiffOpEntry::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first == 1) os << " d";
    if (it->first > 1) os << " d^" << it->first;
  }
  return os.str();
}

DiffOpEntry diffop_commutator(const DiffOpEntry& a, const DiffOpEntry& b) { return a * b - b * a; }

}  // namespace gaudin
