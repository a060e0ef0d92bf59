#include "gaudin/ncalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace gaudin {

std::string to_string(Mode mode) { return mode == Mode::Quantum ? "quantum" : "classical"; }

std::string to_string(const Signature& sig) {
  std::ostringstream os;
  os << "gl(" << sig.rank << ")^" << sig.sites << " " << to_string(sig.mode);
  return os.str();
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(const Signature& sig) : sig_(sig) {
  if (sig.rank < 1) throw AlgebraError("rank must be >= 1");
  if (sig.sites < 1) throw AlgebraError("number of sites must be >= 1");
}

std::shared_ptr<const Algebra> Algebra::get(const Signature& sig) {
  static std::mutex registry_mutex;
  static std::map<Signature, std::shared_ptr<const Algebra>> registry;
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(sig);
  if (it != registry.end()) return it->second;
  auto alg = std::make_shared<const Algebra>(sig);
  registry.emplace(sig, alg);
  return alg;
}

Letter Algebra::letter(const Generator& g) const {
  if (g.site < 1 || g.site > sig_.sites || g.row < 1 || g.row > sig_.rank || g.col < 1 || g.col > sig_.rank) {
    std::ostringstream os;
    os << "generator e[" << g.row << "," << g.col << "]@" << g.site << " out of range for " << to_string(sig_);
    throw AlgebraError(os.str());
  }
  return static_cast<Letter>(((g.site - 1) * sig_.rank + (g.row - 1)) * sig_.rank + (g.col - 1));
}

Generator Algebra::generator(Letter l) const {
  const int r = sig_.rank;
  const int idx = static_cast<int>(l);
  return Generator{idx / (r * r) + 1, (idx / r) % r + 1, idx % r + 1};
}

Terms Algebra::bracket_letters(Letter x, Letter y) const {
  Terms out;
  const Generator g = generator(x);
  const Generator h = generator(y);
  if (g.site != h.site) return out;
  // [e_ab, e_cd] = δ_bc e_ad − δ_da e_cb
  if (g.col == h.row) out[{letter(g.site, g.row, h.col)}] += 1;
  if (h.col == g.row) out[{letter(g.site, h.row, g.col)}] -= 1;
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

namespace {

void accumulate(Terms& acc, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Monomial merge_sorted(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::shared_ptr<const Terms> Algebra::multiply_letter(const Monomial& m, Letter g) const {
  if (m.empty() || m.back() <= g) {
    Monomial w = m;
    w.push_back(g);
    auto t = std::make_shared<Terms>();
    t->emplace(std::move(w), 1);
    return t;
  }
  auto key = std::make_pair(m, g);
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // m = m' x with x > g:  m' x g = (m' g) x + m' [x, g]
  const Letter x = m.back();
  const Monomial head(m.begin(), m.end() - 1);
  auto result = std::make_shared<Terms>();
  const auto moved = multiply_letter(head, g);
  for (const auto& [t, c] : *moved) {
    const auto tail = multiply_letter(t, x);
    for (const auto& [u, d] : *tail) accumulate(*result, u, c * d);
  }
  for (const auto& [h, c] : bracket_letters(x, g)) {
    const auto corr = multiply_letter(head, h.front());
    for (const auto& [u, d] : *corr) accumulate(*result, u, c * d);
  }
  std::lock_guard lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(std::move(key), std::move(result));
  return it->second;
}

Terms Algebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  Terms acc;
  if (!quantum()) {
    acc.emplace(merge_sorted(a, b), 1);
    return acc;
  }
  acc.emplace(a, 1);
  for (Letter g : b) {
    Terms next;
    for (const auto& [m, c] : acc) {
      const auto prod = multiply_letter(m, g);
      for (const auto& [u, d] : *prod) accumulate(next, u, c * d);
    }
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

NCPoly NCPoly::constant(AlgebraPtr alg, const Rational& c) {
  Terms t;
  if (c != 0) t.emplace(Monomial{}, c);
  return NCPoly(std::move(alg), std::move(t));
}

NCPoly NCPoly::generator(AlgebraPtr alg, int site, int row, int col) {
  Letter l = alg->letter(site, row, col);
  return monomial(std::move(alg), Monomial{l});
}

NCPoly NCPoly::monomial(AlgebraPtr alg, Monomial m, const Rational& c) {
  // Accepts any word; non-normal words are straightened.
  NCPoly out(alg);
  if (c == 0) return out;
  out.terms_.emplace(Monomial{}, 1);
  for (Letter l : m) {
    Terms next;
    for (const auto& [w, d] : out.terms_) {
      for (const auto& [u, e] : alg->multiply_monomials(w, Monomial{l})) accumulate(next, u, d * e);
    }
    out.terms_ = std::move(next);
  }
  out *= c;
  return out;
}

const Signature& NCPoly::signature() const {
  if (!alg_) throw AlgebraError("NCPoly has no algebra attached");
  return alg_->signature();
}

int NCPoly::degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(terms_.rbegin()->first.size());
}

Rational NCPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

NCPoly NCPoly::homogeneous_part(int d) const {
  NCPoly out(alg_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.size()) == d) out.terms_.emplace(m, c);
  }
  return out;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

const AlgebraPtr& common_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b && a->signature() != b->signature()) {
    throw AlgebraError("signature mismatch: " + to_string(a->signature()) + " vs " + to_string(b->signature()));
  }
  return a;
}

}  // namespace

void NCPoly::add_scaled(const Terms& t, const Rational& c) {
  for (const auto& [m, d] : t) accumulate(terms_, m, c * d);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  alg_ = common_algebra(alg_, o.alg_);
  add_scaled(o.terms_, 1);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  alg_ = common_algebra(alg_, o.alg_);
  add_scaled(o.terms_, -1);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, d] : terms_) d *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) { return multiply(a, b); }

bool NCPoly::operator==(const NCPoly& o) const {
  if (alg_ && o.alg_ && alg_->signature() != o.alg_->signature()) return false;
  return terms_ == o.terms_;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  const char sym = (alg_ && !alg_->quantum()) ? 'x' : 'e';
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational shown = c;
    if (first) {
      first = false;
    } else if (c < 0) {
      os << " - ";
      shown = -c;
    } else {
      os << " + ";
    }
    os << shown.get_str();
    for (Letter l : m) {
      Generator g = alg_->generator(l);
      os << " * " << sym << "[" << g.row << "," << g.col << "]@" << g.site;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- operations

NCPoly multiply(const NCPoly& p, const NCPoly& q) {
  const AlgebraPtr& alg = common_algebra(p.algebra(), q.algebra());
  Terms acc;
  if (!alg) return NCPoly();
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      for (const auto& [u, d] : alg->multiply_monomials(m1, m2)) accumulate(acc, u, c1 * c2 * d);
    }
  }
  return NCPoly(alg, std::move(acc));
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) {
  const AlgebraPtr& alg = common_algebra(p.algebra(), q.algebra());
  if (alg && !alg->quantum()) throw AlgebraError("commutator requires Quantum mode; use poisson_bracket");
  return multiply(p, q) - multiply(q, p);
}

NCPoly leibniz_bracket(const NCPoly& p, const NCPoly& q, const LetterBracket& on_letters) {
  const AlgebraPtr& alg = common_algebra(p.algebra(), q.algebra());
  if (!alg) return NCPoly();
  if (alg->quantum()) throw AlgebraError("Poisson brackets require Classical mode; use commutator");
  Terms acc;
  std::map<std::pair<Letter, Letter>, Terms> cache;
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      // Iterate distinct letters; multiplicities give the partial derivatives.
      for (std::size_t i = 0; i < m1.size(); ++i) {
        if (i > 0 && m1[i] == m1[i - 1]) continue;
        const auto mult1 = std::count(m1.begin(), m1.end(), m1[i]);
        Monomial rest1 = m1;
        rest1.erase(rest1.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t j = 0; j < m2.size(); ++j) {
          if (j > 0 && m2[j] == m2[j - 1]) continue;
          auto key = std::make_pair(m1[i], m2[j]);
          auto it = cache.find(key);
          if (it == cache.end()) it = cache.emplace(key, on_letters(m1[i], m2[j])).first;
          if (it->second.empty()) continue;
          const auto mult2 = std::count(m2.begin(), m2.end(), m2[j]);
          Monomial rest2 = m2;
          rest2.erase(rest2.begin() + static_cast<std::ptrdiff_t>(j));
          Monomial base = merge_sorted(rest1, rest2);
          const Rational scale = c1 * c2 * static_cast<long>(mult1 * mult2);
          for (const auto& [h, d] : it->second) accumulate(acc, merge_sorted(base, h), scale * d);
        }
      }
    }
  }
  return NCPoly(alg, std::move(acc));
}

NCPoly poisson_bracket(const NCPoly& p, const NCPoly& q) {
  const AlgebraPtr& alg = common_algebra(p.algebra(), q.algebra());
  if (!alg) return NCPoly();
  return leibniz_bracket(p, q, [&alg](Letter x, Letter y) { return alg->bracket_letters(x, y); });
}

NCPoly bracket(const NCPoly& p, const NCPoly& q) {
  const AlgebraPtr& alg = common_algebra(p.algebra(), q.algebra());
  if (alg && alg->quantum()) return commutator(p, q);
  return poisson_bracket(p, q);
}

NCPoly classical_limit(const NCPoly& p) {
  if (!p.algebra()) return p;
  AlgebraPtr target = p.algebra()->with_mode(Mode::Classical);
  Terms t;
  const int d = p.degree();
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<int>(m.size()) == d) t.emplace(m, c);
  }
  return NCPoly(target, std::move(t));
}

std::vector<NCPoly> diagonal_generators(const AlgebraPtr& alg) {
  std::vector<NCPoly> out;
  for (int a = 1; a <= alg->rank(); ++a) {
    NCPoly s(alg);
    for (int i = 1; i <= alg->sites(); ++i) s += NCPoly::generator(alg, i, a, a);
    out.push_back(std::move(s));
  }
  return out;
}

NCPoly partial_derivative(const NCPoly& p, Letter x) {
  if (p.algebra() && p.algebra()->quantum()) throw AlgebraError("partial_derivative requires Classical mode");
  Terms acc;
  for (const auto& [m, c] : p.terms()) {
    const auto mult = std::count(m.begin(), m.end(), x);
    if (mult == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), x));
    accumulate(acc, rest, c * static_cast<long>(mult));
  }
  return NCPoly(p.algebra(), std::move(acc));
}

Rational evaluate(const NCPoly& p, std::span<const Rational> point) {
  if (p.algebra() && p.algebra()->quantum()) throw AlgebraError("evaluate requires Classical mode");
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (Letter l : m) {
      if (l >= point.size()) throw AlgebraError("evaluation point has too few coordinates");
      v *= point[l];
    }
    sum += v;
  }
  return sum;
}

NCPoly substitute(const NCPoly& p, const AlgebraPtr& target, const std::function<NCPoly(Letter)>& image) {
  std::map<Letter, NCPoly> images;
  NCPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    NCPoly term = NCPoly::constant(target, c);
    for (Letter l : m) {
      auto it = images.find(l);
      if (it == images.end()) it = images.emplace(l, image(l)).first;
      term = multiply(term, it->second);
    }
    out += term;
  }
  return out;
}

NCPoly trace_product(const AlgebraPtr& alg, int i, int j) {
  NCPoly out(alg);
  for (int a = 1; a <= alg->rank(); ++a) {
    for (int b = 1; b <= alg->rank(); ++b) {
      out += multiply(NCPoly::generator(alg, i, a, b), NCPoly::generator(alg, j, b, a));
    }
  }
  return out;
}

}  // namespace gaudin
