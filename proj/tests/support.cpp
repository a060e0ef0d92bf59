#include "support.hpp"

#include <algorithm>

namespace gaudin::testing {

namespace {

void add_to(Terms& acc, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// [x, y] for generator letters straight from the gl(r) relation.
std::vector<std::pair<Letter, Rational>> raw_bracket(const AlgebraPtr& alg, Letter x, Letter y) {
  Generator g = alg->generator(x);
  Generator h = alg->generator(y);
  std::vector<std::pair<Letter, Rational>> out;
  if (g.site != h.site) return out;
  if (g.col == h.row) out.emplace_back(alg->letter(g.site, g.row, h.col), 1);
  if (h.col == g.row) out.emplace_back(alg->letter(g.site, h.row, g.col), -1);
  return out;
}

}  // namespace

Terms naive_normal_form(const AlgebraPtr& alg, const std::vector<Letter>& word) {
  Terms done;
  std::vector<std::pair<std::vector<Letter>, Rational>> work{{word, 1}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    auto it = std::adjacent_find(w.begin(), w.end(), [](Letter a, Letter b) { return a > b; });
    if (it == w.end()) {
      add_to(done, w, c);
      continue;
    }
    const std::size_t i = static_cast<std::size_t>(it - w.begin());
    const Letter x = w[i], y = w[i + 1];
    std::vector<Letter> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(swapped, c);
    if (!alg->quantum()) continue;
    for (const auto& [l, s] : raw_bracket(alg, x, y)) {
      std::vector<Letter> shorter(w.begin(), w.begin() + static_cast<long>(i));
      shorter.push_back(l);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      work.emplace_back(shorter, c * s);
    }
  }
  return done;
}

NCPoly naive_multiply(const NCPoly& p, const NCPoly& q) {
  const AlgebraPtr& alg = p.algebra();
  Terms acc;
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      std::vector<Letter> w = m1;
      w.insert(w.end(), m2.begin(), m2.end());
      for (const auto& [m, c] : naive_normal_form(alg, w)) add_to(acc, m, c1 * c2 * c);
    }
  }
  return NCPoly(alg, acc);
}

std::vector<Rational> fundamental_rep(const NCPoly& p) {
  const AlgebraPtr& alg = p.algebra();
  const int r = alg->rank();
  int dim = 1;
  for (int i = 0; i < alg->sites(); ++i) dim *= r;
  auto matmul = [dim](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(static_cast<std::size_t>(dim * dim));
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) {
        const Rational& aik = a[static_cast<std::size_t>(i * dim + k)];
        if (aik == 0) continue;
        for (int j = 0; j < dim; ++j) c[static_cast<std::size_t>(i * dim + j)] += aik * b[static_cast<std::size_t>(k * dim + j)];
      }
    return c;
  };
  // Basis index = Σ digit_s r^{N−s}; e_ab at site s maps digit b to digit a.
  auto gen_matrix = [&](Letter l) {
    Generator g = alg->generator(l);
    std::vector<Rational> m(static_cast<std::size_t>(dim * dim));
    int stride = 1;
    for (int s = alg->sites(); s > g.site; --s) stride *= r;
    for (int col = 0; col < dim; ++col) {
      int digit = (col / stride) % r;
      if (digit != g.col - 1) continue;
      int row = col + (g.row - g.col) * stride;
      m[static_cast<std::size_t>(row * dim + col)] = 1;
    }
    return m;
  };
  std::vector<Rational> total(static_cast<std::size_t>(dim * dim));
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Rational> acc(static_cast<std::size_t>(dim * dim));
    for (int i = 0; i < dim; ++i) acc[static_cast<std::size_t>(i * dim + i)] = 1;
    for (Letter l : mono) acc = matmul(acc, gen_matrix(l));
    for (std::size_t k = 0; k < acc.size(); ++k) total[k] += c * acc[k];
  }
  return total;
}

}  // namespace gaudin::testing
