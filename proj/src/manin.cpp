#include "gaudin/manin.hpp"

#include "gaudin/linalg.hpp"
#include "gaudin/parallel.hpp"

namespace gaudin {

namespace {

bool is_scalar(const NCPoly& p) { return p.degree() <= 0; }
Rational scalar_value(const NCPoly& p) { return p.coefficient(Monomial{}); }

std::optional<QMatrix> constant_block(const ScalarMatrix& M, const std::vector<int>& idx) {
  QMatrix q(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const NCPoly& e = M(idx[i], idx[j]);
      if (!is_scalar(e)) return std::nullopt;
      q[i][j] = scalar_value(e);
    }
  return q;
}

// det(P) det^col(Q − R P^{-1} S) for the split given by index sets `p` (constant block) and `q`.
std::optional<NCPoly> schur_side(const ScalarMatrix& M, const std::vector<int>& p, const std::vector<int>& q,
                                 std::string& why) {
  auto P = constant_block(M, p);
  if (!P) {
    why = "block is not constant";
    return std::nullopt;
  }
  auto Pinv = inverse(*P);
  if (!Pinv) {
    why = "block is singular";
    return std::nullopt;
  }
  const AlgebraPtr& alg = M(0, 0).algebra();
  ScalarMatrix S(static_cast<int>(q.size()), NCPoly(alg));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      NCPoly v = M(q[i], q[j]);
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) {
          if ((*Pinv)[a][b] == 0) continue;
          v -= (*Pinv)[a][b] * (M(q[i], p[a]) * M(p[b], q[j]));
        }
      S(static_cast<int>(i), static_cast<int>(j)) = std::move(v);
    }
  return determinant(*P) * col_det(S);
}

}  // namespace

Report cayley_hamilton_check(const ScalarMatrix& M) {
  Report rep("cayley_hamilton");
  rep.trials = 1;
  using T = TPoly<NCPoly>;
  const int n = M.size();
  SquareMatrix<T> shifted = M.map([](const NCPoly& e) { return T(-e); });
  for (int i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) + T::t(M.one());
  T det = col_det(shifted);
  ScalarMatrix left(n, M.zero()), right(n, M.zero());
  ScalarMatrix power = ScalarMatrix::identity(n, M.one());
  for (int k = 0; k <= det.degree(); ++k) {
    if (k > 0) power = power * M;
    const NCPoly c = det.coefficient(k);
    left = left + c * power;
    right = right + power.map([&](const NCPoly& e) { return e * c; });
  }
  rep.details["left_zero"] = left.is_zero();
  rep.details["right_zero"] = right.is_zero();
  rep.details["placement"] = left.is_zero() ? "left" : (right.is_zero() ? "right" : "none");
  if (!left.is_zero() && !right.is_zero()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!left(i, j).is_zero()) rep.fail(Json{{"entry", {i + 1, j + 1}}, {"residual", left(i, j).to_string()}});
  }
  return rep;
}

Report schur_check(const ScalarMatrix& M, int split) {
  Report rep("schur");
  const int n = M.size();
  if (split < 1 || split >= n) {
    rep.skip("split must lie in 1..n-1");
    return rep;
  }
  std::vector<int> top, bottom;
  for (int i = 0; i < n; ++i) (i < split ? top : bottom).push_back(i);
  const NCPoly det = col_det(M);
  int attempted = 0;
  for (const auto& [name, p, q] : {std::tuple{"A", top, bottom}, std::tuple{"D", bottom, top}}) {
    std::string why;
    auto rhs = schur_side(M, p, q, why);
    if (!rhs) {
      rep.details[std::string("skipped_") + name] = why;
      continue;
    }
    ++attempted;
    if (!(det - *rhs).is_zero()) rep.fail(Json{{"pivot_block", name}, {"residual", (det - *rhs).to_string()}});
  }
  rep.trials = attempted;
  if (attempted == 0) rep.skip("no constant invertible diagonal block for split " + std::to_string(split));
  return rep;
}

Report manin_property_suite(const ScalarMatrix& M, int split) {
  Report rep("manin_property_suite");
  rep.add(manin_report(M));
  rep.add(cramer_check(M));
  rep.add(schur_check(M, split));
  rep.add(cayley_hamilton_check(M));
  return rep;
}

Report manin_property_suite(const DiffOpMatrix& M) {
  Report rep("manin_property_suite");
  rep.add(manin_report(M));
  rep.add(cramer_check(M));
  Report schur("schur");
  schur.skip("entries depend on the derivation; Schur is checked for derivation-free matrices");
  rep.add(schur);
  Report ch("cayley_hamilton");
  ch.skip("entries depend on the derivation; t -> M substitution needs derivation-free entries");
  rep.add(ch);
  return rep;
}

DiffOpMatrix manin_operator(const LaxMatrix& L) {
  const AlgebraPtr& alg = L.algebra();
  const int r = L.size();
  DiffOpMatrix D(r, DiffOpEntry(alg));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      DiffOpEntry e = -DiffOpEntry(L(a, b));
      if (a == b) e += DiffOpEntry::d(alg);
      D(a, b) = std::move(e);
    }
  return D;
}

std::vector<SquareMatrix<LaxEntry>> quantum_powers(const LaxMatrix& L, int m) {
  std::vector<SquareMatrix<LaxEntry>> out;
  out.push_back(SquareMatrix<LaxEntry>::identity(L.size(), LaxEntry::constant(L.algebra(), RatFun(1))));
  for (int i = 1; i <= m; ++i) {
    const auto& prev = out.back();
    out.push_back(prev * L.entries() - prev.map([](const LaxEntry& e) { return e.derivative(); }));
  }
  return out;
}

TalalaevOutput talalaev_generators(const LaxMatrix& L) {
  TalalaevOutput out;
  out.algebra = L.algebra();
  const int r = L.size();
  DiffOpMatrix D = manin_operator(L);
  DiffOpEntry det = col_det(D);
  for (int i = 0; i <= r; ++i) out.qh.push_back(det.coefficient(i));
  DiffOpMatrix P = D;
  for (int k = 1; k <= r; ++k) {
    if (k > 1) P = P * D;
    DiffOpEntry tr = P.trace();
    std::vector<LaxEntry> row;
    for (int j = 0; j <= k; ++j) row.push_back(tr.coefficient(k - j));
    out.qtr.push_back(std::move(row));
  }
  return out;
}

std::vector<NamedPoly> evaluate_talalaev(const TalalaevOutput& out, const std::vector<Rational>& points,
                                         bool include_traces) {
  std::vector<NamedPoly> gens;
  const int r = static_cast<int>(out.qh.size()) - 1;
  for (const Rational& u : points) {
    for (int i = 0; i < r; ++i) {
      gens.push_back({"QH_" + std::to_string(i) + "(" + u.get_str() + ")", out.qh[static_cast<std::size_t>(i)].eval_z(u)});
    }
    if (!include_traces) continue;
    for (int k = 1; k <= r; ++k) {
      gens.push_back({"QTr^" + std::to_string(k) + "_" + std::to_string(k) + "(" + u.get_str() + ")",
                      out.qtr[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k)].eval_z(u)});
    }
  }
  return gens;
}

std::vector<std::optional<Rational>> qtr_normalization(const LaxMatrix& L, const TalalaevOutput& out) {
  const int r = L.size();
  auto powers = quantum_powers(L, r);
  std::vector<std::optional<Rational>> ratios;
  for (int k = 1; k <= r; ++k) {
    const LaxEntry& a = out.qtr[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k)];
    const LaxEntry b = powers[static_cast<std::size_t>(k)].trace();
    if (b.is_zero()) {
      ratios.push_back(a.is_zero() ? std::optional<Rational>(1) : std::nullopt);
      continue;
    }
    const auto& [m, f] = *b.terms().begin();
    auto it = a.terms().find(m);
    if (it == a.terms().end()) {
      ratios.push_back(std::nullopt);
      continue;
    }
    RatFun q = it->second / f;
    if (!q.is_constant()) {
      ratios.push_back(std::nullopt);
      continue;
    }
    Rational c = q.numerator().coefficient(0);
    ratios.push_back(a == c * b ? std::optional<Rational>(c) : std::nullopt);
  }
  return ratios;
}

namespace {

void require_common_signature(const std::vector<NamedPoly>& gens) {
  for (const auto& g : gens) {
    if (!g.value.algebra()) continue;
    for (const auto& h : gens) {
      if (h.value.algebra() && h.value.signature() != g.value.signature()) {
        throw AlgebraError("commutation_matrix: mixed signatures " + to_string(g.value.signature()) + " and " +
                           to_string(h.value.signature()));
      }
    }
    break;
  }
}

}  // namespace

Report commutation_matrix(const std::vector<NamedPoly>& gens, const std::string& spec) {
  require_common_signature(gens);
  Report rep("commutation_matrix", spec);
  const std::size_t n = gens.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<NCPoly> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    results[p] = bracket(gens[pairs[p].first].value, gens[pairs[p].second].value);
  });
  Json matrix = Json::array();
  for (std::size_t i = 0; i < n; ++i) matrix.push_back(std::vector<std::string>(n, "0"));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    if (results[p].is_zero()) continue;
    const std::string s = results[p].to_string();
    const std::string neg = (-results[p]).to_string();
    matrix[i][j] = s;
    matrix[j][i] = neg;
    rep.fail(Json{{"pair", {gens[i].label, gens[j].label}}, {"bracket", s}});
  }
  Json labels = Json::array();
  for (const auto& g : gens) labels.push_back(g.label);
  rep.trials = static_cast<int>(pairs.size());
  rep.details["labels"] = std::move(labels);
  rep.details["matrix"] = std::move(matrix);
  return rep;
}

Report commutation_matrix(const std::vector<NCPoly>& gens, const std::string& spec) {
  std::vector<NamedPoly> named;
  for (std::size_t i = 0; i < gens.size(); ++i) named.push_back({"g" + std::to_string(i), gens[i]});
  return commutation_matrix(named, spec);
}

Report cross_commutation(const std::vector<NamedPoly>& a, const std::vector<NamedPoly>& b, const std::string& spec) {
  std::vector<NamedPoly> all = a;
  all.insert(all.end(), b.begin(), b.end());
  require_common_signature(all);
  Report rep("cross_commutation", spec);
  std::vector<NCPoly> results(a.size() * b.size());
  parallel_for(results.size(), [&](std::size_t p) {
    results[p] = bracket(a[p / b.size()].value, b[p % b.size()].value);
  });
  for (std::size_t p = 0; p < results.size(); ++p) {
    if (results[p].is_zero()) continue;
    rep.fail(Json{{"pair", {a[p / b.size()].label, b[p % b.size()].label}}, {"bracket", results[p].to_string()}});
  }
  rep.trials = static_cast<int>(results.size());
  return rep;
}

}  // namespace gaudin
