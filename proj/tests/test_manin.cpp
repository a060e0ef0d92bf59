#include <doctest.h>

#include "gaudin/manin.hpp"
#include "support.hpp"

using namespace gaudin;
using namespace gaudin::testing;

namespace {

NCPoly e(const AlgebraPtr& alg, int site, int a, int b) { return NCPoly::generator(alg, site, a, b); }

// M_ij = Σ_s α_i^{(s)} A_j^{(s)} + c_ij with A_j^{(s)} supported on site s. Columns commute
// because different sites commute, and the cross condition holds term by term.
ScalarMatrix manin_family(const AlgebraPtr& alg, int n, Rng& rng, bool constant_first_row) {
  ScalarMatrix M(n, NCPoly(alg));
  for (int s = 1; s <= alg->sites(); ++s) {
    std::vector<NCPoly> A;
    for (int j = 0; j < n; ++j) A.push_back(e(alg, s, uniform(rng, 1, alg->rank()), uniform(rng, 1, alg->rank())) +
                                            NCPoly::constant(alg, small_rational(rng)));
    for (int i = 0; i < n; ++i) {
      Rational alpha = (constant_first_row && i == 0) ? Rational(0) : nonzero_rational(rng);
      for (int j = 0; j < n; ++j) M(i, j) += alpha * A[static_cast<std::size_t>(j)];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) += NCPoly::constant(alg, small_rational(rng));
  if (constant_first_row) M(0, 0) += NCPoly::constant(alg, 7);  // keep the pivot away from zero
  return M;
}

ScalarMatrix commutative_matrix(const AlgebraPtr& alg, int n, Rng& rng) {
  ScalarMatrix M(n, NCPoly(alg));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = random_poly(alg, rng, 1, 2);
  return M;
}

DiffOpMatrix one_site_operator(int r, const Rational& pole) {
  auto q = Algebra::get(r, 1, Mode::Quantum);
  return manin_operator(gaudin_lax(q, {pole}));
}

// [[z, ∂], [1, z]] over gl(1) (all generators unused).
DiffOpMatrix weyl_control() {
  auto alg = Algebra::get(1, 1, Mode::Quantum);
  DiffOpMatrix M(2, DiffOpEntry(alg));
  M(0, 0) = DiffOpEntry::constant(alg, RatFun::z());
  M(0, 1) = DiffOpEntry::d(alg);
  M(1, 0) = DiffOpEntry::constant(alg, RatFun(1));
  M(1, 1) = DiffOpEntry::constant(alg, RatFun::z());
  return M;
}

// [[∂, z], [1, z]]: columns commute, cross condition fails ([∂, z] = 1 vs [1, z] = 0).
DiffOpMatrix cross_control() {
  auto alg = Algebra::get(1, 1, Mode::Quantum);
  DiffOpMatrix M(2, DiffOpEntry(alg));
  M(0, 0) = DiffOpEntry::d(alg);
  M(0, 1) = DiffOpEntry::constant(alg, RatFun::z());
  M(1, 0) = DiffOpEntry::constant(alg, RatFun(1));
  M(1, 1) = DiffOpEntry::constant(alg, RatFun::z());
  return M;
}

}  // namespace

TEST_CASE("Manin predicate") {
  Rng rng(1);
  auto c = Algebra::get(2, 2, Mode::Classical);
  CHECK(is_manin(commutative_matrix(c, 3, rng)));

  for (int N : {2, 3}) {
    auto q = Algebra::get(2, N, Mode::Quantum);
    std::vector<Rational> poles;
    for (int i = 0; i < N; ++i) poles.push_back(i);
    CHECK(is_manin(manin_operator(gaudin_lax(q, poles))));
  }
  auto q3 = Algebra::get(3, 2, Mode::Quantum);
  CHECK(is_manin(manin_operator(gaudin_lax(q3, {0, 1}))));

  auto v = manin_violation(weyl_control());
  REQUIRE(v.has_value());
  CHECK(v->condition == "column");
  CHECK(v->j == 2);
  CHECK(manin_report(weyl_control()).witnesses.size() == 1);
  auto cross = manin_violation(cross_control());
  REQUIRE(cross.has_value());
  CHECK(cross->condition == "cross");
  CHECK(cross->lhs == "([1])");
  CHECK(cross->rhs == "0");

  // The plain matrix of generators of one gl(2) site is not Manin: [e11, e21] = -e21.
  auto q1 = Algebra::get(2, 1, Mode::Quantum);
  ScalarMatrix E(2, NCPoly(q1));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) E(a, b) = e(q1, 1, a + 1, b + 1);
  CHECK_FALSE(is_manin(E));

  auto q2 = Algebra::get(2, 3, Mode::Quantum);
  for (int t = 0; t < 5; ++t) CHECK(is_manin(manin_family(q2, 3, rng, t % 2 == 0)));
}

TEST_CASE("column determinant") {
  auto c = Algebra::get(2, 1, Mode::Classical);
  ScalarMatrix M(2, NCPoly(c));
  M(0, 0) = e(c, 1, 1, 1);
  M(0, 1) = e(c, 1, 1, 2);
  M(1, 0) = e(c, 1, 2, 1);
  M(1, 1) = e(c, 1, 2, 2);
  CHECK(col_det(M) == M(0, 0) * M(1, 1) - M(1, 0) * M(0, 1));

  auto r1 = Algebra::get(1, 2, Mode::Quantum);
  LaxMatrix L1 = gaudin_lax(r1, {0, 1});
  DiffOpMatrix D1 = manin_operator(L1);
  CHECK(col_det(D1) == DiffOpEntry::d(r1) - DiffOpEntry(L1(0, 0)));

  DiffOpMatrix D = one_site_operator(2, 0);
  DiffOpEntry first = D(0, 0) * D(1, 1) - D(1, 0) * D(0, 1);
  DiffOpEntry second = D(1, 1) * D(0, 0) - D(0, 1) * D(1, 0);
  CHECK(col_det(D) == first);
  CHECK(col_det(D, {1, 0}) == second);
  CHECK(first == second);
  auto q = D.zero().algebra();
  CHECK(col_det(D).coefficient(2) == LaxEntry::constant(q, RatFun(1)));
  CHECK(col_det(D).coefficient(1) == LaxEntry(-(e(q, 1, 1, 1) + e(q, 1, 2, 2)), RatFun::pole(0)));

  CHECK_THROWS_AS(col_det(D, {0, 0}), std::invalid_argument);
}

TEST_CASE("column-order invariance") {
  Rng rng(2);
  auto c = Algebra::get(2, 2, Mode::Classical);
  CHECK(column_order_invariance(commutative_matrix(c, 3, rng)).pass);
  auto q = Algebra::get(2, 2, Mode::Quantum);
  Report rep = column_order_invariance(manin_operator(gaudin_lax(q, {0, 1})));
  CHECK(rep.pass);
  CHECK(rep.trials == 2);
  auto q3 = Algebra::get(2, 3, Mode::Quantum);
  Report rep3 = column_order_invariance(manin_family(q3, 3, rng, false));
  CHECK(rep3.pass);
  CHECK(rep3.trials == 6);
  // Not every non-Manin matrix breaks invariance: both orders give z^2 - d here.
  CHECK(column_order_invariance(weyl_control()).pass);
  Report control = column_order_invariance(cross_control());
  CHECK_FALSE(control.pass);
  CHECK(control.witnesses.size() == 1);
}

TEST_CASE("Cramer, Schur and Cayley-Hamilton on derivation-free Manin matrices") {
  Rng rng(3);
  auto q = Algebra::get(2, 2, Mode::Quantum);
  for (int t = 0; t < 4; ++t) {
    ScalarMatrix M = manin_family(q, 2 + t % 2, rng, true);
    REQUIRE(is_manin(M));
    Report suite = manin_property_suite(M);
    CAPTURE(suite.to_json().dump());
    CHECK(suite.pass);
    CHECK_FALSE(suite.parts[2].skipped);
    CHECK(suite.parts[3].details["placement"] == "left");
  }
  auto c = Algebra::get(2, 2, Mode::Classical);
  ScalarMatrix K = commutative_matrix(c, 3, rng);
  CHECK(cramer_check(K).pass);
  CHECK(cayley_hamilton_check(K).pass);
  // Non-constant pivot blocks are skipped, not failed.
  Report s = schur_check(K, 1);
  CHECK(s.skipped);
}

TEST_CASE("Cramer on differential-operator Manin matrices") {
  Report suite = manin_property_suite(one_site_operator(2, 0));
  CHECK(suite.pass);
  CHECK(suite.parts[2].skipped);
  CHECK(suite.parts[3].skipped);
  auto q = Algebra::get(2, 2, Mode::Quantum);
  CHECK(cramer_check(manin_operator(gaudin_lax(q, {0, 1}))).pass);
}

TEST_CASE("Newton identities") {
  auto c = Algebra::get(1, 1, Mode::Classical);
  ScalarMatrix D(2, NCPoly(c));
  D(0, 0) = NCPoly::constant(c, 2);
  D(1, 1) = NCPoly::constant(c, 3);
  auto sigma = elementary_coefficients(D);
  auto tau = power_traces(D);
  CHECK(sigma[1] == NCPoly::constant(c, 5));
  CHECK(sigma[2] == NCPoly::constant(c, 6));
  CHECK(tau[2] == NCPoly::constant(c, 13));
  CHECK(newton_check(D).pass);

  Rng rng(4);
  auto cl = Algebra::get(2, 2, Mode::Classical);
  for (int n = 1; n <= 4; ++n) CHECK(newton_check(commutative_matrix(cl, n, rng)).pass);

  for (int r : {2, 3}) {
    Report rep = newton_check(one_site_operator(r, 0));
    CAPTURE(rep.to_json().dump());
    CHECK(rep.pass);
  }
  auto q = Algebra::get(2, 2, Mode::Quantum);
  CHECK(newton_check(manin_family(q, 3, rng, false)).pass);
  CHECK(newton_check(manin_operator(gaudin_lax(q, {0, 1}))).pass);
}

TEST_CASE("quantum powers") {
  auto r1 = Algebra::get(1, 1, Mode::Quantum);
  LaxMatrix L = gaudin_lax(r1, {0});
  auto P = quantum_powers(L, 2);
  CHECK(P[1] == L.entries());
  CHECK(P[2](0, 0) == LaxEntry(e(r1, 1, 1, 1) * e(r1, 1, 1, 1), RatFun::pole(0, 2)) +
                          LaxEntry(e(r1, 1, 1, 1), RatFun::pole(0, 2)));
  // With the generator replaced by 1 this is 2/z^2.
  auto scalar = Algebra::get(1, 1, Mode::Classical);
  SquareMatrix<LaxEntry> one(1, LaxEntry::constant(scalar, RatFun::pole(0)));
  LaxMatrix S("scalar", scalar, one, {Pole{0, 1}}, false);
  CHECK(quantum_powers(S, 2)[2](0, 0) == LaxEntry::constant(scalar, RatFun(2) * RatFun::pole(0, 2)));
}

TEST_CASE("Talalaev generators") {
  auto r1 = Algebra::get(1, 2, Mode::Quantum);
  LaxMatrix L1 = gaudin_lax(r1, {0, 1});
  TalalaevOutput t1 = talalaev_generators(L1);
  REQUIRE(t1.qh.size() == 2);
  CHECK(t1.qh[0] == -L1(0, 0));
  CHECK(t1.qh[1] == LaxEntry::constant(r1, RatFun(1)));

  auto q = Algebra::get(2, 2, Mode::Quantum);
  LaxMatrix L = gaudin_lax(q, {0, 1});
  TalalaevOutput t = talalaev_generators(L);
  REQUIRE(t.qh.size() == 3);
  CHECK(t.qh[2] == LaxEntry::constant(q, RatFun(1)));
  NCPoly a = t.qh[0].eval_z(5), b = t.qh[0].eval_z(7), c = t.qh[1].eval_z(7);
  CHECK(commutator(a, b).is_zero());
  CHECK(commutator(a, c).is_zero());
  Report rep = commutation_matrix(evaluate_talalaev(t, {5, 7, 11}));
  CAPTURE(rep.to_json().dump());
  CHECK(rep.pass);

  // Symbol of QH_0(u) is det L(u) of the classical Lax matrix.
  auto cl = Algebra::get(2, 2, Mode::Classical);
  LaxMatrix Lc = gaudin_lax(cl, {0, 1});
  NCPoly det_cl = col_det(Lc.entries().map([](const LaxEntry& x) { return x.eval_z(5); }));
  CHECK(classical_limit(a) == det_cl);
}

TEST_CASE("commutation matrix controls") {
  auto q = Algebra::get(2, 1, Mode::Quantum);
  Report bad = commutation_matrix(std::vector<NCPoly>{e(q, 1, 1, 1), e(q, 1, 1, 2)});
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witnesses.size() == 1);
  CHECK(bad.details["matrix"][0][1] == "1 * e[1,2]@1");
  CHECK(bad.details["matrix"][1][0] == "-1 * e[1,2]@1");
  CHECK(commutation_matrix(std::vector<NCPoly>{e(q, 1, 1, 1)}).pass);
  auto c = Algebra::get(2, 1, Mode::Classical);
  CHECK_THROWS_AS(commutation_matrix(std::vector<NCPoly>{e(q, 1, 1, 1), e(c, 1, 1, 1)}), AlgebraError);
}

TEST_CASE("quantum trace normalization is recorded") {
  auto q = Algebra::get(2, 2, Mode::Quantum);
  LaxMatrix L = gaudin_lax(q, {0, 1});
  auto t = talalaev_generators(L);
  auto ratios = qtr_normalization(L, t);
  REQUIRE(ratios.size() == 2);
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    CAPTURE(k);
    CHECK(ratios[k].has_value());
    if (ratios[k]) MESSAGE("QTr^k_k / Tr L^[k] = " << ratios[k]->get_str());
  }
}
