#include <doctest.h>

#include "gaudin/lax.hpp"
#include "support.hpp"

using namespace gaudin;
using namespace gaudin::testing;

namespace {

NCPoly e(const AlgebraPtr& alg, int site, int a, int b) { return NCPoly::generator(alg, site, a, b); }

// Tr(X_i X_j) written out from generators.
NCPoly tr2(const AlgebraPtr& alg, int i, int j) {
  NCPoly s(alg);
  for (int a = 1; a <= alg->rank(); ++a)
    for (int b = 1; b <= alg->rank(); ++b) s += e(alg, i, a, b) * e(alg, j, b, a);
  return s;
}

void check_pairwise_poisson(const std::vector<NCPoly>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK(poisson_bracket(fam[i], fam[j]).is_zero());
}

}  // namespace

TEST_CASE("Gaudin Lax matrix entries and residues") {
  auto c = Algebra::get(1, 2, Mode::Classical);
  LaxMatrix L = gaudin_lax(c, {0, 1});
  CHECK(L(0, 0) == LaxEntry(e(c, 1, 1, 1), RatFun::pole(0)) + LaxEntry(e(c, 2, 1, 1), RatFun::pole(1)));

  auto q = Algebra::get(2, 3, Mode::Quantum);
  LaxMatrix G = gaudin_lax(q, {0, 1, 2});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(G(a, b).residue(0, 0) == e(q, 1, a + 1, b + 1));
      CHECK(G(a, b).residue(2, 0) == e(q, 3, a + 1, b + 1));
    }
  CHECK_THROWS_AS(gaudin_lax(q, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gaudin_lax(q, {0, 1}), std::invalid_argument);

  auto one = Algebra::get(2, 1, Mode::Classical);
  auto tr = trace_powers(gaudin_lax(one, {0}), 2);
  CHECK(tr[1].pole_order(0) == 2);
  CHECK(tr[1].residue(0, 0).is_zero());
  CHECK(tr[1].residue(0, 1) == tr2(one, 1, 1));
}

TEST_CASE("bending Lax matrices") {
  auto c = Algebra::get(2, 2, Mode::Classical);
  LaxMatrix B = bending_lax(c, 1);
  CHECK(B.polynomial());
  CHECK(B.poles().empty());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(B(a, b) == LaxEntry(e(c, 1, a + 1, b + 1), RatFun::z()) + LaxEntry(e(c, 2, a + 1, b + 1)));
  CHECK_THROWS_AS(bending_lax(c, 2), std::invalid_argument);
  CHECK_THROWS_AS(bending_lax(c, 0), std::invalid_argument);

  auto c4 = Algebra::get(2, 4, Mode::Classical);
  LaxMatrix B3 = bending_lax(c4, 3);
  CHECK(B3(0, 1) == LaxEntry(e(c4, 3, 1, 2), RatFun::z()) + LaxEntry(e(c4, 4, 1, 2)));
  NCPoly tr0 = B3.entries().trace().eval_z(0);
  CHECK(tr0 == e(c4, 4, 1, 1) + e(c4, 4, 2, 2));

  LaxMatrix R = bending_lax_rational(c4, 2, 0, 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(R(a, b).residue(1, 0) == e(c4, 3, a + 1, b + 1));
      CHECK(R(a, b).residue(0, 0) == e(c4, 1, a + 1, b + 1) + e(c4, 2, a + 1, b + 1));
    }
  LaxMatrix R1 = bending_lax_rational(c4, 1, 5, 7);
  CHECK(R1.same_entries(rational_lax("x", c4, {PoleBlock{{2}, 7}, PoleBlock{{1}, 5}})));
  CHECK_THROWS_AS(bending_lax_rational(c4, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("spectral invariants: worked residues") {
  auto c = Algebra::get(2, 2, Mode::Classical);
  Rational z1 = 0, z2 = 3;
  InvariantFamily fam = spectral_invariants(gaudin_lax(c, {z1, z2}), 2);
  bool found = false;
  for (const auto& m : fam.members) {
    if (m.provenance.power == 2 && m.provenance.pole && *m.provenance.pole == z1 && m.provenance.order == 0) {
      CHECK(m.value == Rational(2) / (z1 - z2) * tr2(c, 1, 2));
      found = true;
    }
  }
  CHECK(found);
  auto H = quadratic_hamiltonians(c, {z1, z2});
  CHECK(Rational(2) * H[0] == Rational(2) / (z1 - z2) * tr2(c, 1, 2));

  auto r1 = Algebra::get(1, 3, Mode::Classical);
  InvariantFamily lin = spectral_invariants(gaudin_lax(r1, {0, 1, 2}), 1);
  REQUIRE(lin.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(lin.members[static_cast<std::size_t>(i)].value == e(r1, i + 1, 1, 1));

  InvariantFamily bend = spectral_invariants(bending_lax(c, 1), 2);
  bool cluster = false;
  for (const auto& m : bend.members) {
    if (m.provenance.power == 2 && m.provenance.order == 1) {
      CHECK(m.value == Rational(2) * tr2(c, 1, 2));
      CHECK_FALSE(m.provenance.pole.has_value());
      cluster = true;
    }
  }
  CHECK(cluster);
  CHECK_THROWS_AS(spectral_invariants(gaudin_lax(Algebra::get(2, 2, Mode::Quantum), {0, 1}), 2), AlgebraError);
}

TEST_CASE("quadratic and physical Hamiltonians") {
  auto c = Algebra::get(2, 2, Mode::Classical);
  auto H = quadratic_hamiltonians(c, {1, 4});
  CHECK(H[0] == -H[1]);
  CHECK(H[0] == rational(-1, 3) * tr2(c, 1, 2));
  CHECK(physical_hamiltonian(c) == Rational(2) * tr2(c, 1, 2));

  for (Mode mode : {Mode::Quantum, Mode::Classical}) {
    auto a = Algebra::get(2, 3, mode);
    auto hs = quadratic_hamiltonians(a, {0, 1, 2});
    CHECK((hs[0] + hs[1] + hs[2]).is_zero());
    for (const auto& h : hs) CHECK(bracket(h, physical_hamiltonian(a)).is_zero());
  }

  auto r1 = Algebra::get(1, 3, Mode::Quantum);
  NCPoly expected = Rational(2) * (e(r1, 1, 1, 1) * e(r1, 2, 1, 1) + e(r1, 1, 1, 1) * e(r1, 3, 1, 1) +
                                   e(r1, 2, 1, 1) * e(r1, 3, 1, 1));
  CHECK(physical_hamiltonian(r1) == expected);
  CHECK_THROWS_AS(physical_hamiltonian(Algebra::get(2, 1, Mode::Classical)), std::invalid_argument);
}

TEST_CASE("property: spectral invariants Poisson-commute and are Cartan invariant") {
  for (int r : {2, 3}) {
    for (int N : {2, 3}) {
      auto c = Algebra::get(r, N, Mode::Classical);
      std::vector<Rational> poles;
      for (int i = 0; i < N; ++i) poles.push_back(i * i + 1);
      auto fam = spectral_invariants(gaudin_lax(c, poles), r).values();
      CAPTURE(r);
      CAPTURE(N);
      check_pairwise_poisson(fam);
      for (const auto& d : diagonal_generators(c))
        for (const auto& m : fam) CHECK(poisson_bracket(d, m).is_zero());
    }
  }
}

TEST_CASE("property: quadratic Hamiltonians commute in the enveloping algebra") {
  for (int N : {3, 4}) {
    auto q = Algebra::get(2, N, Mode::Quantum);
    std::vector<Rational> poles;
    for (int i = 0; i < N; ++i) poles.push_back(rational(2 * i + 1, 3));
    auto H = quadratic_hamiltonians(q, poles);
    for (std::size_t i = 0; i < H.size(); ++i)
      for (std::size_t j = i + 1; j < H.size(); ++j) CHECK(commutator(H[i], H[j]).is_zero());
  }
}

TEST_CASE("rank-one residues are central") {
  auto r1 = Algebra::get(1, 4, Mode::Classical);
  auto fam = spectral_invariants(gaudin_lax(r1, {0, 1, 2, 3}), 1).values();
  Rng rng(4);
  for (const auto& m : fam) CHECK(poisson_bracket(m, random_poly(r1, rng, 3)).is_zero());
}
