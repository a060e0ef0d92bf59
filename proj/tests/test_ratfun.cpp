#include <doctest.h>

#include "gaudin/diffop.hpp"
#include "gaudin/ratfun.hpp"
#include "support.hpp"

using namespace gaudin;
using namespace gaudin::testing;

namespace {

RatFun z() { return RatFun::z(); }
RatFun c(long n, long d = 1) { return RatFun(rational(n, d)); }

}  // namespace

TEST_CASE("rational function arithmetic is canonical") {
  RatFun f = RatFun::pole(1) + RatFun::pole(-1);
  CHECK(f == RatFun(UPoly(std::vector<Rational>{0, 2}), UPoly(std::vector<Rational>{-1, 0, 1})));
  CHECK(f.to_string() == "(2*z)/(z^2 - 1)");
  CHECK((f * RatFun()).is_zero());
  RatFun g = (z() * z() - c(1)) / (z() - c(1));
  CHECK(g == z() + c(1));
  CHECK(g.is_polynomial());
  CHECK_THROWS_AS(f / RatFun(), std::domain_error);
  // Denominator normalized to monic.
  RatFun h(UPoly(Rational(3)), UPoly(std::vector<Rational>{2, 4}));
  CHECK(h.denominator() == UPoly(std::vector<Rational>{rational(1, 2), 1}));
  CHECK(h.numerator() == UPoly(rational(3, 4)));
}

TEST_CASE("residues and Laurent coefficients") {
  CHECK(residue(RatFun::pole(2), 2, 0) == 1);
  CHECK(residue(RatFun::pole(2, 2), 2, 1) == 1);
  CHECK(residue(RatFun::pole(0, 2), 0, 0) == 0);
  CHECK(residue(RatFun::pole(3), 2, 0) == 0);
  // (z+1)/(z (z-1)): simple poles with residues -1 at 0 and 2 at 1.
  RatFun f = (z() + c(1)) / (z() * (z() - c(1)));
  CHECK(residue(f, 0, 0) == -1);
  CHECK(residue(f, 1, 0) == 2);
  CHECK(residue(f, 1, 1) == 0);
  CHECK(f.pole_order(1) == 1);
  CHECK(f.pole_order(5) == 0);
  // Negative orders read off polynomial coefficients: z^a coefficient = res z^{-(a+1)} f.
  RatFun p = c(3) + c(5) * z() + c(-2) * z() * z();
  CHECK(residue(p, 0, -1) == 3);
  CHECK(residue(p, 0, -2) == 5);
  CHECK(residue(p, 0, -3) == -2);
  // Taylor coefficients at a regular point: 1/(z-1) at 0 is -1 - z - z^2 - ...
  CHECK(RatFun::pole(1).laurent_coefficient(0, 3) == -1);
}

TEST_CASE("evaluation reports the offending pole") {
  RatFun f = RatFun::pole(rational(1, 2));
  CHECK(f.evaluate(3) == rational(2, 5));
  try {
    (void)f.evaluate(rational(1, 2));
    FAIL("expected PoleError");
  } catch (const PoleError& err) {
    CHECK(err.pole() == rational(1, 2));
    CHECK(std::string(err.what()).find("1/2") != std::string::npos);
  }
}

TEST_CASE("property: canonical form identities on random rational functions") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    RatFun a = random_ratfun(rng, 4), b = random_ratfun(rng, 4);
    CHECK((a - a).is_zero());
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a / b) * (b / a) == RatFun(1));
    CHECK(a * b == b * a);
    CHECK(((a + b) * a) == a * a + b * a);
    CHECK(a.denominator().leading() == 1);
    CHECK(gcd(a.numerator(), a.denominator()).degree() == 0);
    // Laurent data is consistent with multiplication by (z-p)^k.
    Rational p = small_rational(rng);
    int order = a.pole_order(p);
    RatFun shifted = a * RatFun(UPoly::linear_factor(p), UPoly(Rational(1)));
    CHECK(shifted.pole_order(p) == std::max(order - 1, 0));
  }
}

TEST_CASE("differential operators: Leibniz rule and products") {
  auto alg = Algebra::get(1, 1, Mode::Quantum);
  DiffOpEntry d = DiffOpEntry::d(alg);
  DiffOpEntry inv = DiffOpEntry::constant(alg, RatFun::pole(0));
  DiffOpEntry lhs = d * inv;
  CHECK(lhs.coefficient(1) == LaxEntry::constant(alg, RatFun::pole(0)));
  CHECK(lhs.coefficient(0) == LaxEntry::constant(alg, -RatFun::pole(0, 2)));

  DiffOpEntry A = d - inv;
  DiffOpEntry sq = A * A;
  CHECK(sq.order() == 2);
  CHECK(sq.coefficient(2) == LaxEntry::constant(alg, RatFun(1)));
  CHECK(sq.coefficient(1) == LaxEntry::constant(alg, c(-2) * RatFun::pole(0)));
  CHECK(sq.coefficient(0) == LaxEntry::constant(alg, c(2) * RatFun::pole(0, 2)));
  auto at1 = sq.eval_z(1);
  REQUIRE(at1.size() == 3);
  CHECK(at1[0] == NCPoly::constant(alg, 2));
  CHECK(at1[1] == NCPoly::constant(alg, -2));
  CHECK(at1[2] == NCPoly::constant(alg, 1));

  CHECK(A * DiffOpEntry::constant(alg, RatFun(1)) == A);
}

TEST_CASE("evaluating Lax entries") {
  auto alg = Algebra::get(2, 1, Mode::Quantum);
  LaxEntry e(NCPoly::generator(alg, 1, 1, 1), RatFun::pole(1));
  CHECK(e.eval_z(3) == rational(1, 2) * NCPoly::generator(alg, 1, 1, 1));
  CHECK_THROWS_AS(e.eval_z(1), PoleError);
  CHECK(e.residue(1, 0) == NCPoly::generator(alg, 1, 1, 1));
}

namespace {

DiffOpEntry random_diffop(const AlgebraPtr& alg, Rng& rng) {
  DiffOpEntry out(alg);
  for (int k = 0; k <= 2; ++k) {
    if (uniform(rng, 0, 2) == 0) continue;
    RatFun f = RatFun(small_rational(rng)) * RatFun::pole(uniform(rng, 0, 2), uniform(rng, 0, 2)) +
               RatFun(small_rational(rng));
    LaxEntry coeff(random_poly(alg, rng, 1, 2), f);
    out += DiffOpEntry(coeff) * DiffOpEntry::d(alg, k);
  }
  return out;
}

}  // namespace

TEST_CASE("property: differential operator products are associative") {
  Rng rng(77);
  auto alg = Algebra::get(2, 1, Mode::Quantum);
  for (int t = 0; t < 40; ++t) {
    DiffOpEntry a = random_diffop(alg, rng), b = random_diffop(alg, rng), c3 = random_diffop(alg, rng);
    CHECK((a * b) * c3 == a * (b * c3));
  }
}

TEST_CASE("property: [d, f] = f' for random rational functions") {
  Rng rng(5);
  auto alg = Algebra::get(1, 1, Mode::Quantum);
  DiffOpEntry d = DiffOpEntry::d(alg);
  for (int t = 0; t < 50; ++t) {
    RatFun f = random_ratfun(rng, 3);
    DiffOpEntry F = DiffOpEntry::constant(alg, f);
    CHECK(diffop_commutator(d, F) == DiffOpEntry::constant(alg, f.derivative()));
  }
}
