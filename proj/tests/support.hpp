#pragma once

// Shared generators and independent oracles for the unit tests.

#include <doctest.h>

#include <random>
#include <vector>

#include "gaudin/ncalgebra.hpp"
#include "gaudin/ratfun.hpp"

namespace gaudin::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng) {
  int num = uniform(rng, -4, 4);
  int den = uniform(rng, 1, 3);
  return rational(num, den);
}

inline Rational nonzero_rational(Rng& rng) {
  Rational q;
  while (q == 0) q = small_rational(rng);
  return q;
}

inline NCPoly random_generator(const AlgebraPtr& alg, Rng& rng) {
  return NCPoly::generator(alg, uniform(rng, 1, alg->sites()), uniform(rng, 1, alg->rank()),
                           uniform(rng, 1, alg->rank()));
}

/// Random element with up to `terms` words of length ≤ max_degree.
inline NCPoly random_poly(const AlgebraPtr& alg, Rng& rng, int max_degree, int terms = 3) {
  NCPoly p(alg);
  for (int t = 0; t < terms; ++t) {
    NCPoly w = NCPoly::constant(alg, nonzero_rational(rng));
    int len = uniform(rng, 0, max_degree);
    for (int i = 0; i < len; ++i) w = w * random_generator(alg, rng);
    p += w;
  }
  return p;
}

/// Random integer point of gl(r)^N indexed by Letter.
inline std::vector<Rational> random_point(const AlgebraPtr& alg, Rng& rng, int bound = 9) {
  std::vector<Rational> x(alg->num_generators());
  for (auto& v : x) v = uniform(rng, -bound, bound);
  return x;
}

/// Random rational function with numerator/denominator degree ≤ deg and rational coefficients.
inline RatFun random_ratfun(Rng& rng, int deg) {
  std::vector<Rational> n, d;
  for (int i = 0; i <= uniform(rng, 0, deg); ++i) n.push_back(small_rational(rng));
  for (int i = 0; i <= uniform(rng, 0, deg); ++i) d.push_back(small_rational(rng));
  UPoly den(d);
  if (den.is_zero()) den = UPoly(Rational(1));
  return RatFun(UPoly(n), den);
}

// ------------------------------------------------------------------- oracles

/// Word-level straightening with no memoization: repeatedly fixes the first
/// descent using only the gl(r) commutation relation. Independent of Algebra's
/// multiply_monomials.
Terms naive_normal_form(const AlgebraPtr& alg, const std::vector<Letter>& word);

/// Product of two elements computed by concatenating words and calling naive_normal_form.
NCPoly naive_multiply(const NCPoly& p, const NCPoly& q);

/// Exact image under the tensor product of fundamental representations
/// (r^N × r^N rational matrix, row-major).
std::vector<Rational> fundamental_rep(const NCPoly& p);

}  // namespace gaudin::testing

namespace doctest {
template <>
struct StringMaker<gaudin::NCPoly> {
  static String convert(const gaudin::NCPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<gaudin::Rational> {
  static String convert(const gaudin::Rational& q) { return q.get_str().c_str(); }
};
}  // namespace doctest
