#include "gaudin/poisson.hpp"

#include <random>
#include <sstream>

#include "gaudin/parallel.hpp"

namespace gaudin {

PoissonOperator::PoissonOperator(int sites, std::string name)
    : n_(sites), name_(std::move(name)), c_(static_cast<std::size_t>(sites) * sites * sites) {
  if (sites < 1) throw std::invalid_argument("operator needs N >= 1");
}

std::size_t PoissonOperator::index(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_) throw std::out_of_range("operator index out of range");
  return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
}

void PoissonOperator::add_symmetric(int i, int j, int k, const Rational& v) {
  c_[index(i, j, k)] += v;
  if (i != j) c_[index(j, i, k)] += v;
}

std::vector<Rational> PoissonOperator::block(int i, int j) const {
  std::vector<Rational> out;
  for (int k = 1; k <= n_; ++k) out.push_back(coefficient(i, j, k));
  return out;
}

std::string PoissonOperator::block_string(int i, int j) const {
  std::ostringstream os;
  bool first = true;
  for (int k = n_; k >= 1; --k) {
    const Rational& c = coefficient(i, j, k);
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << " ";
    os << "X_" << k;
    first = false;
  }
  return first ? "0" : "ad(" + os.str() + ")";
}

bool PoissonOperator::symmetric() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (block(i, j) != block(j, i)) return false;
    }
  }
  return true;
}

int theta(int n) { return n > 0 ? 1 : 0; }

Rational r_ijk(int i, int j, int k) {
  const int dij = i == j, djk = j == k, dik = i == k;
  return (k - 1) * dij * djk - theta(i - k) * dij + theta(j - i) * dik + theta(i - j) * djk;
}

PoissonOperator standard_operator(int sites) {
  PoissonOperator op(sites, "standard");
  for (int i = 1; i <= sites; ++i) op.set(i, i, i, 1);
  return op;
}

PoissonOperator limit_operator(int sites) {
  PoissonOperator op(sites, "limit-rijk");
  for (int i = 1; i <= sites; ++i) {
    for (int j = 1; j <= sites; ++j) {
      for (int k = 1; k <= sites; ++k) op.set(i, j, k, r_ijk(i, j, k));
    }
  }
  return op;
}

PoissonOperator fivesite_operator(const std::vector<Rational>& z) {
  if (z.size() != 5) throw std::invalid_argument("fivesite_operator needs five parameters");
  require_distinct(z, "parameters");
  auto d = [&](int i, int j) { return Rational(z[static_cast<std::size_t>(i - 1)] - z[static_cast<std::size_t>(j - 1)]); };
  const Rational z12 = d(1, 2), z13 = d(1, 3), z23 = d(2, 3), z34 = d(3, 4), z35 = d(3, 5), z45 = d(4, 5);
  const Rational a = z13 * z34 / z45;
  const Rational b = z13 * z35 / z45;

  PoissonOperator op(5, "fivesite");
  op.add_symmetric(1, 2, 1, z23);
  // P22 = z23 (X2 − X1) + z12 (X3 + X4 + X5)
  op.add_symmetric(2, 2, 2, z23);
  op.add_symmetric(2, 2, 1, -z23);
  for (int k = 3; k <= 5; ++k) op.add_symmetric(2, 2, k, z12);
  op.add_symmetric(2, 3, 3, -z12);
  op.add_symmetric(2, 4, 4, -z12);
  op.add_symmetric(2, 5, 5, -z12);
  op.add_symmetric(3, 4, 3, -a);
  op.add_symmetric(3, 5, 3, b);
  // P44 = a (X3 − ((z35 − z45)/z45) X4 − a X5)
  op.add_symmetric(4, 4, 3, a);
  op.add_symmetric(4, 4, 4, -a * (z35 - z45) / z45);
  op.add_symmetric(4, 4, 5, -a * a);
  // P45 = (z13/z45²)(z35² X4 + z34² X5)
  op.add_symmetric(4, 5, 4, z13 * z35 * z35 / (z45 * z45));
  op.add_symmetric(4, 5, 5, z13 * z34 * z34 / (z45 * z45));
  // P55 = −b (X3 + (z35/z45) X4 + ((z34 − z45)/z45) X5)
  op.add_symmetric(5, 5, 3, -b);
  op.add_symmetric(5, 5, 4, -b * z35 / z45);
  op.add_symmetric(5, 5, 5, -b * (z34 - z45) / z45);
  return op;
}

PoissonOperator corrupted(const PoissonOperator& op, int i) {
  PoissonOperator out(op.sites(), op.name() + "-corrupted");
  for (int a = 1; a <= op.sites(); ++a) {
    for (int b = 1; b <= op.sites(); ++b) {
      for (int k = 1; k <= op.sites(); ++k) {
        const Rational& c = op.coefficient(a, b, k);
        out.set(a, b, k, (a == i && b == i) ? Rational(-c) : c);
      }
    }
  }
  return out;
}

BracketSpec BracketSpec::standard() { return BracketSpec{}; }

BracketSpec BracketSpec::limit() {
  BracketSpec s;
  s.kind = Kind::LimitRijk;
  return s;
}

BracketSpec BracketSpec::from_operator(PoissonOperator op) {
  BracketSpec s;
  s.kind = Kind::Operator;
  s.op = std::make_shared<const PoissonOperator>(std::move(op));
  return s;
}

BracketSpec BracketSpec::pencil(const Rational& lambda, const BracketSpec& first, const Rational& mu,
                                const BracketSpec& second) {
  BracketSpec s;
  s.kind = Kind::Pencil;
  s.lambda = lambda;
  s.mu = mu;
  s.first = std::make_shared<const BracketSpec>(first);
  s.second = std::make_shared<const BracketSpec>(second);
  return s;
}

std::string BracketSpec::name() const {
  switch (kind) {
    case Kind::Standard:
      return "standard";
    case Kind::LimitRijk:
      return "limit-rijk";
    case Kind::Operator:
      return op->name();
    case Kind::Pencil:
      return "(" + lambda.get_str() + ")*" + first->name() + " + (" + mu.get_str() + ")*" + second->name();
  }
  return "";
}

PoissonOperator operator_of(const BracketSpec& spec, int sites) {
  switch (spec.kind) {
    case BracketSpec::Kind::Standard:
      return standard_operator(sites);
    case BracketSpec::Kind::LimitRijk:
      return limit_operator(sites);
    case BracketSpec::Kind::Operator:
      if (spec.op->sites() != sites) {
        throw AlgebraError("operator " + spec.op->name() + " acts on " + std::to_string(spec.op->sites()) +
                           " sites, algebra has " + std::to_string(sites));
      }
      return *spec.op;
    case BracketSpec::Kind::Pencil: {
      const PoissonOperator a = operator_of(*spec.first, sites);
      const PoissonOperator b = operator_of(*spec.second, sites);
      PoissonOperator out(sites, spec.name());
      for (int i = 1; i <= sites; ++i) {
        for (int j = 1; j <= sites; ++j) {
          for (int k = 1; k <= sites; ++k) {
            out.set(i, j, k, spec.lambda * a.coefficient(i, j, k) + spec.mu * b.coefficient(i, j, k));
          }
        }
      }
      return out;
    }
  }
  throw std::logic_error("unknown bracket kind");
}

namespace {

LetterBracket letter_bracket(const PoissonOperator& op, const AlgebraPtr& alg) {
  return [op, alg](Letter x, Letter y) {
    const Generator g = alg->generator(x);
    const Generator h = alg->generator(y);
    Terms out;
    for (int k = 1; k <= op.sites(); ++k) {
      const Rational& c = op.coefficient(g.site, h.site, k);
      if (c == 0) continue;
      if (g.col == h.row) out[Monomial{alg->letter(k, g.row, h.col)}] += c;
      if (h.col == g.row) out[Monomial{alg->letter(k, h.row, g.col)}] -= c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  };
}

void require_classical(const AlgebraPtr& alg, const char* what) {
  if (alg->quantum()) throw AlgebraError(std::string(what) + " is defined in Classical mode only");
}

class Sampler {
 public:
  Sampler(const AlgebraPtr& alg, std::uint64_t seed) : alg_(alg), rng_(seed) {}

  NCPoly coordinate() {
    std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(alg_->num_generators() - 1));
    return NCPoly::monomial(alg_, {pick(rng_)});
  }

  NCPoly quadratic() {
    std::uniform_int_distribution<int> coef(-3, 3);
    NCPoly p(alg_);
    for (int t = 0; t < 3; ++t) {
      NCPoly term = NCPoly::constant(alg_, coef(rng_));
      const int len = std::uniform_int_distribution<int>(0, 2)(rng_);
      for (int l = 0; l < len; ++l) term = term * coordinate();
      p += term;
    }
    return p;
  }

  NCPoly any(int trial) { return trial % 2 == 0 ? coordinate() : quadratic(); }

 private:
  AlgebraPtr alg_;
  std::mt19937_64 rng_;
};

}  // namespace

NCPoly bracket_eval(const BracketSpec& spec, const NCPoly& F, const NCPoly& G) {
  const AlgebraPtr& alg = F.algebra();
  require_classical(alg, "bracket_eval");
  if (G.algebra() != alg) throw AlgebraError("bracket_eval: operands from different signatures");
  if (spec.kind == BracketSpec::Kind::Standard) return poisson_bracket(F, G);
  return leibniz_bracket(F, G, letter_bracket(operator_of(spec, alg->sites()), alg));
}

Report jacobi_check(const BracketSpec& spec, const AlgebraPtr& alg, int trials, std::uint64_t seed) {
  require_classical(alg, "jacobi_check");
  Report rep("jacobi", spec.name());
  rep.trials = trials;
  rep.seed = seed;
  const LetterBracket lb = letter_bracket(operator_of(spec, alg->sites()), alg);
  auto br = [&](const NCPoly& a, const NCPoly& b) { return leibniz_bracket(a, b, lb); };
  Sampler s(alg, seed);
  for (int t = 0; t < trials; ++t) {
    const NCPoly f = s.any(t), g = s.any(t), h = s.any(t);
    const NCPoly sum = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g));
    if (!sum.is_zero()) {
      rep.fail({{"trial", t},
                {"F", f.to_string()},
                {"G", g.to_string()},
                {"H", h.to_string()},
                {"cyclic_sum", sum.to_string()}});
    }
  }
  return rep;
}

Report compatibility_check(const BracketSpec& first, const BracketSpec& second, const AlgebraPtr& alg, int trials,
                           std::uint64_t seed) {
  Report rep("compatibility", first.name() + " | " + second.name());
  rep.trials = trials;
  rep.seed = seed;
  rep.add(jacobi_check(BracketSpec::pencil(1, first, 1, second), alg, trials, seed));
  rep.add(jacobi_check(BracketSpec::pencil(1, first, -1, second), alg, trials, seed));
  return rep;
}

Report family_commutes_under(const BracketSpec& spec, const InvariantFamily& family) {
  Report rep("family_commutes", spec.name());
  const std::size_t n = family.size();
  rep.trials = static_cast<int>(n * (n - 1) / 2);
  if (n == 0) return rep;
  const AlgebraPtr alg = family.members.front().value.algebra();
  require_classical(alg, "family_commutes_under");
  const PoissonOperator op = operator_of(spec, alg->sites());
  const LetterBracket lb = letter_bracket(op, alg);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<NCPoly> values(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    values[p] = leibniz_bracket(family.members[pairs[p].first].value, family.members[pairs[p].second].value, lb);
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (values[p].is_zero()) continue;
    rep.fail({{"first", family.members[pairs[p].first].provenance.to_string()},
              {"second", family.members[pairs[p].second].provenance.to_string()},
              {"bracket", values[p].to_string()}});
  }
  rep.details["members"] = n;
  return rep;
}

Report antisymmetry_check(const BracketSpec& spec, const AlgebraPtr& alg, int trials, std::uint64_t seed) {
  require_classical(alg, "antisymmetry_check");
  Report rep("antisymmetry", spec.name());
  rep.trials = trials;
  rep.seed = seed;
  Sampler s(alg, seed);
  for (int t = 0; t < trials; ++t) {
    const NCPoly f = s.quadratic(), g = s.quadratic();
    const NCPoly sum = bracket_eval(spec, f, g) + bracket_eval(spec, g, f);
    if (!sum.is_zero()) rep.fail({{"F", f.to_string()}, {"G", g.to_string()}, {"sum", sum.to_string()}});
  }
  return rep;
}

Report leibniz_check(const BracketSpec& spec, const AlgebraPtr& alg, int trials, std::uint64_t seed) {
  require_classical(alg, "leibniz_check");
  Report rep("leibniz", spec.name());
  rep.trials = trials;
  rep.seed = seed;
  Sampler s(alg, seed);
  for (int t = 0; t < trials; ++t) {
    const NCPoly f = s.quadratic(), g = s.quadratic(), h = s.quadratic();
    const NCPoly diff = bracket_eval(spec, f, g * h) - bracket_eval(spec, f, g) * h - g * bracket_eval(spec, f, h);
    if (!diff.is_zero()) {
      rep.fail({{"F", f.to_string()}, {"G", g.to_string()}, {"H", h.to_string()}, {"defect", diff.to_string()}});
    }
  }
  return rep;
}

Report operator_comparison(const PoissonOperator& actual, const PoissonOperator& expected, const std::string& spec) {
  Report rep("operator_comparison", spec);
  if (actual.sites() != expected.sites()) {
    rep.fail({{"reason", "different sizes"}, {"actual", actual.sites()}, {"expected", expected.sites()}});
    return rep;
  }
  const int n = actual.sites();
  rep.trials = n * n;
  Json blocks = Json::array();
  for (int i = 1; i <= n; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= n; ++j) {
      row.push_back(actual.block_string(i, j));
      if (actual.block(i, j) != expected.block(i, j)) {
        rep.fail({{"block", {i, j}}, {"actual", actual.block_string(i, j)}, {"expected", expected.block_string(i, j)}});
      }
    }
    blocks.push_back(row);
  }
  rep.details["blocks"] = blocks;
  return rep;
}

}  // namespace gaudin
