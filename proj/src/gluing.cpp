#include "gaudin/gluing.hpp"

#include <map>
#include <random>
#include <set>

#include "gaudin/linalg.hpp"
#include "gaudin/parallel.hpp"

namespace gaudin {

InvariantFamily LimitFamily::invariants() const {
  InvariantFamily fam;
  for (const auto& L : matrices) fam.append(spectral_invariants(L, L.size()));
  return fam;
}

namespace {

void collect_locations(const PatternNode& n, std::set<Rational>& used) {
  if (n.location) used.insert(*n.location);
  for (const auto& c : n.children) collect_locations(c, used);
}

void assign_locations(PatternNode& n, std::set<Rational>& used, Rational& next, bool is_root) {
  if (n.is_leaf()) return;
  if (!is_root && !n.location) {
    while (used.count(next)) next += 1;
    n.location = next;
    used.insert(next);
  }
  for (auto& c : n.children) assign_locations(c, used, next, false);
}

void post_order(const PatternNode& n, const std::vector<Rational>& poles, std::vector<CollisionNode>& out) {
  if (n.is_leaf()) return;
  for (const auto& c : n.children) post_order(c, poles, out);
  CollisionNode node;
  node.label = n.to_string();
  for (const auto& c : n.children) {
    node.child_sites.push_back(c.leaves());
    node.positions.push_back(c.is_leaf() ? poles[static_cast<std::size_t>(c.leaf - 1)] : *c.location);
  }
  if (n.children.size() == 2) node.positions = {poles[0], poles[1]};
  require_distinct(node.positions, "positions in node " + node.label);
  out.push_back(std::move(node));
}

}  // namespace

std::vector<CollisionNode> collision_nodes(const GluingPattern& pattern, const std::vector<Rational>& poles) {
  if (static_cast<int>(poles.size()) != pattern.sites) {
    throw std::invalid_argument("pattern over " + std::to_string(pattern.sites) + " sites needs as many poles");
  }
  require_distinct(poles, "poles");
  PatternNode root = pattern.root;
  std::set<Rational> used(poles.begin(), poles.end());
  collect_locations(root, used);
  Rational next = 0;
  assign_locations(root, used, next, true);
  std::vector<CollisionNode> out;
  post_order(root, poles, out);
  return out;
}

LaxMatrix node_lax(const AlgebraPtr& alg, const CollisionNode& node) {
  std::vector<PoleBlock> blocks;
  for (std::size_t j = 0; j < node.child_sites.size(); ++j) blocks.push_back(PoleBlock{node.child_sites[j], node.positions[j]});
  return rational_lax("node" + node.label, alg, blocks);
}

LimitFamily elementary_glue(const AlgebraPtr& alg, const std::vector<Rational>& fixed,
                            const std::vector<Rational>& collapsing, const Rational& w) {
  const int N = alg->sites();
  const int k = static_cast<int>(fixed.size());
  if (collapsing.empty() || k + static_cast<int>(collapsing.size()) != N) {
    throw std::invalid_argument("elementary_glue needs k fixed and N - k >= 1 collapsing positions with N = " +
                                std::to_string(N));
  }
  std::vector<Rational> outer = fixed;
  outer.push_back(w);
  require_distinct(outer, "points among the fixed poles and w");
  require_distinct(collapsing, "collapsing positions");

  CollisionNode inner, top;
  std::vector<int> tail;
  for (int i = k + 1; i <= N; ++i) {
    inner.child_sites.push_back({i});
    inner.positions.push_back(collapsing[static_cast<std::size_t>(i - k - 1)]);
    tail.push_back(i);
  }
  for (int i = 1; i <= k; ++i) {
    top.child_sites.push_back({i});
    top.positions.push_back(fixed[static_cast<std::size_t>(i - 1)]);
  }
  top.child_sites.push_back(tail);
  top.positions.push_back(w);
  inner.label = "L1";
  top.label = "L2";

  LimitFamily fam;
  fam.matrices.push_back(node_lax(alg, inner));
  fam.matrices.push_back(node_lax(alg, top));
  fam.nodes = {inner, top};
  return fam;
}

LimitFamily iterate_pattern(const AlgebraPtr& alg, const GluingPattern& pattern, const std::vector<Rational>& poles) {
  if (pattern.sites != alg->sites()) throw std::invalid_argument("pattern and algebra disagree on N");
  LimitFamily fam;
  fam.nodes = collision_nodes(pattern, poles);
  for (const auto& node : fam.nodes) fam.matrices.push_back(node_lax(alg, node));
  return fam;
}

std::vector<NamedPoly> named(const InvariantFamily& family) {
  std::vector<NamedPoly> out;
  for (const auto& m : family.members) out.push_back({m.provenance.to_string(), m.value});
  return out;
}

namespace {

std::vector<std::vector<NCPoly>> gradients(const InvariantFamily& fam, const AlgebraPtr& alg) {
  std::vector<std::vector<NCPoly>> out(fam.size());
  parallel_for(fam.size(), [&](std::size_t i) {
    for (Letter x = 0; x < alg->num_generators(); ++x) out[i].push_back(partial_derivative(fam.members[i].value, x));
  });
  return out;
}

int jacobian_rank(const std::vector<std::vector<NCPoly>>& grads, const std::vector<Rational>& point) {
  QMatrix J;
  for (const auto& row : grads) {
    std::vector<Rational> values;
    for (const auto& d : row) values.push_back(evaluate(d, point));
    J.push_back(std::move(values));
  }
  return J.empty() ? 0 : rank(std::move(J));
}

}  // namespace

Report rank_completeness_check(const InvariantFamily& family, const InvariantFamily& generic, int trials,
                               std::uint64_t seed) {
  Report rep("rank_completeness");
  rep.trials = trials;
  rep.seed = seed;
  if (family.members.empty() || generic.members.empty()) {
    rep.fail({{"reason", "empty family"}});
    return rep;
  }
  const AlgebraPtr alg = family.members.front().value.algebra();
  if (alg != generic.members.front().value.algebra()) throw AlgebraError("rank_completeness_check: mixed signatures");
  if (alg->quantum()) throw AlgebraError("rank_completeness_check is classical");
  const auto gf = gradients(family, alg);
  const auto gg = gradients(generic, alg);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  Json ranks = Json::array();
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> point(alg->num_generators());
    for (auto& v : point) v = dist(rng);
    const int a = jacobian_rank(gf, point);
    const int b = jacobian_rank(gg, point);
    ranks.push_back({{"limit", a}, {"generic", b}});
    if (a != b) {
      Json pt = Json::array();
      for (const auto& v : point) pt.push_back(v.get_str());
      rep.fail({{"trial", t}, {"limit_rank", a}, {"generic_rank", b}, {"point", pt}});
    }
  }
  rep.details["ranks"] = ranks;
  rep.details["members"] = {{"limit", family.size()}, {"generic", generic.size()}};
  return rep;
}

Report hg_membership_check(const InvariantFamily& family) {
  Report rep("hg_membership");
  rep.trials = 1;
  if (family.members.empty()) {
    rep.fail({{"reason", "empty family"}});
    return rep;
  }
  const AlgebraPtr alg = family.members.front().value.algebra();
  if (alg->quantum()) throw AlgebraError("hg_membership_check is classical");
  std::vector<NCPoly> basis{NCPoly::constant(alg, 1)};
  std::vector<std::string> labels{"1"};
  std::vector<const Invariant*> linear;
  for (const auto& m : family.members) {
    const int d = m.value.degree();
    if (d >= 1 && d <= 2) {
      basis.push_back(m.value);
      labels.push_back(m.provenance.to_string());
    }
    if (d == 1) linear.push_back(&m);
  }
  for (std::size_t i = 0; i < linear.size(); ++i) {
    for (std::size_t j = i; j < linear.size(); ++j) {
      basis.push_back(linear[i]->value * linear[j]->value);
      labels.push_back("(" + linear[i]->provenance.to_string() + ") * (" + linear[j]->provenance.to_string() + ")");
    }
  }
  const NCPoly hg = physical_hamiltonian(alg);
  rep.details["target"] = hg.to_string();
  rep.details["candidates"] = basis.size();
  auto coeffs = express_in_span(hg, basis);
  if (!coeffs) {
    rep.fail({{"reason", "H_G is not in the span of the degree-2 slice"}});
    return rep;
  }
  Json combo = Json::array();
  for (std::size_t i = 0; i < coeffs->size(); ++i) {
    if ((*coeffs)[i] != 0) combo.push_back({{"coefficient", (*coeffs)[i].get_str()}, {"term", labels[i]}});
  }
  rep.details["combination"] = combo;
  return rep;
}

NCPoly spread_map(const NCPoly& p, const AlgebraPtr& target, const std::vector<std::vector<int>>& blocks) {
  const AlgebraPtr& src = p.algebra();
  if (src->rank() != target->rank() || src->mode() != target->mode()) {
    throw AlgebraError("spread_map: rank or mode mismatch between " + to_string(src->signature()) + " and " +
                       to_string(target->signature()));
  }
  if (static_cast<int>(blocks.size()) != src->sites()) throw AlgebraError("spread_map: need one block per source site");
  std::set<int> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw AlgebraError("spread_map: empty block");
    for (int i : b) {
      if (i < 1 || i > target->sites()) throw AlgebraError("spread_map: target site out of range");
      if (!seen.insert(i).second) throw AlgebraError("spread_map: blocks overlap at site " + std::to_string(i));
    }
  }
  return substitute(p, target, [&](Letter x) {
    const Generator g = src->generator(x);
    NCPoly s(target);
    for (int i : blocks[static_cast<std::size_t>(g.site - 1)]) s += NCPoly::generator(target, i, g.row, g.col);
    return s;
  });
}

NCPoly quantum_D_map(const NCPoly& p, const AlgebraPtr& target) {
  const int s = p.algebra()->sites();
  const int N = target->sites();
  if (!target->quantum() || !p.algebra()->quantum()) throw AlgebraError("quantum_D_map needs Quantum mode");
  if (s > N) throw AlgebraError("quantum_D_map: source has more sites than the target");
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i < s; ++i) blocks.push_back({i});
  std::vector<int> tail;
  for (int i = s; i <= N; ++i) tail.push_back(i);
  blocks.push_back(tail);
  return spread_map(p, target, blocks);
}

NCPoly quantum_I_map(const NCPoly& p, const AlgebraPtr& target) {
  const int s = p.algebra()->sites();
  const int N = target->sites();
  if (!target->quantum() || !p.algebra()->quantum()) throw AlgebraError("quantum_I_map needs Quantum mode");
  if (s > N) throw AlgebraError("quantum_I_map: source has more sites than the target");
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= s; ++j) blocks.push_back({j + N - s});
  return spread_map(p, target, blocks);
}

std::vector<NamedPoly> gaudin_algebra_generators(const AlgebraPtr& alg, const std::vector<Rational>& poles) {
  const LaxMatrix L = gaudin_lax(alg, poles);
  const TalalaevOutput t = talalaev_generators(L);
  std::vector<NamedPoly> out;
  for (int i = 0; i < alg->rank(); ++i) {
    const LaxEntry& q = t.qh[static_cast<std::size_t>(i)];
    for (const auto& p : poles) {
      const int order = q.pole_order(p);
      for (int j = 0; j < order; ++j) {
        NCPoly v = q.residue(p, j);
        if (v.is_zero()) continue;
        out.push_back({"QH_" + std::to_string(i) + " res(z=" + p.get_str() + ", " + std::to_string(j) + ")",
                       std::move(v)});
      }
    }
  }
  return out;
}

std::vector<NamedPoly> LimitAlgebra::all() const {
  std::vector<NamedPoly> out;
  for (const auto& g : generators) out.insert(out.end(), g.begin(), g.end());
  return out;
}

LimitAlgebra limit_gaudin_algebra(const AlgebraPtr& alg, const GluingPattern& pattern,
                                  const std::vector<Rational>& poles) {
  if (pattern.sites != alg->sites()) throw std::invalid_argument("pattern and algebra disagree on N");
  LimitAlgebra out;
  out.nodes = collision_nodes(pattern, poles);
  out.generators.resize(out.nodes.size());
  parallel_for(out.nodes.size(), [&](std::size_t n) {
    const auto& node = out.nodes[n];
    const AlgebraPtr sub = Algebra::get(alg->rank(), static_cast<int>(node.child_sites.size()), alg->mode());
    for (auto& g : gaudin_algebra_generators(sub, node.positions)) {
      out.generators[n].push_back({"node " + node.label + ": " + g.label, spread_map(g.value, alg, node.child_sites)});
    }
  });
  return out;
}

InvariantFamily quantum_bending_generators(const AlgebraPtr& alg, const Rational& z1, const Rational& z2) {
  if (!alg->quantum()) throw AlgebraError("quantum_bending_generators needs Quantum mode");
  const int r = alg->rank();
  std::vector<InvariantFamily> per_k(static_cast<std::size_t>(alg->sites() - 1));
  parallel_for(per_k.size(), [&](std::size_t idx) {
    const LaxMatrix L = bending_lax_rational(alg, static_cast<int>(idx) + 1, z1, z2);
    const auto powers = quantum_powers(L, r);
    for (int m = 1; m <= r; ++m) {
      const LaxEntry T = powers[static_cast<std::size_t>(m)].trace();
      for (const auto& pole : L.poles()) {
        const int order = T.pole_order(pole.point);
        for (int j = 0; j < order; ++j) {
          NCPoly v = T.residue(pole.point, j);
          if (!v.is_zero()) per_k[idx].members.push_back({std::move(v), Provenance{L.id(), m, pole.point, j}});
        }
      }
    }
  });
  InvariantFamily fam;
  for (const auto& f : per_k) fam.append(f);
  return fam;
}

Report bending_symbol_check(const AlgebraPtr& alg, const Rational& z1, const Rational& z2) {
  Report rep("bending_symbols");
  const InvariantFamily quantum = quantum_bending_generators(alg, z1, z2);
  const AlgebraPtr cl = alg->with_mode(Mode::Classical);
  InvariantFamily classical;
  for (int k = 1; k < alg->sites(); ++k) classical.append(spectral_invariants(bending_lax_rational(cl, k, z1, z2), alg->rank()));
  rep.trials = static_cast<int>(classical.size());
  int extra = 0;
  for (const auto& c : classical.members) {
    const Invariant* match = nullptr;
    for (const auto& q : quantum.members) {
      if (q.provenance == c.provenance) match = &q;
    }
    if (!match) {
      rep.fail({{"member", c.provenance.to_string()}, {"reason", "no quantum generator with this provenance"}});
      continue;
    }
    const NCPoly symbol = classical_limit(match->value);
    if (!(symbol == c.value)) {
      rep.fail({{"member", c.provenance.to_string()},
                {"classical_limit", symbol.to_string()},
                {"expected", c.value.to_string()}});
    }
  }
  for (const auto& q : quantum.members) {
    bool found = false;
    for (const auto& c : classical.members) found = found || c.provenance == q.provenance;
    if (!found) ++extra;
  }
  rep.details["quantum_generators"] = quantum.size();
  rep.details["classical_members"] = classical.size();
  rep.details["lower_order_extras"] = extra;
  return rep;
}

std::vector<NCPoly> degree_two_slice(const std::vector<NCPoly>& gens) {
  std::vector<NCPoly> out;
  if (gens.empty()) return out;
  out.push_back(NCPoly::constant(gens.front().algebra(), 1));
  std::vector<const NCPoly*> linear;
  for (const auto& g : gens) {
    const int d = g.degree();
    if (d >= 1 && d <= 2) out.push_back(g);
    if (d == 1) linear.push_back(&g);
  }
  for (std::size_t i = 0; i < linear.size(); ++i) {
    for (std::size_t j = 0; j < linear.size(); ++j) out.push_back(*linear[i] * *linear[j]);
  }
  return out;
}

Report same_slice_check(const std::vector<NamedPoly>& a, const std::vector<NamedPoly>& b, const std::string& spec) {
  Report rep("same_slice", spec);
  rep.trials = 1;
  std::vector<NCPoly> va, vb;
  for (const auto& g : a) va.push_back(g.value);
  for (const auto& g : b) vb.push_back(g.value);
  auto sa = degree_two_slice(va);
  auto sb = degree_two_slice(vb);
  const int ra = span_rank(sa);
  const int rb = span_rank(sb);
  auto both = sa;
  both.insert(both.end(), sb.begin(), sb.end());
  const int rab = span_rank(both);
  rep.details["ranks"] = {{"first", ra}, {"second", rb}, {"union", rab}};
  if (ra != rab || rb != rab) rep.fail({{"first", ra}, {"second", rb}, {"union", rab}});
  return rep;
}

}  // namespace gaudin
