#include "crflag/topo.hpp"

#include <algorithm>
#include <numeric>

#include "crflag/error.hpp"
#include "crflag/reduce.hpp"

namespace crflag {

namespace {

RatVector to_rat(const Root& r) {
  RatVector v;
  for (int x : r) v.emplace_back(x);
  return v;
}

Rational rat_form(const RootSystem& rs, const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.bilinear()[i][j]) s += a[i] * b[j] * Rational(rs.bilinear()[i][j]);
  return s;
}

RatVector coroot(const RootSystem& rs, int b) {
  RatVector v = to_rat(rs.root(b));
  Rational f(2, rs.norm(b));
  for (auto& x : v) x *= f;
  return v;
}

ConjugationPtr base_of(const ConjugationPtr& c) {
  return c->base() ? c->base() : c;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

std::vector<int> GroupPresentation::surviving() const {
  std::vector<int> out;
  for (int g : generators)
    if (std::find(killed.begin(), killed.end(), g) == killed.end()) out.push_back(g);
  return out;
}

GroupPresentation pi1_real_flag(const ConjugationPtr& conj, const RootSet& e) {
  const RootSystem& rs = *conj->roots();
  CRSpec core = make_spec(conj, e);
  if (core.bar_q() != e)
    fail_input("the parabolic set is not stable under the conjugation");
  GroupPresentation g{find_s_fit(core), {}, {}, {}, {}, {}, {}};
  const Chamber& c = g.chamber;
  for (int i = 0; i < rs.size(); ++i)
    if (c.positive(i) && !conj->imaginary(i) && !c.positive(conj->bar(i)))
      fail_consistency("core chamber does not satisfy the Satake property at " +
                       format_root(rs.root(i)));
  g.phi = phi_from_parabolic(e, c);
  for (int k = 0; k < rs.rank(); ++k) {
    int b = c.basis(k);
    if (!conj->real(b) || conj->multiplicity(b) != 1) continue;
    g.generators.push_back(k);
    if (!std::binary_search(g.phi.begin(), g.phi.end(), k)) g.killed.push_back(k);
  }
  int n = (int) g.generators.size();
  g.pairing.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.pairing[i][j] =
          std::abs(rs.pairing(c.basis(g.generators[i]), c.basis(g.generators[j]))) % 2;
  for (int i = 0; i < n; ++i) {
    bool killed = std::binary_search(g.killed.begin(), g.killed.end(), g.generators[i]);
    bool odd = false;
    for (int j = 0; j < n; ++j)
      if (j != i && g.pairing[i][j]) odd = true;
    if (!killed && !odd) continue;
    IntVector rel(n, 0);
    rel[i] = killed ? 1 : 2;
    g.relations.push_back(rel);
  }
  g.invariants = abelian_invariants(g.relations, n);
  return g;
}

std::vector<int> cayley_weyl_exponents(const RootSystem& rs, int beta,
                                       const std::vector<int>& cayley) {
  std::vector<int> out;
  for (int a : cayley) out.push_back(std::abs(rs.pairing(a, beta)) % 2);
  return out;
}

bool weyl_kernel_test(const Conjugation& conj, const RootSet& ideal,
                      const std::vector<int>& cayley, const Bits& c) {
  const RootSystem& rs = *conj.roots();
  int r = rs.rank();
  RatVector target(r, Rational(0));
  bool any = false;
  for (size_t j = 0; j < cayley.size(); ++j) {
    if (!c[j]) continue;
    any = true;
    RatVector v = coroot(rs, cayley[j]);
    for (int k = 0; k < r; ++k) target[k] += v[k];
  }
  if (!any) return true;
  // Orthonormal-free projection: solve Gram * x = ((u_i|v)).
  RatMatrix span;
  std::vector<RatVector> basis;
  for (int i : root_indices(ideal)) {
    if (!conj.imaginary(i)) continue;
    RatMatrix trial = span;
    trial.push_back(to_rat(rs.root(i)));
    if (rational_rank(trial) > (int) span.size()) {
      span = trial;
      basis.push_back(to_rat(rs.root(i)));
    }
  }
  if (basis.empty()) return false;
  int d = (int) basis.size();
  RatMatrix gram(d, RatVector(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram[i][j] = rat_form(rs, basis[i], basis[j]);
  auto project = [&](const RatVector& v) {
    RatVector rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = rat_form(rs, basis[i], v);
    auto x = solve_combination(gram, rhs);
    if (!x) fail_consistency("singular Gram matrix of imaginary roots");
    RatVector out(r, Rational(0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < r; ++k) out[k] += (*x)[i] * basis[i][k];
    return out;
  };
  std::vector<RatVector> gens;
  for (int i : root_indices(ideal)) {
    RatVector p = project(coroot(rs, i));
    for (auto& x : p) x *= Rational(2);
    gens.push_back(p);
  }
  long long den = 1;
  auto absorb = [&](const RatVector& v) {
    for (const auto& x : v) den = std::lcm(den, x.denominator());
  };
  for (const auto& v : gens) absorb(v);
  absorb(target);
  auto scale = [&](const RatVector& v) {
    IntVector out;
    for (const auto& x : v) out.push_back(x.numerator() * (den / x.denominator()));
    return out;
  };
  std::vector<IntVector> igens;
  for (const auto& v : gens) igens.push_back(scale(v));
  return IntLattice(igens, r).contains(scale(target));
}

std::string format_word(const std::vector<int>& nodes, const Bits& exps) {
  std::string s;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!exps[i]) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(nodes[i] + 1);
  }
  return s.empty() ? "1" : s;
}

std::string max_noncompact_check(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  RootSet qr = reductive_part(rs, s.q);
  RootSet l = qr & s.conj->image(qr);
  bool unknown = false;
  for (int i : root_indices(l)) {
    if (!s.conj->imaginary(i)) continue;
    auto m = s.conj->mark(i);
    if (!m) unknown = true;
    else if (*m == Compactness::Noncompact) return "failed";
  }
  return unknown ? "unknown" : "passed";
}

SubgroupDescription orbit_subgroup(const CRSpec& s, const RootSet& e) {
  const RootSystem& rs = s.roots();
  const Conjugation& conj = *s.conj;
  ConjugationPtr base = base_of(s.conj);
  SubgroupDescription out;
  out.core = e;
  out.ambient = pi1_real_flag(base, e);
  out.cayley = s.conj->base() ? s.conj->cayley() : std::vector<int>{};
  out.max_noncompact = max_noncompact_check(s);
  const Chamber& c = out.ambient.chamber;
  const std::vector<int>& phi = out.ambient.phi;
  int r = rs.rank();

  // Simple ideals: components of the nodes outside phi, glued along base.
  std::vector<bool> in_phi(r, false);
  for (int k : phi) in_phi[k] = true;
  UnionFind uf(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!in_phi[i] && !in_phi[j] && rs.form(c.basis(i), c.basis(j)) != 0) uf.unite(i, j);
  auto node_of_root = [&](int a) {
    std::vector<int> sup = c.support(a);
    for (int k : sup)
      if (in_phi[k]) return -1;
    return sup.front();
  };
  for (int i = 0; i < r; ++i) {
    if (in_phi[i]) continue;
    int k = node_of_root(base->bar(c.basis(i)));
    if (k < 0) fail_consistency("base conjugation does not preserve the core");
    uf.unite(i, k);
  }
  std::vector<int> rep_index(r, -1);
  for (int i = 0; i < r; ++i) {
    if (in_phi[i]) continue;
    int root = uf.find(i);
    if (rep_index[root] < 0) {
      rep_index[root] = (int) out.ideals.size();
      out.ideals.push_back({{}, rs.none(), {}, {}});
    }
    out.ideals[rep_index[root]].nodes.push_back(i);
  }
  RootSet er = reductive_part(rs, e);
  for (int a : root_indices(er)) {
    int k = node_of_root(a);
    out.ideals[rep_index[uf.find(k)]].roots.set(a);
  }
  for (int a : out.cayley) {
    if (!er[a])
      fail_consistency("Cayley root " + format_root(rs.root(a)) +
                       " is not a root of the core's Levi factor");
    out.ideals[rep_index[uf.find(node_of_root(a))]].cayley.push_back(a);
  }

  std::vector<int> surv = out.ambient.surviving();
  const std::vector<int>& killed = out.ambient.killed;
  int ns = (int) surv.size();
  for (auto& ideal : out.ideals) {
    int m = (int) ideal.cayley.size();
    if (m == 0) continue;
    std::vector<Bits> members;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Bits v(m);
      for (int j = 0; j < m; ++j) v[j] = mask >> j & 1u;
      if (weyl_kernel_test(conj, ideal.roots, ideal.cayley, v)) members.push_back(v);
    }
    std::vector<Bits> red = members;
    gf2_rref(red, m);
    if ((size_t) 1 << red.size() != members.size())
      fail_consistency("Weyl kernel is not a subgroup");
    ideal.kernel = red;
    for (const Bits& a : gf2_nullspace(red, m)) {
      Bits row(ns, 0);
      for (int g = 0; g < ns; ++g) {
        auto ex = cayley_weyl_exponents(rs, c.basis(surv[g]), ideal.cayley);
        int v = 0;
        for (int j = 0; j < m; ++j) v ^= a[j] & ex[j];
        row[g] = (std::uint8_t) v;
      }
      out.conditions.push_back(row);
      for (int kb : killed) {
        auto ex = cayley_weyl_exponents(rs, c.basis(kb), ideal.cayley);
        int v = 0;
        for (int j = 0; j < m; ++j) v ^= a[j] & ex[j];
        if (v) out.killed_consistent = false;
      }
    }
  }
  int rank = gf2_rank(out.conditions, ns);
  out.index = 1LL << rank;
  out.kernel_basis = gf2_nullspace(out.conditions, ns);
  for (const Bits& v : out.kernel_basis) out.generator_words.push_back(format_word(surv, v));

  // Image in the abelianization: lattice of admissible exponents plus relations.
  const auto& gens = out.ambient.generators;
  int n = (int) gens.size();
  auto pos = [&](int node) {
    return (int) (std::find(gens.begin(), gens.end(), node) - gens.begin());
  };
  std::vector<IntVector> lat;
  for (const Bits& v : out.kernel_basis) {
    IntVector x(n, 0);
    for (int g = 0; g < ns; ++g) x[pos(surv[g])] = v[g];
    lat.push_back(x);
  }
  for (int g = 0; g < ns; ++g) {
    IntVector x(n, 0);
    x[pos(surv[g])] = 2;
    lat.push_back(x);
  }
  for (int kb : killed) {
    IntVector x(n, 0);
    x[pos(kb)] = 1;
    lat.push_back(x);
  }
  for (const auto& rel : out.ambient.relations) lat.push_back(rel);
  IntLattice sub(lat, n);
  std::vector<IntVector> rel_coords;
  for (const auto& rel : out.ambient.relations) {
    auto x = sub.coordinates(rel);
    if (!x) fail_consistency("relation outside the subgroup lattice");
    rel_coords.push_back(*x);
  }
  out.image_invariants = abelian_invariants(rel_coords, sub.rank());
  long long quotient = 1;
  for (long long d : abelian_invariants(sub.basis(), n)) {
    if (d == 0) fail_consistency("subgroup of infinite index");
    quotient *= d;
  }
  if (quotient != out.index)
    fail_consistency("index " + std::to_string(out.index) +
                     " disagrees with the lattice index " + std::to_string(quotient));

  // Whether each Cayley root is orthogonal to rho_0 of its ideal.
  bool unknown = false, ok = true;
  for (const auto& ideal : out.ideals) {
    if (ideal.cayley.empty()) continue;
    Root rho2(r, 0);
    for (int i : root_indices(ideal.roots)) {
      if (!conj.imaginary(i) || !c.positive(i)) continue;
      auto mk = conj.mark(i);
      if (!mk) { unknown = true; continue; }
      if (*mk == Compactness::Compact)
        for (int k = 0; k < r; ++k) rho2[k] += rs.root(i)[k];
    }
    for (int a : ideal.cayley) {
      auto mk = conj.mark(a);
      if (!mk) unknown = true;
      else if (*mk != Compactness::Noncompact || rs.form(rho2, rs.root(a)) != 0) ok = false;
    }
  }
  out.cayley_in_e = !ok ? "false" : unknown ? "unknown" : "true";
  return out;
}

SubgroupDescription pi1_orbit(const CRSpec& s) {
  return orbit_subgroup(s, real_core(s).q);
}

long long fiber_component_count(const CRSpec& source, const CRSpec& target) {
  if (source.q == target.q) return 1;
  if (target.bar_q() != target.q)
    fail_input("fiber component count needs a totally real target");
  RootSet iso_src = source.q & source.bar_q();
  if (!iso_src.is_subset_of(target.q & target.bar_q()))
    fail_input("isotropy of the source is not contained in that of the target");
  return orbit_subgroup(source, target.q).index;
}

std::uint64_t euler_complex_flag(const RootSystemPtr& rs, const std::vector<int>& phi) {
  Chamber c = Chamber::standard(rs);
  std::vector<int> rest;
  for (int k = 0; k < rs->rank(); ++k) {
    if (std::find(phi.begin(), phi.end(), k) != phi.end()) continue;
    rest.push_back(k);
  }
  for (int k : phi)
    if (k < 0 || k >= rs->rank()) fail_input("node out of range");
  return rs->weyl_order() / weyl_order_of_nodes(c, rest);
}

} // namespace crflag
