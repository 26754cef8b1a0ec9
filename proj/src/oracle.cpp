#include "crflag/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "crflag/arc.hpp"
#include "crflag/error.hpp"
#include "crflag/reduce.hpp"
#include "crflag/topo.hpp"

namespace crflag {

std::vector<RootSet> all_parabolics(const RootSystemPtr& rs, std::uint64_t bound) {
  if (rs->rank() > kOracleMaxRank)
    fail_bound("oracle sweeps are limited to rank " + std::to_string(kOracleMaxRank));
  static std::mutex mu;
  static std::map<std::string, std::vector<RootSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs->dynkin().str());
  if (it != cache.end()) return it->second;
  std::set<RootSet> found;
  int r = rs->rank();
  for (const Chamber& c : enumerate_chambers(rs, bound))
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> phi;
      for (int k = 0; k < r; ++k)
        if (mask >> k & 1u) phi.push_back(k);
      found.insert(parabolic_from_phi(c, phi));
    }
  std::vector<RootSet> out(found.begin(), found.end());
  cache.emplace(rs->dynkin().str(), out);
  return out;
}

RootSet smallest_parabolic_over(const std::vector<RootSet>& pars, const RootSet& s) {
  RootSet out(s.size());
  out.set();
  for (const RootSet& p : pars)
    if (s.is_subset_of(p)) out &= p;
  return out;
}

std::optional<RootSet> largest_parabolic_between(const std::vector<RootSet>& pars,
                                                 const RootSet& lo, const RootSet& hi) {
  std::vector<const RootSet*> cands;
  for (const RootSet& p : pars)
    if (lo.is_subset_of(p) && p.is_subset_of(hi)) cands.push_back(&p);
  for (const RootSet* p : cands)
    if (std::all_of(cands.begin(), cands.end(),
                    [p](const RootSet* o) { return o->is_subset_of(*p); }))
      return *p;
  return std::nullopt;
}

std::vector<std::vector<int>> cayley_variants(const Conjugation& conj, std::size_t limit) {
  const RootSystem& rs = *conj.roots();
  RootSet pos = rs.positive_roots();
  std::vector<int> real;
  for (int i = 0; i < rs.size(); ++i)
    if (conj.real(i) && pos[i]) real.push_back(i);
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t k = from; k < real.size(); ++k) {
      int a = real[k];
      if (!std::all_of(cur.begin(), cur.end(),
                       [&](int b) { return strongly_orthogonal(rs, a, b); }))
        continue;
      if (out.size() >= limit) fail_bound("too many Cayley variants");
      cur.push_back(a);
      out.push_back(cur);
      grow(k + 1);
      cur.pop_back();
    }
  };
  grow(0);
  return out;
}

IntMatrix corrupted_sigma_fixture() {
  return {{0, -1}, {1, -1}};
}

namespace {

using Errors = std::vector<std::string>;

std::string set_str(const RootSystemPtr& rs, const RootSet& q) {
  return format_nodes(flag_type(rs, q));
}

void expect(Errors& e, bool ok, const std::string& what) {
  if (!ok) e.push_back(what);
}

void check_reductions(const CRSpec& s, const std::vector<RootSet>& pars, Errors& e) {
  const RootSystem& rs = s.roots();
  const RootSystemPtr& rp = s.conj->roots();
  RootSet sum = s.q | s.bar_q();
  RootSet fund = fundamental_reduction(s).q;
  RootSet brute = smallest_parabolic_over(pars, sum);
  expect(e, fund == brute, "fundamental reduction " + set_str(rp, fund) +
                               " differs from smallest parabolic " + set_str(rp, brute));
  expect(e, additive_closure(rs, sum) == brute, "closure of Q u conj(Q) is not parabolic");
  RootSet weak = weak_reduction(s).q;
  auto big = largest_parabolic_between(pars, s.q, sum);
  if (!big) {
    e.push_back("no unique largest parabolic between Q and Q u conj(Q)");
  } else {
    expect(e, weak == *big, "weak reduction " + set_str(rp, weak) +
                                " differs from largest parabolic " + set_str(rp, *big));
  }
  expect(e, weak_reduction(with_q(s, weak)).q == weak, "weak reduction is not idempotent");
  expect(e, is_holomorphically_nondegenerate(s) == (weak == s.q),
         "nondegeneracy flag disagrees with the weak reduction");
  expect(e, is_fundamental(s) == (fund == rs.all()),
         "fundamentality flag disagrees with the fundamental reduction");
}

void check_chambers(const CRSpec& s, Errors& e) {
  Chamber cs = find_s_fit(s), cv = find_v_fit(s);
  expect(e, s_fit_local(s, cs) && s_fit_global(s, cs), "walk chamber is not S-fit");
  expect(e, v_fit_local(s, cv) && v_fit_global(s, cv), "walk chamber is not V-fit");
  RootSet fund = fundamental_reduction_in(s, cs).q;
  RootSet weak = weak_reduction_in(s, cv).q;
  for (const Chamber& c : fit_chambers(s)) {
    bool sl = s_fit_local(s, c), vl = v_fit_local(s, c);
    expect(e, sl == s_fit_global(s, c), "local and global S-fit conditions disagree");
    expect(e, vl == v_fit_global(s, c), "local and global V-fit conditions disagree");
    if (sl) expect(e, fundamental_reduction_in(s, c).q == fund,
                   "fundamental reduction depends on the S-fit chamber");
    if (vl) expect(e, weak_reduction_in(s, c).q == weak,
                   "weak reduction depends on the V-fit chamber");
  }
}

void check_weakening(const CRSpec& s, Errors& e) {
  const RootSystem& rs = s.roots();
  RootSet w = cr_weakening(s);
  CRSpec sw = with_q(s, w);
  expect(e, is_parabolic(rs, w), "weakening is not parabolic");
  expect(e, w.is_subset_of(s.q), "weakening is not contained in Q");
  expect(e, (w & sw.bar_q()) == (s.q & s.bar_q()), "weakening changes Q n conj(Q)");
  RootSet wr = reductive_part(rs, w);
  expect(e, s.conj->image(wr) == wr, "weakening is not polarized");
  expect(e, cr_weakening(sw) == w, "weakening is not a fixed point");
  bool real = sw.bar_q() == w;
  RootSet up = weak_reduction(sw).q;
  bool grows = w.is_proper_subset_of(up);
  expect(e, real || grows, "weakening is neither totally real nor weakly degenerate");
}

void check_core(const CRSpec& s, Errors& e) {
  CoreResult r = real_core(s);
  expect(e, s.conj->image(r.q) == r.q, "core is not conj-stable");
  CoreResult again = real_core(with_q(s, r.q));
  expect(e, again.q == r.q && again.iterations == 0, "core is not idempotent");
  const auto& t = r.trace;
  bool ok = t.size() >= 3 && t.front().tag == StageTag::Initial &&
            t.back().tag == StageTag::Core;
  for (std::size_t i = 1; ok && i + 1 < t.size(); ++i) {
    StageTag want = i % 2 ? StageTag::WeakReduction : StageTag::Weakening;
    if (t[i].tag != want) { ok = false; break; }
    CRSpec prev = with_q(s, t[i - 1].q);
    RootSet expected = want == StageTag::Weakening ? cr_weakening(prev)
                                                   : weak_reduction(prev).q;
    if (t[i].q != expected) ok = false;
  }
  ok = ok && t[t.size() - 2].q == r.q;
  expect(e, ok, "trace stages do not follow their tags");
}

void check_arc(const CRSpec& s, Errors& e) {
  ArcReport a = arc_parabolic(s);
  expect(e, a.parabolic && a.stable, "arc set is not a conj-stable parabolic");
  expect(e, a.relation == compare_sets(a.core, a.qa), "arc relation tag is wrong");
  expect(e, arc_invariance(s), "arc set changes under weak reduction");
  KjReport k = kj_check(s);
  if (k.holds == "true") {
    expect(e, k.arc_equals_core, "closed-orbit condition holds but Q_a != Q_e");
    expect(e, k.weakening_sum_closed, "closed-orbit condition holds but Q_w u conj(Q_w) "
                                      "is not closed");
  }
  expect(e, k.holds != "unknown", "closed-orbit condition undecided");
}

void check_fibers(const CRSpec& s, Errors& e) {
  FibrationPredicates self = fibration_predicates(s, s);
  expect(e, self.is_cr_map && self.is_cr_submersion && self.has_complex_fibers,
         "identity map fails a fibration predicate");
  FiberReport point = fiber_structure_report(s, s);
  expect(e, point.cr_dim == 0 && point.real_dim == 0, "identity map has a nontrivial fiber");
  CRSpec weak = with_q(s, weak_reduction(s).q);
  CRSpec fund = with_q(s, fundamental_reduction(s).q);
  for (const CRSpec* t : {&weak, &fund}) {
    FibrationPredicates p = fibration_predicates(s, *t);
    FiberReport f = fiber_structure_report(s, *t);
    expect(e, p.is_cr_map, "map to a reduction is not a CR map");
    expect(e, f.real_dim >= 0, "negative fiber dimension");
    if (p.is_cr_submersion)
      expect(e, cr_dim(s) - cr_dim(*t) == f.cr_dim,
             "CR dimensions of a CR submersion do not add up");
  }
  expect(e, fibration_predicates(s, weak).has_complex_fibers,
         "weak reduction does not have complex fibers");
}

void check_maximal(const CRSpec& s, Errors& e) {
  Chamber c = find_s_fit(s);
  std::vector<int> phi = phi_from_parabolic(s.q, c);
  auto list = maximal_cr_structures(s);
  RootSet iso = s.q & s.bar_q();
  for (const auto& psi : list) {
    RootSet q = parabolic_from_phi(c, psi);
    expect(e, (q & s.conj->image(q)) == iso, "listed structure changes the isotropy");
  }
  bool phi_minimal = list.size() == 1 && list[0] == phi;
  expect(e, is_maximal(s) == phi_minimal,
         "support criterion disagrees with subset enumeration");
}

void check_topology(const CRSpec& s, Errors& e) {
  SubgroupDescription d = pi1_orbit(s);
  CRSpec core = with_q(s, d.core);
  if (d.max_noncompact == "passed")
    expect(e, fiber_component_count(s, core) == d.index,
           "fiber component count differs from the subgroup index");
  long long amb = 1, img = 1;
  bool finite = true;
  for (long long x : d.ambient.invariants) {
    expect(e, x == 0 || x == 2, "ambient invariant factor outside {0, 2}");
    if (x == 0) finite = false;
    amb *= x;
  }
  for (long long x : d.image_invariants) {
    if (x == 0) finite = false;
    img *= x;
  }
  if (finite) expect(e, amb == d.index * img, "index times image order is not the ambient order");
  expect(e, d.killed_consistent, "killed generators are not in the image");
  for (const IdealBlock& b : d.ideals) {
    Bits zero(b.cayley.size(), 0);
    expect(e, weyl_kernel_test(*s.conj, b.roots, b.cayley, zero),
           "kernel test rejects the identity");
    for (std::size_t i = 0; i < b.kernel.size(); ++i)
      for (std::size_t j = i; j < b.kernel.size(); ++j) {
        Bits sum(b.cayley.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = b.kernel[i][k] ^ b.kernel[j][k];
        expect(e, weyl_kernel_test(*s.conj, b.roots, b.cayley, sum),
               "kernel test is not closed under products");
      }
  }
}

using CaseCheck = void (*)(const CRSpec&, Errors&);

std::string case_key(const Conjugation& conj, int idx, const RootSet& q) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05d", idx);
  return (conj.name().empty() ? conj.roots()->dynkin().str() : conj.name()) + " Q" + buf +
         " " + set_str(conj.roots(), q);
}

void run_parabolicity(const RootSystemPtr& rs, std::uint64_t bound, OracleReport& out) {
  int r = rs->rank();
  auto chambers = enumerate_chambers(rs, bound);
  for (std::size_t ci = 0; ci < chambers.size(); ++ci)
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      const Chamber& c = chambers[ci];
      std::vector<int> phi;
      for (int k = 0; k < r; ++k)
        if (mask >> k & 1u) phi.push_back(k);
      ++out.cases;
      RootSet q = parabolic_from_phi(c, phi);
      Errors e;
      expect(e, is_parabolic(*rs, q), "not parabolic");
      expect(e, (q | rs->negate(q)) == rs->all(), "Q u -Q is not R");
      RootSet qr = reductive_part(*rs, q);
      expect(e, rs->negate(qr) == qr, "reductive part is not symmetric");
      expect(e, (nil_part(*rs, q) | qr) == q && !(nil_part(*rs, q) & qr).any(),
             "Q is not the disjoint union of its parts");
      expect(e, is_fit(c, q) && phi_from_parabolic(q, c) == phi, "round trip fails");
      Chamber f = find_fit_chamber(rs, q);
      expect(e, is_fit(f, q) && parabolic_from_phi(f, phi_from_parabolic(q, f)) == q,
             "fit chamber round trip fails");
      if (!e.empty()) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%05zu", ci);
        out.failures.push_back({rs->dynkin().str() + " C" + buf + " " + format_nodes(phi),
                                e.front()});
      }
    }
}

} // namespace

const std::vector<std::string>& oracle_checks() {
  static const std::vector<std::string> names{"parabolicity", "reductions", "chambers",
                                              "weakening",    "core",       "arc",
                                              "fibers",       "maximal",    "topology"};
  return names;
}

OracleReport run_oracle(const ConjugationPtr& conj, const std::string& check,
                        std::uint64_t bound) {
  OracleReport out;
  out.check = check;
  const RootSystemPtr& rs = conj->roots();
  if (check == "parabolicity") {
    if (rs->rank() > kOracleMaxRank)
      fail_bound("oracle sweeps are limited to rank " + std::to_string(kOracleMaxRank));
    run_parabolicity(rs, bound, out);
    return out;
  }
  static const std::map<std::string, CaseCheck> simple{
      {"chambers", check_chambers}, {"weakening", check_weakening}, {"core", check_core},
      {"arc", check_arc},           {"fibers", check_fibers},       {"maximal", check_maximal},
      {"topology", check_topology}};
  if (check != "reductions" && !simple.count(check))
    fail_input("unknown oracle check '" + check + "'");
  std::vector<RootSet> pars = all_parabolics(rs, bound);
  for (std::size_t i = 0; i < pars.size(); ++i) {
    CRSpec s = make_spec(conj, pars[i]);
    Errors e;
    ++out.cases;
    try {
      if (check == "reductions")
        check_reductions(s, pars, e);
      else
        simple.at(check)(s, e);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::CatalogGap) {
        ++out.skipped;
        continue;
      }
      e.push_back(err.what());
    }
    if (!e.empty()) out.failures.push_back({case_key(*conj, (int) i, pars[i]), e.front()});
  }
  std::sort(out.failures.begin(), out.failures.end(),
            [](const OracleFailure& a, const OracleFailure& b) { return a.key < b.key; });
  return out;
}

OracleReport conjugation_oracle(const RootSystem& rs, const IntMatrix& sigma) {
  OracleReport out;
  out.check = "conjugation";
  out.cases = 1;
  if (auto v = check_conjugation(rs, sigma))
    out.failures.push_back({v->invariant + " at " + format_root(v->counterexample),
                            v->detail});
  return out;
}

} // namespace crflag
