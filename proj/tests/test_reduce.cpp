#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crflag/error.hpp"
#include "crflag/oracle.hpp"
#include "crflag/reduce.hpp"
#include "test_util.hpp"

using namespace crflag;

namespace {

ConjugationPtr form(const std::string& n) { return load_real_form(n); }

ConjugationPtr seven(const std::vector<std::string>& cayley) {
  auto base = form("sl7R");
  const RootSystem& rs = *base->roots();
  std::vector<int> roots;
  for (const auto& e : cayley) roots.push_back(rs.require(parse_e_root(rs, e)));
  return apply_cayley(base, roots);
}

CRSpec standard_spec(const ConjugationPtr& c, const std::vector<int>& phi) {
  return make_spec(c, parabolic_from_phi(Chamber::standard(c->roots()), phi));
}

std::vector<int> nodes(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int k : one_based) out.push_back(k - 1);
  return out;
}

// Intersection of every parabolic superset of s, required to be parabolic.
RootSet brute_smallest_over(const std::vector<RootSet>& pars, const RootSet& s) {
  RootSet out = s;
  out.set();
  for (const RootSet& p : pars)
    if (s.is_subset_of(p)) out &= p;
  return out;
}

// Union of every parabolic between lo and hi.
RootSet brute_largest_between(const std::vector<RootSet>& pars, const RootSet& lo,
                              const RootSet& hi) {
  RootSet out = lo;
  out.reset();
  for (const RootSet& p : pars)
    if (lo.is_subset_of(p) && p.is_subset_of(hi)) out |= p;
  return out;
}

bool brute_strictly_nondegenerate(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  RootSet b = s.bar_q(), sum = s.q | b;
  for (int a = 0; a < rs.size(); ++a) {
    if (!s.q[a] || b[a]) continue;
    bool escapes = false;
    for (int c = 0; c < rs.size() && !escapes; ++c) {
      if (!b[c]) continue;
      Root v = rs.root(a);
      for (int k = 0; k < rs.rank(); ++k) v[k] += rs.root(c)[k];
      int idx = rs.index_of(v);
      escapes = idx >= 0 && !sum[idx];
    }
    if (!escapes) return false;
  }
  return true;
}

// Maximality read off an S-fit chamber: for every alpha in phi with a
// positive conjugate, the support of the conjugate meets phi only in alpha.
bool support_condition(const CRSpec& s, const Chamber& c, const std::vector<int>& phi) {
  for (int k : phi) {
    int a = c.basis(k);
    int b = s.conj->bar(a);
    if (!c.positive(b)) continue;
    for (int j : c.support(b))
      if (j != k && std::find(phi.begin(), phi.end(), j) != phi.end()) return false;
  }
  return true;
}

// Every specification over the given forms and their Cayley variants.
template <class F>
void sweep(const std::vector<ConjugationPtr>& forms, bool variants, F f) {
  for (const auto& base : forms) {
    auto rs = base->roots();
    std::vector<ConjugationPtr> conjs{base};
    if (variants)
      for (const auto& v : cayley_variants(*base))
        if (!v.empty()) conjs.push_back(apply_cayley(base, v));
    auto pars = testutil::all_parabolic_sets(rs);
    for (const auto& c : conjs)
      for (const RootSet& q : pars) f(make_spec(c, q), pars);
  }
}

} // namespace

TEST_CASE("su21 weakening of phi {1} is the Borel") {
  auto c = form("su21");
  CRSpec s = standard_spec(c, {0});
  CHECK(cr_weakening(s) == c->roots()->positive_roots());
}

TEST_CASE("stable parabolic sets are their own weakening") {
  auto c = form("sl4R");
  for (const RootSet& q : testutil::all_parabolic_sets(c->roots()))
    CHECK(cr_weakening(make_spec(c, q)) == q);
}

TEST_CASE("fundamental and weak reductions: basic examples") {
  auto split = form("sl7R");
  CRSpec b = make_spec(split, split->roots()->positive_roots());
  Reduction f = fundamental_reduction(b);
  CHECK(f.psi == f.phi);
  CHECK(f.q == b.q);
  CHECK(!is_fundamental(b));
  CHECK(is_fundamental(make_spec(split, split->roots()->all())));
  Reduction w = weak_reduction(b);
  CHECK(w.psi == w.phi);
  CHECK(is_holomorphically_nondegenerate(b));

  auto su = form("su21");
  CRSpec s = standard_spec(su, {0});
  Reduction fs = fundamental_reduction(s);
  CHECK(fs.psi.empty());
  CHECK(fs.q == su->roots()->all());
  CHECK(is_fundamental(s));
}

TEST_CASE("six-dimensional example with two Cayley roots: reduction stages") {
  auto c = seven({"e1 - e7", "e3 - e6"});
  CRSpec s = make_spec(c, c->roots()->positive_roots());
  Reduction w = weak_reduction(s);
  CHECK(flag_type(c->roots(), w.q) == nodes({2, 4}));
  CHECK(!is_holomorphically_nondegenerate(s));

  CRSpec m0 = with_q(s, w.q);
  RootSet q_w = cr_weakening(m0);
  Reduction m1 = weak_reduction(with_q(s, q_w));
  CHECK(flag_type(c->roots(), m1.q) == nodes({1, 3, 5, 6}));
  FibrationPredicates p = fibration_predicates(with_q(s, q_w), with_q(s, m1.q));
  CHECK(p.is_cr_map);
  CHECK(p.has_complex_fibers);

  CoreResult core = real_core(s);
  CHECK(core.iterations == 2);
  CHECK(flag_type(c->roots(), core.q) == nodes({1, 2, 4, 6}));
  CHECK(c->image(core.q) == core.q);
  std::vector<StageTag> tags;
  for (const Stage& st : core.trace) tags.push_back(st.tag);
  CHECK(tags == std::vector<StageTag>{StageTag::Initial, StageTag::WeakReduction,
                                      StageTag::Weakening, StageTag::WeakReduction,
                                      StageTag::Weakening, StageTag::WeakReduction,
                                      StageTag::Core});
  CHECK(core.trace[3].q == m1.q);
  CHECK(core.trace.back().h == 2);
}

TEST_CASE("six-dimensional example with one Cayley root") {
  auto c = seven({"e1 - e7"});
  CRSpec s = standard_spec(c, nodes({2, 3}));
  CoreResult core = real_core(s);
  CHECK(core.iterations == 1);
  CHECK(flag_type(c->roots(), core.q) == nodes({1, 4}));
}

TEST_CASE("totally real input is its own core") {
  auto c = form("sl4R");
  for (const RootSet& q : testutil::all_parabolic_sets(c->roots())) {
    CoreResult r = real_core(make_spec(c, q));
    CHECK(r.q == q);
    CHECK(r.iterations == 0);
    CHECK(r.trace.back().tag == StageTag::Core);
  }
}

TEST_CASE("fibration predicates and fiber reports") {
  auto su = form("su21");
  auto rs = su->roots();
  CRSpec s = standard_spec(su, {0});
  FibrationPredicates id = fibration_predicates(s, s);
  CHECK(id.is_cr_map);
  CHECK(id.is_cr_submersion);
  CHECK(id.has_complex_fibers);
  FiberReport pt = fiber_structure_report(s, s);
  CHECK(pt.nil_complex_dim == 0);
  CHECK(pt.cr_dim == 0);
  CHECK(pt.real_dim == 0);

  CRSpec borel = make_spec(su, rs->positive_roots());
  FiberReport f = fiber_structure_report(borel, s);
  CHECK(f.sub_roots.none());
  CHECK(f.sub_rank == 0);
  // The Borel orbit is totally real, so its fibers carry no CR structure.
  CHECK(is_totally_real(borel));
  CHECK(f.nil_complex_dim == 0);
  CHECK(f.real_dim == orbit_dim(borel) - orbit_dim(s));
  CHECK_THROWS_AS(fiber_structure_report(s, borel), Error);

  auto sl = form("sl3R");
  CRSpec a = standard_spec(sl, {0}), bb = standard_spec(sl, {1});
  CHECK_THROWS_AS(fibration_predicates(a, bb), Error);
}

TEST_CASE("weakening maps to the original orbit by a CR map") {
  sweep(testutil::forms_up_to_rank(1, 3), false, [](const CRSpec& s, const auto&) {
    CRSpec w = with_q(s, cr_weakening(s));
    FibrationPredicates p = fibration_predicates(w, s);
    CHECK(p.is_cr_map);
    RootSet qr = reductive_part(s.roots(), s.q);
    CHECK(p.is_cr_submersion == qr.is_subset_of(s.bar_q()));
  });
}

TEST_CASE("weakening identities, polarization and the dichotomy, rank <= 3") {
  sweep(testutil::forms_up_to_rank(1, 3), true, [](const CRSpec& s, const auto&) {
    const RootSystem& rs = s.roots();
    RootSet w = cr_weakening(s);
    CRSpec sw = with_q(s, w);
    CHECK(testutil::brute_parabolic(rs, w));
    CHECK(w.is_subset_of(s.q));
    CHECK((w & sw.bar_q()) == (s.q & s.bar_q()));
    RootSet wr = reductive_part(rs, w);
    CHECK(s.conj->image(wr) == wr);
    CHECK(cr_weakening(sw) == w);
    bool real = sw.bar_q() == w;
    bool degenerate = weak_reduction(sw).q != w;
    CHECK((real || degenerate));
  });
}

TEST_CASE("reductions equal the brute-force extremal parabolic sets, rank <= 3") {
  sweep(testutil::forms_up_to_rank(1, 3), true, [](const CRSpec& s, const auto& pars) {
    const RootSystem& rs = s.roots();
    RootSet u = s.q | s.bar_q();
    RootSet lo = brute_smallest_over(pars, u);
    REQUIRE(testutil::brute_parabolic(rs, lo));
    Reduction f = fundamental_reduction(s);
    CHECK(f.q == lo);
    CHECK(is_fundamental(s) == (lo == rs.all()));
    RootSet hi = brute_largest_between(pars, s.q, u);
    REQUIRE(testutil::brute_parabolic(rs, hi));
    Reduction w = weak_reduction(s);
    CHECK(w.q == hi);
    CHECK(is_holomorphically_nondegenerate(s) == (hi == s.q));
    CHECK(weak_reduction(with_q(s, w.q)).q == w.q);
    CHECK(fundamental_reduction(with_q(s, f.q)).q == f.q);
    CHECK(is_strictly_nondegenerate(s) == brute_strictly_nondegenerate(s));
  });
}

TEST_CASE("reductions do not depend on the S-fit or V-fit chamber") {
  sweep(testutil::forms_up_to_rank(2, 3), false, [](const CRSpec& s, const auto&) {
    Reduction f = fundamental_reduction(s), w = weak_reduction(s);
    for (const Chamber& c : enumerate_chambers(s.conj->roots())) {
      if (s_fit_local(s, c)) CHECK(fundamental_reduction_in(s, c).q == f.q);
      if (v_fit_local(s, c)) CHECK(weak_reduction_in(s, c).q == w.q);
    }
  });
}

TEST_CASE("real core: stable, idempotent, trace consistent, rank <= 3") {
  sweep(testutil::forms_up_to_rank(1, 3), true, [](const CRSpec& s, const auto&) {
    CoreResult r = real_core(s);
    CHECK(s.conj->image(r.q) == r.q);
    CoreResult again = real_core(with_q(s, r.q));
    CHECK(again.q == r.q);
    CHECK(again.iterations == 0);
    REQUIRE(r.trace.size() >= 3);
    CHECK(r.trace.front().tag == StageTag::Initial);
    CHECK(r.trace.front().q == s.q);
    CHECK(r.trace.back().tag == StageTag::Core);
    CHECK(r.trace.back().q == r.q);
    for (std::size_t i = 1; i + 1 < r.trace.size(); ++i) {
      const Stage& prev = r.trace[i - 1];
      const Stage& st = r.trace[i];
      if (st.tag == StageTag::WeakReduction)
        CHECK(st.q == weak_reduction(with_q(s, prev.q)).q);
      else if (st.tag == StageTag::Weakening)
        CHECK(st.q == cr_weakening(with_q(s, prev.q)));
      CHECK(parabolic_from_phi(st.chamber, st.phi) == st.q);
    }
  });
}

TEST_CASE("maximal CR structures against subset enumeration, rank <= 3") {
  sweep(testutil::forms_up_to_rank(1, 3), false, [](const CRSpec& s, const auto&) {
    Chamber c = find_s_fit(s);
    std::vector<int> phi = phi_from_parabolic(s.q, c);
    RootSet iso = s.q & s.bar_q();
    std::vector<std::vector<int>> good;
    for (int mask = 0; mask < (1 << phi.size()); ++mask) {
      std::vector<int> psi;
      for (std::size_t i = 0; i < phi.size(); ++i)
        if (mask >> i & 1) psi.push_back(phi[i]);
      RootSet q = parabolic_from_phi(c, psi);
      if ((q & s.conj->image(q)) == iso) good.push_back(psi);
    }
    std::vector<std::vector<int>> minimal;
    for (const auto& a : good) {
      bool min = true;
      for (const auto& b : good)
        if (b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end()))
          min = false;
      if (min) minimal.push_back(a);
    }
    auto got = maximal_cr_structures(s);
    std::sort(got.begin(), got.end());
    std::sort(minimal.begin(), minimal.end());
    CHECK(got == minimal);
    bool maximal = is_maximal(s);
    CHECK(maximal == (minimal == std::vector<std::vector<int>>{phi}));
    CHECK(maximal == support_condition(s, c, phi));
  });
}

TEST_CASE("split forms: every specification is maximal and nondegenerate") {
  for (const auto& name : {"sl3R", "sl4R", "so32", "g2_2", "sp3R"}) {
    auto c = form(name);
    for (const RootSet& q : testutil::all_parabolic_sets(c->roots())) {
      CRSpec s = make_spec(c, q);
      CHECK(is_maximal(s));
      CHECK(is_holomorphically_nondegenerate(s));
    }
  }
}

TEST_CASE("su21 Borel: maximality by the definition") {
  auto su = form("su21");
  CRSpec s = make_spec(su, su->roots()->positive_roots());
  Chamber c = find_s_fit(s);
  CHECK(is_maximal(s) == support_condition(s, c, {0, 1}));
  for (const auto& psi : maximal_cr_structures(s)) {
    RootSet q = parabolic_from_phi(c, psi);
    CHECK((q & su->image(q)) == (s.q & s.bar_q()));
  }
}

TEST_CASE("fiber dimensions add up along CR submersions, rank <= 3") {
  sweep(testutil::forms_up_to_rank(2, 3), false, [](const CRSpec& s, const auto& pars) {
    for (const RootSet& t : pars) {
      if (!s.q.is_subset_of(t)) continue;
      CRSpec target = with_q(s, t);
      if (!(s.q & s.bar_q()).is_subset_of(t & target.bar_q())) continue;
      FibrationPredicates p = fibration_predicates(s, target);
      FiberReport f = fiber_structure_report(s, target);
      CHECK(f.real_dim == orbit_dim(s) - orbit_dim(target));
      if (p.is_cr_submersion) CHECK(cr_dim(s) - cr_dim(target) == f.cr_dim);
    }
  });
}

TEST_CASE("weak reduction has complex fibers, rank <= 3") {
  sweep(testutil::forms_up_to_rank(1, 3), true, [](const CRSpec& s, const auto&) {
    CRSpec t = with_q(s, weak_reduction(s).q);
    CHECK(fibration_predicates(s, t).has_complex_fibers);
  });
}

TEST_CASE("seeded random specifications at ranks 4 to 6") {
  testutil::Gen g(4242);
  auto forms = testutil::forms_up_to_rank(4, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto base = forms[g.below((int) forms.size())];
    auto conj = apply_cayley(base, g.cayley(*base));
    CRSpec s = make_spec(conj, g.parabolic(conj->roots()));
    const RootSystem& rs = s.roots();
    CAPTURE(base->name());
    RootSet u = s.q | s.bar_q();

    RootSet w = cr_weakening(s);
    CRSpec sw = with_q(s, w);
    CHECK(testutil::brute_parabolic(rs, w));
    CHECK(w.is_subset_of(s.q));
    CHECK((w & sw.bar_q()) == (s.q & s.bar_q()));
    CHECK(cr_weakening(sw) == w);
    CHECK((sw.bar_q() == w || weak_reduction(sw).q != w));

    Chamber sf = find_s_fit(s), vf = find_v_fit(s);
    CHECK(s_fit_local(s, sf));
    CHECK(s_fit_global(s, sf));
    CHECK(v_fit_local(s, vf));
    CHECK(v_fit_global(s, vf));

    Reduction f = fundamental_reduction(s);
    CHECK(testutil::brute_parabolic(rs, f.q));
    CHECK(u.is_subset_of(f.q));
    CHECK(conj->image(f.q) == f.q);
    Reduction r = weak_reduction(s);
    CHECK(testutil::brute_parabolic(rs, r.q));
    CHECK(s.q.is_subset_of(r.q));
    CHECK(r.q.is_subset_of(u));
    CHECK(weak_reduction(with_q(s, r.q)).q == r.q);

    CoreResult core = real_core(s);
    CHECK(conj->image(core.q) == core.q);
    CHECK(real_core(with_q(s, core.q)).q == core.q);
  }
}
