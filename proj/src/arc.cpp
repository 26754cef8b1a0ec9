#include "crflag/arc.hpp"

#include <algorithm>
#include <set>

#include "crflag/error.hpp"
#include "crflag/reduce.hpp"

namespace crflag {

const char* relation_name(ArcRelation r) {
  switch (r) {
    case ArcRelation::Equal: return "equal";
    case ArcRelation::CoreInArc: return "core_strict_subset_arc";
    case ArcRelation::ArcInCore: return "arc_strict_subset_core";
    case ArcRelation::Incomparable: return "incomparable";
  }
  return "?";
}

ArcRelation compare_sets(const RootSet& core, const RootSet& arc) {
  if (core == arc) return ArcRelation::Equal;
  if (core.is_subset_of(arc)) return ArcRelation::CoreInArc;
  if (arc.is_subset_of(core)) return ArcRelation::ArcInCore;
  return ArcRelation::Incomparable;
}

namespace {

RootSet arc_set(const CRSpec& s, Root* delta_out) {
  const RootSystem& rs = s.roots();
  RootSet qn = nil_part(rs, s.q);
  RootSet d = qn & s.conj->image(qn);
  Root delta(rs.rank(), 0);
  for (int i : root_indices(d))
    for (int k = 0; k < rs.rank(); ++k) delta[k] += rs.root(i)[k];
  RootSet qa(rs.size());
  for (int i = 0; i < rs.size(); ++i)
    if (rs.form(delta, rs.root(i)) >= 0) qa.set(i);
  if (delta_out) *delta_out = delta;
  return qa;
}

} // namespace

ArcReport arc_parabolic(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  ArcReport a;
  a.qa = arc_set(s, &a.delta);
  a.delta_zero = std::all_of(a.delta.begin(), a.delta.end(), [](int x) { return x == 0; });
  a.parabolic = is_parabolic(rs, a.qa);
  a.stable = s.conj->image(a.qa) == a.qa;
  if (!a.parabolic)
    fail_consistency("arc set is not parabolic");
  a.flag = flag_type(s.conj->roots(), a.qa);
  a.core = real_core(s).q;
  a.relation = compare_sets(a.core, a.qa);
  return a;
}

bool arc_invariance(const CRSpec& s) {
  return arc_set(s, nullptr) == arc_set(with_q(s, weak_reduction(s).q), nullptr);
}

std::vector<Chamber> fit_chambers(const CRSpec& s, std::uint64_t bound) {
  const RootSystem& rs = s.roots();
  std::vector<Chamber> out{find_fit_chamber(s.conj->roots(), s.q)};
  std::set<RootSet> seen{out[0].positives()};
  for (size_t i = 0; i < out.size(); ++i)
    for (int k = 0; k < rs.rank(); ++k) {
      if (!s.q[rs.negative(out[i].basis(k))]) continue;
      Chamber d = out[i].reflect_at(k);
      if (seen.insert(d.positives()).second) {
        if (out.size() >= bound)
          fail_bound("more than " + std::to_string(bound) + " fit chambers");
        out.push_back(std::move(d));
      }
    }
  return out;
}

KjReport kj_check(const CRSpec& s, std::uint64_t bound) {
  const RootSystem& rs = s.roots();
  const Conjugation& cj = *s.conj;
  auto kj = [&](const Chamber& c) {
    for (int i = 0; i < rs.size(); ++i)
      if (cj.complex(i) && c.positive(i) && !c.positive(cj.bar(i))) return false;
    return true;
  };
  KjReport r;
  if (kj(find_s_fit(s))) {
    r.holds = "true";
    r.method = "walk";
  } else {
    try {
      r.holds = "false";
      r.method = "fit-chamber search";
      for (const Chamber& c : fit_chambers(s, bound))
        if (s_fit_local(s, c) && kj(c)) {
          r.holds = "true";
          break;
        }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Enumeration) throw;
      r.holds = "unknown";
      r.method = "";
    }
  }
  RootSet qa = arc_set(s, nullptr);
  RootSet core = real_core(s).q;
  r.arc_equals_core = qa == core;
  RootSet qw = cr_weakening(s);
  RootSet sum = qw | s.conj->image(qw);
  r.weakening_sum_closed = is_closed(rs, sum);
  if (r.holds == "unknown" && !r.arc_equals_core) {
    // The condition forces Q_a = Q_e, so it fails here.
    r.holds = "false";
    r.method = "contrapositive";
  }
  return r;
}

} // namespace crflag
