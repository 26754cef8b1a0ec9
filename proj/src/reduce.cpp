#include "crflag/reduce.hpp"

#include <algorithm>

#include "crflag/error.hpp"

namespace crflag {

RootSet cr_weakening(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  return nil_part(rs, s.q) | (reductive_part(rs, s.q) & s.bar_q());
}

Reduction fundamental_reduction(const CRSpec& s) {
  return fundamental_reduction_in(s, find_s_fit(s));
}

Reduction fundamental_reduction_in(const CRSpec& s, const Chamber& chamber) {
  const RootSystem& rs = s.roots();
  const Conjugation& cj = *s.conj;
  Reduction r{chamber, {}, {}, {}};
  r.phi = phi_from_parabolic(s.q, r.chamber);
  const Chamber& c = r.chamber;
  RootSet bar_qn = cj.image(nil_part(rs, s.q));
  std::vector<bool> in_phi(rs.rank(), false), blocked(rs.rank(), false);
  for (int k : r.phi) in_phi[k] = true;
  for (int k = 0; k < rs.rank(); ++k) {
    int b = c.basis(k);
    bool minus = in_phi[k] && !c.positive(cj.bar(b));
    if (in_phi[k] && !minus) continue;
    for (int j : c.support(cj.bar(b))) blocked[j] = true;
  }
  for (int k : r.phi)
    if (bar_qn[c.basis(k)] && !blocked[k]) r.psi.push_back(k);
  r.q = parabolic_from_phi(c, r.psi);
  return r;
}

bool is_fundamental(const CRSpec& s) {
  return fundamental_reduction(s).psi.empty();
}

Reduction weak_reduction(const CRSpec& s) {
  return weak_reduction_in(s, find_v_fit(s));
}

Reduction weak_reduction_in(const CRSpec& s, const Chamber& chamber) {
  const Conjugation& cj = *s.conj;
  Reduction r{chamber, {}, {}, {}};
  r.phi = phi_from_parabolic(s.q, r.chamber);
  for (int k : r.phi)
    if (r.chamber.positive(cj.bar(r.chamber.basis(k)))) r.psi.push_back(k);
  r.q = parabolic_from_phi(r.chamber, r.psi);
  return r;
}

bool is_holomorphically_nondegenerate(const CRSpec& s) {
  Reduction r = weak_reduction(s);
  return r.psi == r.phi;
}

bool is_strictly_nondegenerate(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  RootSet bq = s.bar_q();
  RootSet sum = s.q | bq;
  for (int a : root_indices(s.q - bq)) {
    bool degenerate = true;
    for (int b : root_indices(bq)) {
      int k = rs.sum(a, b);
      if (k >= 0 && !sum[k]) {
        degenerate = false;
        break;
      }
    }
    if (degenerate) return false;
  }
  return true;
}

const char* tag_name(StageTag t) {
  switch (t) {
    case StageTag::Initial: return "initial";
    case StageTag::WeakReduction: return "weak_reduction";
    case StageTag::Weakening: return "weakening";
    case StageTag::Core: return "core";
  }
  return "?";
}

CoreResult real_core(const CRSpec& s) {
  CoreResult out;
  Chamber c0 = find_fit_chamber(s.conj->roots(), s.q);
  out.trace.push_back({StageTag::Initial, -1, s.q, c0, phi_from_parabolic(s.q, c0)});
  Reduction r = weak_reduction(s);
  out.trace.push_back({StageTag::WeakReduction, 0, r.q, r.chamber, r.psi});
  RootSet cur = r.q;
  for (int h = 0; h <= kMaxCoreIterations; ++h) {
    CRSpec sh = with_q(s, cur);
    if (sh.bar_q() == cur) {
      out.q = cur;
      out.iterations = h;
      Chamber c = find_s_fit(sh);
      out.trace.push_back({StageTag::Core, h, cur, c, phi_from_parabolic(cur, c)});
      return out;
    }
    RootSet w = cr_weakening(sh);
    Chamber cw = find_fit_chamber(s.conj->roots(), w);
    out.trace.push_back({StageTag::Weakening, h, w, cw, phi_from_parabolic(w, cw)});
    Reduction next = weak_reduction(with_q(s, w));
    if (next.q == cur)
      fail_consistency("real core iteration stalled at a conj-unstable parabolic");
    out.trace.push_back({StageTag::WeakReduction, h + 1, next.q, next.chamber, next.psi});
    cur = next.q;
  }
  fail_consistency("real core iteration exceeded " + std::to_string(kMaxCoreIterations) +
                   " steps");
}

FibrationPredicates fibration_predicates(const CRSpec& source, const CRSpec& target) {
  RootSet iso_src = source.q & source.bar_q();
  RootSet iso_tgt = target.q & target.bar_q();
  if (!iso_src.is_subset_of(iso_tgt))
    fail_input("isotropy of the source is not contained in that of the target");
  FibrationPredicates p;
  p.is_cr_map = source.q.is_subset_of(target.q);
  p.is_cr_submersion = p.is_cr_map && target.q.is_subset_of(source.q | iso_tgt);
  p.has_complex_fibers = p.is_cr_map && target.q.is_subset_of(source.q | source.bar_q());
  return p;
}

FiberReport fiber_structure_report(const CRSpec& source, const CRSpec& target) {
  if (!source.q.is_subset_of(target.q))
    fail_input("source parabolic is not contained in the target parabolic");
  const RootSystem& rs = target.roots();
  FiberReport f;
  RootSet qr = reductive_part(rs, target.q);
  f.sub_roots = qr & target.conj->image(qr);
  f.sub_rank = span_rank(rs, f.sub_roots);
  f.induced = source.q & f.sub_roots;
  RootSet src_iso = source.q & source.bar_q();
  f.induced_cr_dim = (int) f.induced.count() - (int) (f.induced & src_iso).count();
  RootSet n = isotropy_nil_roots(target);
  f.nil_complex_dim = (int) (source.q & n).count() - (int) (src_iso & n).count();
  f.cr_dim = f.induced_cr_dim + f.nil_complex_dim;
  f.real_dim = orbit_dim(source) - orbit_dim(target);
  return f;
}

std::vector<std::vector<int>> maximal_cr_structures(const CRSpec& s) {
  Chamber c = find_s_fit(s);
  std::vector<int> phi = phi_from_parabolic(s.q, c);
  RootSet iso = s.q & s.bar_q();
  int m = (int) phi.size();
  if (m > 20)
    fail_bound("too many simple roots in Phi for subset enumeration");
  std::vector<unsigned> good;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> psi;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) psi.push_back(phi[i]);
    RootSet q = parabolic_from_phi(c, psi);
    if ((q & s.conj->image(q)) == iso) good.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (unsigned g : good) {
    bool minimal = std::none_of(good.begin(), good.end(), [g](unsigned h) {
      return h != g && (h & g) == h;
    });
    if (!minimal) continue;
    std::vector<int> psi;
    for (int i = 0; i < m; ++i)
      if (g >> i & 1u) psi.push_back(phi[i]);
    out.push_back(psi);
  }
  return out;
}

bool is_maximal(const CRSpec& s) {
  Chamber c = find_s_fit(s);
  std::vector<int> phi = phi_from_parabolic(s.q, c);
  std::vector<bool> in_phi(s.roots().rank(), false);
  for (int k : phi) in_phi[k] = true;
  for (int k : phi) {
    int bar = s.conj->bar(c.basis(k));
    if (!c.positive(bar)) continue;
    for (int j : c.support(bar))
      if (j != k && in_phi[j]) return false;
  }
  return true;
}

} // namespace crflag
