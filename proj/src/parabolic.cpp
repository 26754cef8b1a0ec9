#include "crflag/parabolic.hpp"

#include <algorithm>

#include "crflag/error.hpp"
#include "crflag/linalg.hpp"

namespace crflag {

std::vector<int> root_indices(const RootSet& s) {
  std::vector<int> out;
  for (size_t i = s.find_first(); i != RootSet::npos; i = s.find_next(i))
    out.push_back((int) i);
  return out;
}

RootSet nil_part(const RootSystem& rs, const RootSet& q) {
  return q - rs.negate(q);
}

RootSet reductive_part(const RootSystem& rs, const RootSet& q) {
  return q & rs.negate(q);
}

bool is_closed(const RootSystem& rs, const RootSet& s) {
  for (size_t i = s.find_first(); i != RootSet::npos; i = s.find_next(i))
    for (size_t j = s.find_first(); j != RootSet::npos; j = s.find_next(j)) {
      int k = rs.sum((int) i, (int) j);
      if (k >= 0 && !s[k]) return false;
    }
  return true;
}

bool is_parabolic(const RootSystem& rs, const RootSet& q) {
  if ((int) q.size() != rs.size()) return false;
  return (q | rs.negate(q)).all() && is_closed(rs, q);
}

void require_parabolic(const RootSystem& rs, const RootSet& q) {
  if ((int) q.size() != rs.size())
    fail_input("root set has the wrong size");
  for (int i = 0; i < rs.size(); ++i)
    if (!q[i] && !q[rs.negative(i)])
      fail_input("not parabolic: neither " + format_root(rs.root(i)) +
                 " nor its negative is in Q");
  for (int i = 0; i < rs.size(); ++i)
    for (int j = 0; j < rs.size(); ++j) {
      int k = rs.sum(i, j);
      if (q[i] && q[j] && k >= 0 && !q[k])
        fail_input("not parabolic: " + format_root(rs.root(i)) + " + " +
                   format_root(rs.root(j)) + " is missing");
    }
}

RootSet additive_closure(const RootSystem& rs, RootSet s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : root_indices(s))
      for (int j : root_indices(s)) {
        int k = rs.sum(i, j);
        if (k >= 0 && !s[k]) {
          s.set(k);
          changed = true;
        }
      }
  }
  return s;
}

int span_rank(const RootSystem& rs, const RootSet& s) {
  RatMatrix m;
  for (int i : root_indices(s)) {
    RatVector row;
    for (int x : rs.root(i)) row.emplace_back(x);
    m.push_back(row);
  }
  return rational_rank(m);
}

RootSet parabolic_from_phi(const Chamber& c, const std::vector<int>& phi) {
  const RootSystem& rs = *c.roots();
  std::vector<bool> in(rs.rank(), false);
  for (int k : phi) {
    if (k < 0 || k >= rs.rank())
      fail_input("node " + std::to_string(k + 1) + " is out of range 1.." +
                 std::to_string(rs.rank()));
    in[k] = true;
  }
  RootSet q(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    if (c.positive(i)) {
      q.set(i);
      continue;
    }
    bool meets = false;
    for (int k : c.support(i))
      if (in[k]) meets = true;
    if (!meets) q.set(i);
  }
  return q;
}

bool is_fit(const Chamber& c, const RootSet& q) {
  return c.positives().is_subset_of(q);
}

std::vector<int> phi_from_parabolic(const RootSet& q, const Chamber& c) {
  if (!is_fit(c, q))
    fail_input("chamber is not fit for Q");
  const RootSystem& rs = *c.roots();
  std::vector<int> phi;
  for (int k = 0; k < rs.rank(); ++k)
    if (!q[rs.negative(c.basis(k))]) phi.push_back(k);
  return phi;
}

Chamber find_fit_chamber(const RootSystemPtr& rs, const RootSet& q) {
  RootSet qn = nil_part(*rs, q);
  int r = rs->rank();
  // delta = sum of Q^n; (delta|a) > 0 on Q^n and = 0 on Q^r.
  std::vector<long long> delta(r, 0);
  for (int i : root_indices(qn))
    for (int k = 0; k < r; ++k) delta[k] += rs->root(i)[k];
  auto pair = [&](int i) {
    long long v = 0;
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j)
        v += delta[k] * rs->bilinear()[k][j] * rs->root(i)[j];
    return v;
  };
  int maxh = 0;
  for (int i = 0; i < rs->size(); ++i) maxh = std::max(maxh, rs->height(i));
  long long big = maxh + 1;
  std::vector<long long> f(r);
  for (int k = 0; k < r; ++k) f[k] = big * pair(rs->simple(k)) + 1;
  for (int i : root_indices(qn))
    if (pair(i) <= 0)
      fail_consistency("weight of Q^n is not positive on " + format_root(rs->root(i)));
  Chamber c = Chamber::from_functional(rs, f);
  if (!is_fit(c, q))
    fail_consistency("seed chamber is not fit");
  return c;
}

CRSpec make_spec(ConjugationPtr conj, RootSet q) {
  require_parabolic(*conj->roots(), q);
  return CRSpec{std::move(conj), std::move(q)};
}

CRSpec with_q(const CRSpec& s, RootSet q) {
  return CRSpec{s.conj, std::move(q)};
}

bool s_fit_local(const CRSpec& s, const Chamber& c) {
  if (!is_fit(c, s.q)) return false;
  const Conjugation& cj = *s.conj;
  const RootSystem& rs = s.roots();
  for (int k = 0; k < rs.rank(); ++k) {
    int b = c.basis(k);
    if (!s.q[rs.negative(b)] || cj.imaginary(b)) continue;  // b in Phi or imaginary
    if (!c.positive(cj.bar(b))) return false;
  }
  return true;
}

bool s_fit_global(const CRSpec& s, const Chamber& c) {
  if (!is_fit(c, s.q)) return false;
  const Conjugation& cj = *s.conj;
  const RootSystem& rs = s.roots();
  RootSet qn = nil_part(rs, s.q);
  for (int a = 0; a < rs.size(); ++a) {
    if (!cj.complex(a) || !c.positive(a) || c.positive(cj.bar(a))) continue;
    if (!qn[a] || !qn[rs.negative(cj.bar(a))]) return false;
  }
  return true;
}

bool v_fit_local(const CRSpec& s, const Chamber& c) {
  if (!is_fit(c, s.q)) return false;
  const Conjugation& cj = *s.conj;
  const RootSystem& rs = s.roots();
  for (int k = 0; k < rs.rank(); ++k) {
    int b = c.basis(k);
    if (!s.q[rs.negative(b)] || cj.real(b)) continue;
    if (c.positive(cj.bar(b))) return false;
  }
  return true;
}

bool v_fit_global(const CRSpec& s, const Chamber& c) {
  if (!is_fit(c, s.q)) return false;
  const Conjugation& cj = *s.conj;
  const RootSystem& rs = s.roots();
  RootSet qn = nil_part(rs, s.q);
  for (int a = 0; a < rs.size(); ++a) {
    if (!cj.complex(a) || !c.positive(a) || !c.positive(cj.bar(a))) continue;
    if (!qn[a] || !qn[cj.bar(a)]) return false;
  }
  return true;
}

namespace {

// Reflection walk: at each step, reflect at the violating simple root of
// Q^r with the lexicographically smallest coordinates.
template <class Violates>
Chamber walk(const CRSpec& s, Violates violates) {
  const RootSystem& rs = s.roots();
  Chamber c = find_fit_chamber(s.conj->roots(), s.q);
  for (int step = 0; step <= rs.size(); ++step) {
    int best = -1;
    for (int k = 0; k < rs.rank(); ++k) {
      int b = c.basis(k);
      if (!s.q[rs.negative(b)] || !violates(c, b)) continue;
      if (best < 0 || rs.root(b) < rs.root(c.basis(best))) best = k;
    }
    if (best < 0) return c;
    c = c.reflect_at(best);
  }
  fail_consistency("fit-chamber walk did not terminate");
}

} // namespace

Chamber find_s_fit(const CRSpec& s) {
  const Conjugation& cj = *s.conj;
  return walk(s, [&](const Chamber& c, int b) {
    return cj.complex(b) && !c.positive(cj.bar(b));
  });
}

Chamber find_v_fit(const CRSpec& s) {
  const Conjugation& cj = *s.conj;
  return walk(s, [&](const Chamber& c, int b) {
    return !cj.real(b) && c.positive(cj.bar(b));
  });
}

int cr_dim(const CRSpec& s) {
  return (int) s.q.count() - (int) (s.q & s.bar_q()).count();
}

int cr_codim(const CRSpec& s) {
  return s.roots().size() - (int) (s.q | s.bar_q()).count();
}

bool is_totally_real(const CRSpec& s) { return cr_dim(s) == 0; }
bool is_totally_complex(const CRSpec& s) { return cr_codim(s) == 0; }

int orbit_dim(const CRSpec& s) {
  return s.roots().size() - (int) (s.q & s.bar_q()).count();
}

RootSet isotropy_nil_roots(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  RootSet qn = nil_part(rs, s.q);
  RootSet bq = s.bar_q();
  return (qn & bq) | (s.conj->image(qn) & s.q);
}

IsotropyDims isotropy_dims(const CRSpec& s) {
  const RootSystem& rs = s.roots();
  RootSet qr = reductive_part(rs, s.q);
  RootSet l = qr & s.conj->image(qr);
  int sr = span_rank(rs, l);
  IsotropyDims d;
  d.n = (int) isotropy_nil_roots(s).count();
  d.l = rs.rank() + (int) l.count();
  d.s = (int) l.count() + sr;
  d.z = rs.rank() - sr;
  return d;
}

std::vector<int> flag_type(const RootSystemPtr& rs, const RootSet& q) {
  return phi_from_parabolic(q, find_fit_chamber(rs, q));
}

std::vector<int> flag_type(const CRSpec& s) {
  return flag_type(s.conj->roots(), s.q);
}

} // namespace crflag
