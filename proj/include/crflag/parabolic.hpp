// Parabolic sets, their Phi-representations, fit chambers and the
// dimension counts of a parabolic CR algebra.

#ifndef CRFLAG_PARABOLIC_HPP
#define CRFLAG_PARABOLIC_HPP

#include <vector>

#include "crflag/lattice.hpp"
#include "crflag/realform.hpp"

namespace crflag {

// Roots of Q whose negative is not in Q.
RootSet nil_part(const RootSystem& rs, const RootSet& q);
// Roots of Q whose negative is also in Q.
RootSet reductive_part(const RootSystem& rs, const RootSet& q);

bool is_closed(const RootSystem& rs, const RootSet& s);
bool is_parabolic(const RootSystem& rs, const RootSet& q);
// Throws Input when q is not parabolic.
void require_parabolic(const RootSystem& rs, const RootSet& q);

// Smallest closed set containing s.
RootSet additive_closure(const RootSystem& rs, RootSet s);
// Rank of the Z-span of a set of roots.
int span_rank(const RootSystem& rs, const RootSet& s);

// Q = {a > 0} u {a < 0 : supp(a) misses phi}.  Throws Input on bad nodes.
RootSet parabolic_from_phi(const Chamber& c, const std::vector<int>& phi);
bool is_fit(const Chamber& c, const RootSet& q);
// Nodes of c whose simple root lies in the nilpotent part.  Throws Input
// when c is not fit for q.
std::vector<int> phi_from_parabolic(const RootSet& q, const Chamber& c);
Chamber find_fit_chamber(const RootSystemPtr& rs, const RootSet& q);

struct CRSpec {
  ConjugationPtr conj;
  RootSet q;

  const RootSystem& roots() const { return *conj->roots(); }
  RootSet bar_q() const { return conj->image(q); }
};

// Throws Input when q is not a parabolic set of the conjugation's roots.
CRSpec make_spec(ConjugationPtr conj, RootSet q);
CRSpec with_q(const CRSpec& s, RootSet q);

// The four chamber conditions.  All of them also require c to be fit.
bool s_fit_local(const CRSpec& s, const Chamber& c);   // simple roots only
bool s_fit_global(const CRSpec& s, const Chamber& c);  // all complex roots
bool v_fit_local(const CRSpec& s, const Chamber& c);
bool v_fit_global(const CRSpec& s, const Chamber& c);

Chamber find_s_fit(const CRSpec& s);
Chamber find_v_fit(const CRSpec& s);

int cr_dim(const CRSpec& s);
int cr_codim(const CRSpec& s);
bool is_totally_real(const CRSpec& s);
bool is_totally_complex(const CRSpec& s);
// Real dimension of the orbit.
int orbit_dim(const CRSpec& s);

struct IsotropyDims {
  int n = 0, l = 0, s = 0, z = 0;
};
IsotropyDims isotropy_dims(const CRSpec& s);
// Roots of the nilradical of the isotropy.
RootSet isotropy_nil_roots(const CRSpec& s);

// Node indices of Q in any fit chamber.
std::vector<int> flag_type(const CRSpec& s);
std::vector<int> flag_type(const RootSystemPtr& rs, const RootSet& q);

std::vector<int> root_indices(const RootSet& s);

} // namespace crflag

#endif
