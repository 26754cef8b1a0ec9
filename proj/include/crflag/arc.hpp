// The parabolic set of the space of algebraic arc components, and its
// comparison with the real core.

#ifndef CRFLAG_ARC_HPP
#define CRFLAG_ARC_HPP

#include <string>
#include <vector>

#include "crflag/parabolic.hpp"

namespace crflag {

enum class ArcRelation { Equal, CoreInArc, ArcInCore, Incomparable };
const char* relation_name(ArcRelation r);
ArcRelation compare_sets(const RootSet& core, const RootSet& arc);

struct ArcReport {
  Root delta;                 // sum of Q^n n conj(Q^n), root coordinates
  bool delta_zero = false;    // then Q_a = R
  RootSet qa;
  std::vector<int> flag;      // nodes of Q_a in a fit chamber
  bool parabolic = false;
  bool stable = false;        // conj(Q_a) = Q_a
  RootSet core;
  ArcRelation relation = ArcRelation::Equal;
};

ArcReport arc_parabolic(const CRSpec& s);
// Q_a of s and of its weak reduction coincide.
bool arc_invariance(const CRSpec& s);

struct KjReport {
  std::string holds = "unknown";  // "true", "false", "unknown"
  std::string method;             // "walk", "fit-chamber search", "contrapositive"
  bool arc_equals_core = false;
  bool weakening_sum_closed = false;
};

// Existence of an S-fit chamber in which every positive complex root has a
// positive conjugate.  When it holds, the two consequences are recomputed.
KjReport kj_check(const CRSpec& s, std::uint64_t bound = kDefaultChamberBound);

// Chambers whose positive roots lie in Q, by reflections inside Q^r.
// Throws Enumeration above `bound`.
std::vector<Chamber> fit_chambers(const CRSpec& s, std::uint64_t bound = kDefaultChamberBound);

} // namespace crflag

#endif
