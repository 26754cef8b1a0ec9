// Canonical constructions on a parabolic CR algebra: CR-weakening,
// fundamental and weakly nondegenerate reductions, the real core, CR
// fibration predicates, fiber reports and maximal CR structures.

#ifndef CRFLAG_REDUCE_HPP
#define CRFLAG_REDUCE_HPP

#include <string>
#include <vector>

#include "crflag/parabolic.hpp"

namespace crflag {

// Q_w = Q^n u (Q^r n conj(Q)).
RootSet cr_weakening(const CRSpec& s);

struct Reduction {
  Chamber chamber;        // S-fit or V-fit chamber used
  std::vector<int> phi;   // nodes of Q in that chamber
  std::vector<int> psi;   // nodes of the reduced parabolic
  RootSet q;              // the reduced parabolic set
};

// Smallest parabolic containing Q u conj(Q), via an S-fit chamber.
Reduction fundamental_reduction(const CRSpec& s);
// The same formula in a given S-fit chamber.
Reduction fundamental_reduction_in(const CRSpec& s, const Chamber& c);
bool is_fundamental(const CRSpec& s);

// Largest parabolic between Q and Q u conj(Q), via a V-fit chamber.
Reduction weak_reduction(const CRSpec& s);
// The same formula in a given V-fit chamber.
Reduction weak_reduction_in(const CRSpec& s, const Chamber& c);
bool is_holomorphically_nondegenerate(const CRSpec& s);

// Root-level test of q n conj(q) = {Z in q : [Z, conj(q)] in q + conj(q)}.
bool is_strictly_nondegenerate(const CRSpec& s);

enum class StageTag { Initial, WeakReduction, Weakening, Core };
const char* tag_name(StageTag t);

struct Stage {
  StageTag tag;
  int h;                  // iteration index of the sequence q^(h)
  RootSet q;
  Chamber chamber;
  std::vector<int> phi;
};

struct CoreResult {
  RootSet q;
  int iterations = 0;     // the h with q^(h) = e
  std::vector<Stage> trace;
};

constexpr int kMaxCoreIterations = 64;

// q^(0) = weak reduction of q, q^(h+1) = weak reduction of q^(h)_w,
// stopped at the first conj-stable term.
CoreResult real_core(const CRSpec& s);

struct FibrationPredicates {
  bool is_cr_map = false;
  bool is_cr_submersion = false;
  bool has_complex_fibers = false;
};

// For the map M' -> M of the orbits of `source` and `target`.  Throws
// Input unless the isotropy of `source` lies in that of `target`.
FibrationPredicates fibration_predicates(const CRSpec& source, const CRSpec& target);

struct FiberReport {
  RootSet sub_roots;      // Q^r n conj(Q^r) of the target
  RootSet induced;        // Q' n sub_roots
  int sub_rank = 0;       // rank of the span of sub_roots
  int induced_cr_dim = 0;
  int nil_complex_dim = 0;
  int cr_dim = 0;         // induced_cr_dim + nil_complex_dim
  int real_dim = 0;
};

// Requires Q' contained in Q; throws Input otherwise.
FiberReport fiber_structure_report(const CRSpec& source, const CRSpec& target);

// Every minimal Psi in Phi (S-fit chamber) with
// Q_Psi n conj(Q_Psi) = Q n conj(Q).
std::vector<std::vector<int>> maximal_cr_structures(const CRSpec& s);
bool is_maximal(const CRSpec& s);

} // namespace crflag

#endif
