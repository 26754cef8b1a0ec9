// Fundamental groups of real flag manifolds and of orbits, fiber
// component counts, and Euler characteristics of complex flag manifolds.
//
// Groups are reported through their abelianization.  A fundamental group
// of an orbit is described as the subgroup of the fundamental group of its
// real core cut out by mod 2 conditions, one block per simple ideal of the
// semisimple part of the core's isotropy.

#ifndef CRFLAG_TOPO_HPP
#define CRFLAG_TOPO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "crflag/linalg.hpp"
#include "crflag/parabolic.hpp"

namespace crflag {

struct GroupPresentation {
  Chamber chamber;                         // S-fit chamber of the core
  std::vector<int> phi;                    // nodes of the core
  std::vector<int> generators;             // nodes: real, multiplicity 1
  std::vector<int> killed;                 // generators outside phi
  std::vector<std::vector<int>> pairing;   // (a|b^v) mod 2 over generators
  std::vector<IntVector> relations;        // abelianized, over generators
  std::vector<long long> invariants;       // of the abelianization

  std::vector<int> surviving() const;
};

// The real flag manifold of the conj-stable parabolic set e, where conj is
// the conjugation of a maximally split Cartan.  Throws CatalogGap when a
// multiplicity is not recorded.
GroupPresentation pi1_real_flag(const ConjugationPtr& conj, const RootSet& e);

// (a_j | beta^v) mod 2 for each Cayley root a_j.
std::vector<int> cayley_weyl_exponents(const RootSystem& rs, int beta,
                                       const std::vector<int>& cayley);

// Whether s_{a_1}^{c_1} ... s_{a_m}^{c_m} lies in the analytic Weyl group of
// the ideal with root set `ideal`: sum c_j a_j^v in 2 pr(coroot lattice),
// pr the orthogonal projection onto the span of the imaginary roots.
bool weyl_kernel_test(const Conjugation& conj, const RootSet& ideal,
                      const std::vector<int>& cayley, const Bits& c);

struct IdealBlock {
  std::vector<int> nodes;      // nodes of the core chamber
  RootSet roots;
  std::vector<int> cayley;     // Cayley roots lying in this ideal
  std::vector<Bits> kernel;    // basis of the admissible exponent vectors
};

struct SubgroupDescription {
  GroupPresentation ambient;
  RootSet core;
  std::vector<int> cayley;
  std::vector<IdealBlock> ideals;
  std::vector<Bits> conditions;          // columns: ambient.surviving()
  std::vector<Bits> kernel_basis;        // exponent vectors, same columns
  std::vector<std::string> generator_words;
  long long index = 1;
  std::vector<long long> image_invariants;
  bool killed_consistent = true;
  std::string cayley_in_e = "unknown";   // "true", "false", "unknown"
  std::string max_noncompact = "unknown";
};

// Image of pi1 of the orbit of s in pi1 of the real flag manifold of the
// conj-stable parabolic e (normally the real core of s).
SubgroupDescription orbit_subgroup(const CRSpec& s, const RootSet& e);
SubgroupDescription pi1_orbit(const CRSpec& s);

// Components of the typical fiber of the orbit map for source -> target.
// The target must be totally real; throws Input otherwise.
long long fiber_component_count(const CRSpec& source, const CRSpec& target);

// "passed" when no imaginary root lies in Q^r n conj(Q^r), "failed" when a
// noncompact one does, "unknown" when an unmarked one does.
std::string max_noncompact_check(const CRSpec& s);

// |W| / |W of the nodes outside phi|, in the standard chamber.
std::uint64_t euler_complex_flag(const RootSystemPtr& rs, const std::vector<int>& phi);

// "x2*x4*x6" over the given nodes; "1" for the empty word.
std::string format_word(const std::vector<int>& nodes, const Bits& exps);

} // namespace crflag

#endif
