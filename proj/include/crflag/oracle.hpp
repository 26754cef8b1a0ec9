// Brute-force cross-checks of the chamber formulas.
//
// Each check sweeps every parabolic set of a root system (all chambers
// times all subsets of nodes) for one conjugation and compares the fast
// constructions against chamber-free definitions.

#ifndef CRFLAG_ORACLE_HPP
#define CRFLAG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crflag/parabolic.hpp"

namespace crflag {

constexpr int kOracleMaxRank = 4;

// Every parabolic set, sorted.  Throws Enumeration above rank 4 or when
// |W| exceeds `bound`.
std::vector<RootSet> all_parabolics(const RootSystemPtr& rs,
                                    std::uint64_t bound = kDefaultChamberBound);

// Intersection of all parabolic supersets of s.
RootSet smallest_parabolic_over(const std::vector<RootSet>& pars, const RootSet& s);
// The largest parabolic P with lo in P in hi, if there is a unique one.
std::optional<RootSet> largest_parabolic_between(const std::vector<RootSet>& pars,
                                                 const RootSet& lo, const RootSet& hi);

// Sets of pairwise strongly orthogonal positive real roots (standard
// chamber), the empty set first.
std::vector<std::vector<int>> cayley_variants(const Conjugation& conj,
                                              std::size_t limit = 4096);

// sigma* on A2 sending a1 -> a2, a2 -> -a1-a2; not an involution.
IntMatrix corrupted_sigma_fixture();

struct OracleFailure {
  std::string key;
  std::string detail;
};

struct OracleReport {
  std::string check;
  int cases = 0;
  int skipped = 0;  // cases needing unrecorded catalog data
  std::vector<OracleFailure> failures;
  bool passed() const { return failures.empty(); }
};

// "parabolicity", "reductions", "chambers", "weakening", "core", "arc",
// "fibers", "maximal", "topology".
const std::vector<std::string>& oracle_checks();

// Runs one named check over every parabolic set.  Failures are sorted by
// case key.  Throws Input for an unknown check.
OracleReport run_oracle(const ConjugationPtr& conj, const std::string& check,
                        std::uint64_t bound = kDefaultChamberBound);

// The conjugation invariants of a raw matrix as an oracle report.
OracleReport conjugation_oracle(const RootSystem& rs, const IntMatrix& sigma);

} // namespace crflag

#endif
