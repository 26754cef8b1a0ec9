// Exact linear algebra: rational row reduction, integer lattices,
// Smith normal form, and GF(2) elimination.

#ifndef CRFLAG_LINALG_HPP
#define CRFLAG_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace crflag {

using Rational = boost::rational<long long>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;
using IntVector = std::vector<long long>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m);
int rational_rank(RatMatrix m);

// Coefficients x with sum_i x_i rows[i] = target, if any.
std::optional<RatVector> solve_combination(const RatMatrix& rows, const RatVector& target);

// Z-span of a finite set of integer vectors, kept in row echelon form.
class IntLattice {
public:
  IntLattice(const std::vector<IntVector>& generators, int dim);
  bool contains(IntVector v) const;
  int rank() const { return (int) basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  // Coordinates of v in basis(), if v lies in the lattice.
  std::optional<IntVector> coordinates(IntVector v) const;
private:
  int dim_;
  std::vector<IntVector> basis_;
  std::vector<int> pivot_;
};

// Diagonal of the Smith normal form (nonzero entries, each dividing the next).
std::vector<long long> smith_diagonal(std::vector<IntVector> m);

// Invariant factors of Z^n / (row span of relations).  Entries of 1 are
// dropped; each free summand contributes a 0, listed last.
std::vector<long long> abelian_invariants(const std::vector<IntVector>& relations, int n);

using Bits = std::vector<std::uint8_t>;

// GF(2) reduced row echelon form in place; returns pivot columns.
std::vector<int> gf2_rref(std::vector<Bits>& rows, int ncols);
int gf2_rank(std::vector<Bits> rows, int ncols);
// Basis of {x : rows x = 0}, one vector per free column in increasing order.
std::vector<Bits> gf2_nullspace(std::vector<Bits> rows, int ncols);

} // namespace crflag

#endif
