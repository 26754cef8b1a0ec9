#include "crflag/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "crflag/error.hpp"

namespace crflag {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = (int) m.size(), cols = (int) m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != Rational(0)) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rational(0)) continue;
      Rational f = m[i][c];
      for (int k = 0; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rational_rank(RatMatrix m) {
  return (int) rref(m).size();
}

std::optional<RatVector> solve_combination(const RatMatrix& rows, const RatVector& target) {
  // Solve A^T x = target by reducing the augmented transpose.
  int n = (int) rows.size(), d = (int) target.size();
  RatMatrix aug(d, RatVector(n + 1));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i)
      aug[j][i] = rows[i][j];
    aug[j][n] = target[j];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == n)
    return std::nullopt;
  RatVector x(n, Rational(0));
  for (size_t r = 0; r < piv.size(); ++r)
    x[piv[r]] = aug[r][n];
  return x;
}

// ---- IntLattice ------------------------------------------------------------

IntLattice::IntLattice(const std::vector<IntVector>& generators, int dim) : dim_(dim) {
  std::vector<IntVector> m;
  for (const auto& g : generators)
    if (std::any_of(g.begin(), g.end(), [](long long x) { return x != 0; }))
      m.push_back(g);
  int r = 0;
  for (int c = 0; c < dim_ && r < (int) m.size(); ++c) {
    // Euclid on column c among rows r..end
    for (;;) {
      int best = -1;
      for (int i = r; i < (int) m.size(); ++i)
        if (m[i][c] != 0 && (best < 0 || std::llabs(m[i][c]) < std::llabs(m[best][c])))
          best = i;
      if (best < 0) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (int i = r + 1; i < (int) m.size(); ++i) {
        if (m[i][c] == 0) continue;
        long long q = m[i][c] / m[r][c];
        for (int k = 0; k < dim_; ++k)
          m[i][k] -= q * m[r][k];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < (int) m.size() && m[r][c] != 0) {
      if (m[r][c] < 0)
        for (auto& x : m[r]) x = -x;
      pivot_.push_back(c);
      ++r;
    }
  }
  m.resize(r);
  basis_ = std::move(m);
}

std::optional<IntVector> IntLattice::coordinates(IntVector v) const {
  IntVector x(basis_.size(), 0);
  for (size_t i = 0; i < basis_.size(); ++i) {
    int c = pivot_[i];
    if (v[c] % basis_[i][c] != 0)
      return std::nullopt;
    long long q = v[c] / basis_[i][c];
    x[i] = q;
    for (int k = 0; k < dim_; ++k)
      v[k] -= q * basis_[i][k];
  }
  if (std::any_of(v.begin(), v.end(), [](long long t) { return t != 0; }))
    return std::nullopt;
  return x;
}

bool IntLattice::contains(IntVector v) const {
  return coordinates(std::move(v)).has_value();
}

// ---- Smith normal form -----------------------------------------------------

std::vector<long long> smith_diagonal(std::vector<IntVector> m) {
  std::vector<long long> diag;
  if (m.empty()) return diag;
  int rows = (int) m.size(), cols = (int) m[0].size();
  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi < 0 || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) goto finished;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        long long q = m[i][t] / m[t][t];
        if (q)
          for (int k = t; k < cols; ++k) m[i][k] -= q * m[t][k];
        if (m[i][t]) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        long long q = m[t][j] / m[t][t];
        if (q)
          for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j]) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the remaining block
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) { bad = i; break; }
      if (bad < 0) break;
      for (int k = t; k < cols; ++k) m[t][k] += m[bad][k];
    }
    diag.push_back(std::llabs(m[t][t]));
  }
finished:
  return diag;
}

std::vector<long long> abelian_invariants(const std::vector<IntVector>& relations, int n) {
  std::vector<long long> out;
  std::vector<long long> d;
  if (!relations.empty() && n > 0)
    d = smith_diagonal(relations);
  for (long long x : d)
    if (x != 1) out.push_back(x);
  for (int i = (int) d.size(); i < n; ++i)
    out.push_back(0);
  return out;
}

// ---- GF(2) -----------------------------------------------------------------

std::vector<int> gf2_rref(std::vector<Bits>& rows, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < (int) rows.size(); ++c) {
    int p = -1;
    for (int i = r; i < (int) rows.size(); ++i)
      if (rows[i][c]) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < (int) rows.size(); ++i)
      if (i != r && rows[i][c])
        for (int k = 0; k < ncols; ++k) rows[i][k] ^= rows[r][k];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int gf2_rank(std::vector<Bits> rows, int ncols) {
  return (int) gf2_rref(rows, ncols).size();
}

std::vector<Bits> gf2_nullspace(std::vector<Bits> rows, int ncols) {
  std::vector<int> piv = gf2_rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Bits> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Bits v(ncols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      if (rows[r][f]) v[piv[r]] = 1;
    basis.push_back(v);
  }
  return basis;
}

} // namespace crflag
