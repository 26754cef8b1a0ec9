// Root systems, Weyl chambers and reflections.
//
// Roots are integer vectors in the simple-root basis of the standard
// chamber.  The bilinear form is the symmetrized Cartan matrix, scaled so
// that short roots have squared length 2; hence (a|b^v) = 2(a|b)/(b|b) is
// always an integer.  Every other chamber is described in these fixed
// coordinates.

#ifndef CRFLAG_LATTICE_HPP
#define CRFLAG_LATTICE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace crflag {

using Root = std::vector<int>;
using RootSet = boost::dynamic_bitset<>;
using IntMatrix = std::vector<std::vector<int>>;

struct DynkinComponent {
  char type;  // 'A' .. 'G'
  int rank;
  bool operator==(const DynkinComponent& o) const {
    return type == o.type && rank == o.rank;
  }
};

struct DynkinSpec {
  std::vector<DynkinComponent> components;

  int rank() const;
  std::string str() const;  // "A2xA1"
  // Throws Input if some component has an invalid rank for its type.
  void validate() const;
  // Accepts "A6", "A2xA1", "B2+G2", "a3 x a3".
  static DynkinSpec parse(const std::string& s);
  bool operator==(const DynkinSpec& o) const { return components == o.components; }
};

class RootSystem {
public:
  explicit RootSystem(const DynkinSpec& spec);

  const DynkinSpec& dynkin() const { return dynkin_; }
  int rank() const { return rank_; }
  int size() const { return (int) roots_.size(); }
  int num_positive() const { return size() / 2; }

  const Root& root(int i) const { return roots_[i]; }
  // -1 when v is not a root.
  int index_of(const Root& v) const;
  // Throws Input when v is not a root.
  int require(const Root& v) const;
  // Index of the k-th simple root (0-based node k).
  int simple(int k) const { return k; }
  int negative(int i) const { return neg_[i]; }
  // Index of roots_[i] + roots_[j], or -1.
  int sum(int i, int j) const { return sum_[i * size() + j]; }
  // (alpha_i | alpha_j)
  int form(int i, int j) const { return form_[i * size() + j]; }
  int form(const Root& a, const Root& b) const;
  int norm(int i) const { return form(i, i); }
  // (alpha_i | alpha_j^v), the Cartan integer.
  int pairing(int i, int j) const { return 2 * form(i, j) / norm(j); }
  // Index of s_{alpha_b}(alpha_a).
  int reflect(int b, int a) const { return refl_[b * size() + a]; }
  // Height in the standard chamber.
  int height(int i) const { return height_[i]; }
  // Component of the Dynkin diagram containing node k.
  int component_of_node(int k) const { return node_comp_[k]; }

  const IntMatrix& bilinear() const { return bilinear_; }
  // cartan()[i][j] = (alpha_i | alpha_j^v)
  const IntMatrix& cartan() const { return cartan_; }

  RootSet none() const { return RootSet(roots_.size()); }
  RootSet all() const { RootSet s(roots_.size()); s.set(); return s; }
  RootSet negate(const RootSet& s) const;
  RootSet positive_roots() const;  // standard chamber

  // Order of the Weyl group, from the exponents read off the heights.
  std::uint64_t weyl_order() const;

private:
  DynkinSpec dynkin_;
  int rank_ = 0;
  IntMatrix bilinear_, cartan_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<int> neg_, sum_, form_, refl_, height_, node_comp_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const DynkinSpec& spec);
RootSystemPtr build_root_system(const std::string& spec);

// |W| of a root system whose positive roots have the given heights.
std::uint64_t weyl_order_from_heights(const std::vector<int>& heights);

class Chamber {
public:
  static Chamber standard(RootSystemPtr rs);
  // The chamber of a regular functional f, given by its values on the
  // standard simple roots.  Nodes are labelled by transport from the
  // standard chamber along a reflection walk.
  static Chamber from_functional(RootSystemPtr rs, const std::vector<long long>& f);

  // s_b(C) for b the simple root at `node`; node labels are transported.
  Chamber reflect_at(int node) const;

  const RootSystemPtr& roots() const { return rs_; }
  int rank() const { return rs_->rank(); }
  bool positive(int i) const { return pos_[i]; }
  const RootSet& positives() const { return pos_; }
  int basis(int node) const { return basis_[node]; }
  const std::vector<int>& basis() const { return basis_; }
  // Node of a simple root, or -1.
  int node_of(int root) const;
  // Coefficients of roots_[i] in the simple basis of this chamber.
  std::span<const int> coords(int i) const {
    return {coords_.data() + (std::size_t) i * basis_.size(), basis_.size()};
  }
  // Nodes with nonzero coefficient.
  std::vector<int> support(int i) const;
  const std::vector<long long>& functional() const { return f_; }
  long long value(int i) const;

  bool operator==(const Chamber& o) const { return pos_ == o.pos_; }
  bool operator!=(const Chamber& o) const { return pos_ != o.pos_; }

private:
  RootSystemPtr rs_;
  std::vector<long long> f_;
  RootSet pos_;
  std::vector<int> basis_;
  std::vector<int> coords_;
};

using WeylWord = std::vector<int>;

// Applies the word left to right, each letter a node of the current chamber.
Chamber apply_word(const Chamber& c, const WeylWord& w);

// Permutation of root indices induced by w = s_{k1} ... s_{kn}, the letters
// being simple reflections of chamber c.
std::vector<int> word_permutation(const Chamber& c, const WeylWord& w);

constexpr std::uint64_t kDefaultChamberBound = 2000;

// Every chamber exactly once (breadth-first from the standard chamber).
// Throws Enumeration when |W| exceeds `bound`.
std::vector<Chamber> enumerate_chambers(RootSystemPtr rs,
                                        std::uint64_t bound = kDefaultChamberBound);

// |W| of the subsystem spanned by the given nodes of chamber c.
std::uint64_t weyl_order_of_nodes(const Chamber& c, const std::vector<int>& nodes);

// Nodes (0-based) as a printable "{1,2,4}" list (1-based).
std::string format_nodes(const std::vector<int>& nodes);
std::string format_root(const Root& r);

} // namespace crflag

#endif
