// Real forms as involutions of the root lattice.
//
// A Conjugation is the map alpha -> conj(alpha) induced on the roots by the
// complex conjugation of g with respect to a real form, relative to a fixed
// Cartan subalgebra.  It carries compactness marks for imaginary roots and
// multiplicities for real roots.  Conjugations produced by a Cayley
// transform remember the conjugation they came from and the roots used.

#ifndef CRFLAG_REALFORM_HPP
#define CRFLAG_REALFORM_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crflag/lattice.hpp"

namespace crflag {

enum class RootKind { Real, Imaginary, Complex };
enum class Compactness { Compact, Noncompact };

class Conjugation;
using ConjugationPtr = std::shared_ptr<const Conjugation>;

class Conjugation {
public:
  // Throws Input if the matrix is not an involution of the root system
  // preserving the form.
  Conjugation(RootSystemPtr rs, IntMatrix sigma);

  const RootSystemPtr& roots() const { return rs_; }
  const IntMatrix& matrix() const { return sigma_; }
  // Index of conj(alpha_i).
  int bar(int i) const { return bar_[i]; }
  RootSet image(const RootSet& s) const;
  RootKind kind(int i) const;
  bool real(int i) const { return bar_[i] == i; }
  bool imaginary(int i) const { return bar_[i] == rs_->negative(i); }
  bool complex(int i) const { return !real(i) && !imaginary(i); }
  bool is_identity() const;

  std::optional<Compactness> mark(int i) const;
  // Throws CatalogGap when unmarked, Input when alpha_i is not imaginary.
  Compactness compactness(int i) const;
  std::optional<int> recorded_multiplicity(int i) const;
  // Throws CatalogGap when unrecorded, Input when alpha_i is not real.
  int multiplicity(int i) const;

  const std::string& name() const { return name_; }
  // "a", "b" or "" for the two lists of simply connected cases.
  const std::string& cor_list() const { return cor_list_; }

  // The conjugation this one was obtained from by a Cayley transform, or
  // null; and the roots of that transform.
  const ConjugationPtr& base() const { return base_; }
  const std::vector<int>& cayley() const { return cayley_; }

  // Construction helpers (used while assembling a value).
  void set_mark(int i, Compactness c);
  void set_multiplicity(int i, int m);
  void set_name(std::string n) { name_ = std::move(n); }
  void set_cor_list(std::string l) { cor_list_ = std::move(l); }
  void set_origin(ConjugationPtr base, std::vector<int> cayley) {
    base_ = std::move(base);
    cayley_ = std::move(cayley);
  }
  // Extends known marks through eps(a+b) = eps(a) eps(b) on imaginary roots;
  // throws Consistency on a contradiction.
  void propagate_marks();

private:
  RootSystemPtr rs_;
  IntMatrix sigma_;
  std::vector<int> bar_;
  std::vector<signed char> mark_;  // -1 unknown, 0 compact, 1 noncompact
  std::vector<int> mult_;          // 0 unknown
  std::string name_, cor_list_;
  ConjugationPtr base_;
  std::vector<int> cayley_;
};

struct ConjugationViolation {
  std::string invariant;  // "shape", "involution", "root permutation", "form"
  Root counterexample;
  std::string detail;
};

// First violated invariant of a candidate sigma* matrix, if any.
std::optional<ConjugationViolation> check_conjugation(const RootSystem& rs,
                                                      const IntMatrix& sigma);

// sigma*(v) for an integer vector in root coordinates.
Root apply_matrix(const IntMatrix& m, const Root& v);
IntMatrix reflection_matrix(const RootSystem& rs, int b);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SatakeEntry {
  std::string name;
  DynkinSpec dynkin;
  IntMatrix sigma;
  std::vector<Root> noncompact;
  std::vector<std::pair<Root, int>> multiplicities;
  std::string cor_list;
};

// Parses the catalog schema; throws Input on malformed data.
SatakeEntry parse_satake(const nlohmann::json& j);
nlohmann::json satake_to_json(const SatakeEntry& e);
// Validated conjugation; every imaginary root not listed as noncompact is
// compact.  Split forms without multiplicity data get multiplicity 1.
ConjugationPtr conjugation_from_entry(const SatakeEntry& e);

// Directory named by CRFLAG_CATALOG_DIR, else the built-in catalog.
std::string catalog_dir();
std::vector<std::string> catalog_names();
// Throws CatalogGap for unknown names.
const SatakeEntry& catalog_entry(const std::string& name);
ConjugationPtr load_real_form(const std::string& name);
ConjugationPtr load_real_form(const nlohmann::json& inline_entry);

RootKind classify_root(const Conjugation& c, int i);
const char* kind_name(RootKind k);

bool strongly_orthogonal(const RootSystem& rs, int a, int b);
// Throws Input naming the offending root or pair.
void validate_cayley(const Conjugation& c, const std::vector<int>& roots);
// sigma_new = s_{a_1} ... s_{a_m} sigma_old.
ConjugationPtr apply_cayley(const ConjugationPtr& c, const std::vector<int>& roots);

// Type A helper: "e1 - e7" -> root coordinates.  Throws Input.
Root parse_e_root(const RootSystem& rs, const std::string& s);

} // namespace crflag

#endif
