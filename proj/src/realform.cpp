#include "crflag/realform.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "crflag/error.hpp"

#ifndef CRFLAG_DEFAULT_CATALOG_DIR
#define CRFLAG_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace crflag {

using nlohmann::json;

Root apply_matrix(const IntMatrix& m, const Root& v) {
  Root out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      out[i] += m[i][j] * v[j];
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (size_t j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix reflection_matrix(const RootSystem& rs, int b) {
  int r = rs.rank();
  IntMatrix m(r, std::vector<int>(r, 0));
  for (int j = 0; j < r; ++j) {
    Root col = rs.root(rs.reflect(b, rs.simple(j)));
    for (int i = 0; i < r; ++i)
      m[i][j] = col[i];
  }
  return m;
}

std::optional<ConjugationViolation> check_conjugation(const RootSystem& rs,
                                                      const IntMatrix& sigma) {
  int r = rs.rank();
  if ((int) sigma.size() != r ||
      std::any_of(sigma.begin(), sigma.end(),
                  [r](const std::vector<int>& row) { return (int) row.size() != r; }))
    return ConjugationViolation{"shape", {}, "sigma_star must be " +
                                std::to_string(r) + "x" + std::to_string(r)};
  for (int i = 0; i < rs.size(); ++i) {
    const Root& a = rs.root(i);
    if (apply_matrix(sigma, apply_matrix(sigma, a)) != a)
      return ConjugationViolation{"involution", a, "sigma*(sigma*(a)) != a"};
  }
  for (int i = 0; i < rs.size(); ++i) {
    Root b = apply_matrix(sigma, rs.root(i));
    if (rs.index_of(b) < 0)
      return ConjugationViolation{"root permutation", rs.root(i),
                                  "image " + format_root(b) + " is not a root"};
  }
  for (int i = 0; i < rs.size(); ++i)
    for (int j = 0; j < rs.size(); ++j) {
      Root a = apply_matrix(sigma, rs.root(i));
      Root b = apply_matrix(sigma, rs.root(j));
      if (rs.form(a, b) != rs.form(i, j))
        return ConjugationViolation{"form", rs.root(i),
                                    "paired with " + format_root(rs.root(j))};
    }
  return std::nullopt;
}

// ---- Conjugation -----------------------------------------------------------

Conjugation::Conjugation(RootSystemPtr rs, IntMatrix sigma)
  : rs_(std::move(rs)), sigma_(std::move(sigma)) {
  if (auto v = check_conjugation(*rs_, sigma_))
    fail_input("invalid sigma_star (" + v->invariant + "): " +
               (v->counterexample.empty() ? "" : "root " + format_root(v->counterexample) + ", ") +
               v->detail);
  int n = rs_->size();
  bar_.resize(n);
  for (int i = 0; i < n; ++i)
    bar_[i] = rs_->index_of(apply_matrix(sigma_, rs_->root(i)));
  mark_.assign(n, -1);
  mult_.assign(n, 0);
}

RootSet Conjugation::image(const RootSet& s) const {
  RootSet out(s.size());
  for (size_t i = s.find_first(); i != RootSet::npos; i = s.find_next(i))
    out.set(bar_[i]);
  return out;
}

RootKind Conjugation::kind(int i) const {
  if (real(i)) return RootKind::Real;
  if (imaginary(i)) return RootKind::Imaginary;
  return RootKind::Complex;
}

bool Conjugation::is_identity() const {
  for (int i = 0; i < (int) bar_.size(); ++i)
    if (bar_[i] != i) return false;
  return true;
}

std::optional<Compactness> Conjugation::mark(int i) const {
  if (mark_[i] < 0) return std::nullopt;
  return mark_[i] ? Compactness::Noncompact : Compactness::Compact;
}

Compactness Conjugation::compactness(int i) const {
  if (!imaginary(i))
    fail_input("compactness requested for " + format_root(rs_->root(i)) +
               ", which is " + kind_name(kind(i)) + ", not imaginary");
  auto m = mark(i);
  if (!m)
    fail_gap("compactness of imaginary root " + format_root(rs_->root(i)) +
             " is not known for " + (name_.empty() ? "this conjugation" : name_));
  return *m;
}

std::optional<int> Conjugation::recorded_multiplicity(int i) const {
  if (mult_[i] == 0) return std::nullopt;
  return mult_[i];
}

int Conjugation::multiplicity(int i) const {
  if (!real(i))
    fail_input("multiplicity requested for " + format_root(rs_->root(i)) +
               ", which is not real");
  if (mult_[i] == 0)
    fail_gap("multiplicity of real root " + format_root(rs_->root(i)) +
             " is not recorded for " + (name_.empty() ? "this conjugation" : name_));
  return mult_[i];
}

void Conjugation::set_mark(int i, Compactness c) {
  if (!imaginary(i))
    fail_input("compactness mark on non-imaginary root " + format_root(rs_->root(i)));
  signed char v = c == Compactness::Noncompact ? 1 : 0;
  mark_[i] = mark_[rs_->negative(i)] = v;
}

void Conjugation::set_multiplicity(int i, int m) {
  if (!real(i))
    fail_input("multiplicity on non-real root " + format_root(rs_->root(i)));
  if (m < 1)
    fail_input("multiplicity must be positive");
  mult_[i] = mult_[rs_->negative(i)] = m;
}

void Conjugation::propagate_marks() {
  int n = rs_->size();
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (!imaginary(a) || mark_[a] < 0) continue;
      for (int b = 0; b < n; ++b) {
        if (!imaginary(b) || mark_[b] < 0) continue;
        int s = rs_->sum(a, b);
        if (s < 0) continue;
        signed char v = mark_[a] ^ mark_[b];
        if (mark_[s] < 0) {
          mark_[s] = mark_[rs_->negative(s)] = v;
          changed = true;
        } else if (mark_[s] != v) {
          fail_consistency("compactness marks are not additive at " +
                           format_root(rs_->root(a)) + " + " + format_root(rs_->root(b)));
        }
      }
    }
  }
}

RootKind classify_root(const Conjugation& c, int i) { return c.kind(i); }

const char* kind_name(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::Complex: return "complex";
  }
  return "?";
}

// ---- catalog ---------------------------------------------------------------

namespace {

Root parse_root_json(const json& j, int rank) {
  if (!j.is_array())
    fail_input("root must be an array of integers");
  Root r;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      fail_input("root must be an array of integers");
    r.push_back(x.get<int>());
  }
  if ((int) r.size() != rank)
    fail_input("root " + format_root(r) + " has wrong length");
  return r;
}

} // namespace

SatakeEntry parse_satake(const json& j) {
  if (!j.is_object())
    fail_input("real form entry must be a JSON object");
  SatakeEntry e;
  auto need = [&](const char* key) -> const json& {
    if (!j.contains(key))
      fail_input(std::string("real form entry lacks field '") + key + "'");
    return j.at(key);
  };
  if (j.contains("name") && j["name"].is_string())
    e.name = j["name"].get<std::string>();
  const json& dyn = need("dynkin");
  if (!dyn.is_string())
    fail_input("'dynkin' must be a string");
  e.dynkin = DynkinSpec::parse(dyn.get<std::string>());
  int r = e.dynkin.rank();
  const json& sig = need("sigma_star");
  if (!sig.is_array())
    fail_input("'sigma_star' must be a matrix");
  for (const auto& row : sig)
    e.sigma.push_back(parse_root_json(row, r));
  if (j.contains("noncompact_marks") && !j["noncompact_marks"].is_null())
    for (const auto& x : j["noncompact_marks"])
      e.noncompact.push_back(parse_root_json(x, r));
  if (j.contains("real_multiplicities") && !j["real_multiplicities"].is_null())
    for (const auto& x : j["real_multiplicities"]) {
      if (!x.is_array() || x.size() != 2 || !x[1].is_number_integer())
        fail_input("real_multiplicities entries must be [root, m]");
      e.multiplicities.push_back({parse_root_json(x[0], r), x[1].get<int>()});
    }
  if (j.contains("cor_id_list") && !j["cor_id_list"].is_null()) {
    std::string l = j["cor_id_list"].get<std::string>();
    if (l != "a" && l != "b")
      fail_input("cor_id_list must be \"a\", \"b\" or null");
    e.cor_list = l;
  }
  return e;
}

json satake_to_json(const SatakeEntry& e) {
  json j = json::object();
  j["name"] = e.name;
  j["dynkin"] = e.dynkin.str();
  j["sigma_star"] = e.sigma;
  j["noncompact_marks"] = e.noncompact;
  json m = json::array();
  for (const auto& [root, k] : e.multiplicities)
    m.push_back(json::array({root, k}));
  j["real_multiplicities"] = m;
  j["cor_id_list"] = e.cor_list.empty() ? json(nullptr) : json(e.cor_list);
  return j;
}

ConjugationPtr conjugation_from_entry(const SatakeEntry& e) {
  RootSystemPtr rs = build_root_system(e.dynkin);
  auto c = std::make_shared<Conjugation>(rs, e.sigma);
  c->set_name(e.name);
  c->set_cor_list(e.cor_list);
  for (const Root& r : e.noncompact)
    c->set_mark(rs->require(r), Compactness::Noncompact);
  for (int i = 0; i < rs->size(); ++i)
    if (c->imaginary(i) && !c->mark(i))
      c->set_mark(i, Compactness::Compact);
  // marks given by a document must already be additive
  try {
    c->propagate_marks();
  } catch (const Error& err) {
    fail_input(err.what());
  }
  for (const auto& [root, m] : e.multiplicities)
    c->set_multiplicity(rs->require(root), m);
  if (e.multiplicities.empty() && c->is_identity())
    for (int i = 0; i < rs->size(); ++i)
      c->set_multiplicity(i, 1);
  return c;
}

std::string catalog_dir() {
  const char* env = std::getenv("CRFLAG_CATALOG_DIR");
  if (env && *env) return env;
  return CRFLAG_DEFAULT_CATALOG_DIR;
}

namespace {

using Catalog = std::map<std::string, SatakeEntry>;

const Catalog& load_catalog(const std::string& dir) {
  static std::mutex mu;
  static std::map<std::string, Catalog> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dir);
  if (it != cache.end()) return it->second;
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    fail_gap("catalog directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir))
    if (ent.path().extension() == ".json")
      files.push_back(ent.path());
  std::sort(files.begin(), files.end());
  Catalog cat;
  for (const auto& p : files) {
    std::ifstream in(p);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& ex) {
      fail_input("catalog file " + p.string() + ": " + ex.what());
    }
    SatakeEntry e = parse_satake(j);
    if (e.name.empty())
      fail_input("catalog file " + p.string() + " has no name");
    if (cat.count(e.name))
      fail_input("duplicate catalog name " + e.name);
    cat.emplace(e.name, std::move(e));
  }
  return cache.emplace(dir, std::move(cat)).first->second;
}

} // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& kv : load_catalog(catalog_dir()))
    names.push_back(kv.first);
  return names;
}

const SatakeEntry& catalog_entry(const std::string& name) {
  const Catalog& cat = load_catalog(catalog_dir());
  auto it = cat.find(name);
  if (it == cat.end())
    fail_gap("real form '" + name + "' is not in the catalog");
  return it->second;
}

ConjugationPtr load_real_form(const std::string& name) {
  return conjugation_from_entry(catalog_entry(name));
}

ConjugationPtr load_real_form(const json& inline_entry) {
  return conjugation_from_entry(parse_satake(inline_entry));
}

// ---- Cayley transforms -----------------------------------------------------

bool strongly_orthogonal(const RootSystem& rs, int a, int b) {
  return rs.form(a, b) == 0 && rs.sum(a, b) < 0 && rs.sum(a, rs.negative(b)) < 0;
}

void validate_cayley(const Conjugation& c, const std::vector<int>& roots) {
  const RootSystem& rs = *c.roots();
  for (int a : roots)
    if (!c.real(a))
      fail_input("Cayley root " + format_root(rs.root(a)) + " is " +
                 kind_name(c.kind(a)) + ", not real");
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (!strongly_orthogonal(rs, roots[i], roots[j]))
        fail_input("Cayley roots " + format_root(rs.root(roots[i])) + " and " +
                   format_root(rs.root(roots[j])) + " are not strongly orthogonal");
}

ConjugationPtr apply_cayley(const ConjugationPtr& c, const std::vector<int>& roots) {
  validate_cayley(*c, roots);
  if (roots.empty()) return c;
  const RootSystem& rs = *c->roots();
  IntMatrix m = c->matrix();
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    m = multiply(reflection_matrix(rs, *it), m);
  auto out = std::make_shared<Conjugation>(c->roots(), m);
  out->set_name(c->name() + "+cayley");
  out->set_cor_list(c->cor_list());
  for (int a : roots)
    out->set_mark(a, Compactness::Noncompact);
  for (int i = 0; i < rs.size(); ++i) {
    if (!out->imaginary(i) || out->mark(i) || !c->imaginary(i) || !c->mark(i))
      continue;
    bool orth = std::all_of(roots.begin(), roots.end(),
                            [&](int a) { return strongly_orthogonal(rs, i, a); });
    if (orth) out->set_mark(i, *c->mark(i));
  }
  out->propagate_marks();
  // Keep a single hop back to the original Cartan when possible.
  if (c->base()) {
    std::vector<int> all = c->cayley();
    all.insert(all.end(), roots.begin(), roots.end());
    bool ok = true;
    try {
      validate_cayley(*c->base(), all);
    } catch (const Error&) {
      ok = false;
    }
    if (ok)
      out->set_origin(c->base(), all);
    else
      out->set_origin(c, roots);
  } else {
    out->set_origin(c, roots);
  }
  return out;
}

Root parse_e_root(const RootSystem& rs, const std::string& s) {
  const auto& comps = rs.dynkin().components;
  if (comps.size() != 1 || comps[0].type != 'A')
    fail_input("e_i - e_j notation needs a single type A component");
  int n = comps[0].rank + 1;
  std::string t;
  for (char ch : s)
    if (!std::isspace((unsigned char) ch) && ch != '_') t += ch;
  int i = 0, j = 0;
  char e1 = 0, e2 = 0, minus = 0;
  int consumed = 0;
  if (std::sscanf(t.c_str(), "%c%d%c%c%d%n", &e1, &i, &minus, &e2, &j, &consumed) != 5 ||
      consumed != (int) t.size() || e1 != 'e' || e2 != 'e' || minus != '-')
    fail_input("cannot parse '" + s + "' as e_i - e_j");
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    fail_input("'" + s + "' is not a root of " + rs.dynkin().str());
  Root r(n - 1, 0);
  int lo = std::min(i, j), hi = std::max(i, j), sign = i < j ? 1 : -1;
  for (int k = lo; k < hi; ++k)
    r[k - 1] = sign;
  return r;
}

} // namespace crflag
