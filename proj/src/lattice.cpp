#include "crflag/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "crflag/error.hpp"

namespace crflag {

// ---- DynkinSpec ------------------------------------------------------------

int DynkinSpec::rank() const {
  int r = 0;
  for (const auto& c : components)
    r += c.rank;
  return r;
}

std::string DynkinSpec::str() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += 'x';
    s += components[i].type;
    s += std::to_string(components[i].rank);
  }
  return s;
}

void DynkinSpec::validate() const {
  if (components.empty())
    fail_input("empty Dynkin type");
  for (const auto& c : components) {
    bool ok = false;
    switch (c.type) {
      case 'A': ok = c.rank >= 1; break;
      case 'B': ok = c.rank >= 2; break;
      case 'C': ok = c.rank >= 3; break;
      case 'D': ok = c.rank >= 4; break;
      case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
      case 'F': ok = c.rank == 4; break;
      case 'G': ok = c.rank == 2; break;
      default: break;
    }
    if (!ok)
      fail_input("invalid Dynkin component " + std::string(1, c.type) +
                 std::to_string(c.rank));
  }
}

DynkinSpec DynkinSpec::parse(const std::string& s) {
  DynkinSpec spec;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace((unsigned char) s[i]) || s[i] == 'x' ||
                            s[i] == 'X' || s[i] == '+' || s[i] == ','))
      ++i;
  };
  skip();
  while (i < s.size()) {
    char t = (char) std::toupper((unsigned char) s[i]);
    if (t < 'A' || t > 'G')
      fail_input("cannot parse Dynkin type '" + s + "'");
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char) s[i]))
      ++i;
    if (start == i)
      fail_input("missing rank in Dynkin type '" + s + "'");
    spec.components.push_back({t, std::stoi(s.substr(start, i - start))});
    skip();
  }
  spec.validate();
  return spec;
}

// ---- RootSystem ------------------------------------------------------------

namespace {

IntMatrix component_form(const DynkinComponent& c) {
  int n = c.rank;
  IntMatrix b(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (c.type) {
    case 'A':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) b[i][i] = 4;
      b[n-1][n-1] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      b[n-1][n-1] = 4;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      edge(0, 2, -1);
      edge(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case 'G':
      b[0][0] = 2;
      b[1][1] = 6;
      edge(0, 1, -3);
      break;
  }
  return b;
}

} // namespace

RootSystem::RootSystem(const DynkinSpec& spec) : dynkin_(spec) {
  spec.validate();
  rank_ = spec.rank();
  bilinear_.assign(rank_, std::vector<int>(rank_, 0));
  int off = 0;
  for (size_t ci = 0; ci < spec.components.size(); ++ci) {
    IntMatrix b = component_form(spec.components[ci]);
    int n = spec.components[ci].rank;
    for (int i = 0; i < n; ++i) {
      node_comp_.push_back((int) ci);
      for (int j = 0; j < n; ++j)
        bilinear_[off + i][off + j] = b[i][j];
    }
    off += n;
  }
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      cartan_[i][j] = 2 * bilinear_[i][j] / bilinear_[j][j];

  // closure of the simple roots under simple reflections
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int k = 0; k < rank_; ++k) {
    Root r(rank_, 0);
    r[k] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root a = queue.front();
    queue.pop_front();
    for (int k = 0; k < rank_; ++k) {
      int p = 0;  // 2(a|alpha_k)/(alpha_k|alpha_k)
      for (int j = 0; j < rank_; ++j)
        p += a[j] * bilinear_[j][k];
      p = 2 * p / bilinear_[k][k];
      if (p == 0)
        continue;
      Root b = a;
      b[k] -= p;
      if (seen.insert(b).second)
        queue.push_back(b);
    }
  }

  auto ht = [](const Root& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::vector<Root> pos;
  for (const Root& r : seen)
    if (ht(r) > 0)
      pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = pos;
  for (const Root& r : pos) {
    Root m(r);
    for (int& x : m) x = -x;
    roots_.push_back(m);
  }
  int n = size();
  for (int i = 0; i < n; ++i)
    index_[roots_[i]] = i;
  neg_.resize(n);
  height_.resize(n);
  for (int i = 0; i < n; ++i) {
    neg_[i] = i < n / 2 ? i + n / 2 : i - n / 2;
    height_[i] = ht(roots_[i]);
  }
  form_.resize((size_t) n * n);
  sum_.resize((size_t) n * n);
  refl_.resize((size_t) n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      form_[i * n + j] = form(roots_[i], roots_[j]);
      Root s = roots_[i];
      for (int k = 0; k < rank_; ++k) s[k] += roots_[j][k];
      sum_[i * n + j] = index_of(s);
    }
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      int p = 2 * form_[a * n + b] / form_[b * n + b];
      Root s = roots_[a];
      for (int k = 0; k < rank_; ++k) s[k] -= p * roots_[b][k];
      refl_[b * n + a] = index_of(s);
    }
}

int RootSystem::index_of(const Root& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::require(const Root& v) const {
  if ((int) v.size() != rank_)
    fail_input("vector " + format_root(v) + " has wrong length for rank " +
               std::to_string(rank_));
  int i = index_of(v);
  if (i < 0)
    fail_input(format_root(v) + " is not a root of " + dynkin_.str());
  return i;
}

int RootSystem::form(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += a[i] * bilinear_[i][j] * b[j];
  }
  return s;
}

RootSet RootSystem::negate(const RootSet& s) const {
  RootSet out(s.size());
  for (size_t i = s.find_first(); i != RootSet::npos; i = s.find_next(i))
    out.set(neg_[i]);
  return out;
}

RootSet RootSystem::positive_roots() const {
  RootSet s(roots_.size());
  for (int i = 0; i < size() / 2; ++i)
    s.set(i);
  return s;
}

std::uint64_t weyl_order_from_heights(const std::vector<int>& heights) {
  // The number of positive roots of height k minus those of height k+1 is
  // the number of exponents equal to k; |W| is the product of (m_i + 1).
  int maxh = 0;
  for (int h : heights) maxh = std::max(maxh, h);
  std::vector<int> count(maxh + 2, 0);
  for (int h : heights) count[h]++;
  std::uint64_t order = 1;
  for (int k = 1; k <= maxh; ++k)
    for (int e = count[k] - count[k + 1]; e > 0; --e)
      order *= (std::uint64_t) (k + 1);
  return order;
}

std::uint64_t RootSystem::weyl_order() const {
  std::vector<int> h(height_.begin(), height_.begin() + size() / 2);
  return weyl_order_from_heights(h);
}

RootSystemPtr build_root_system(const DynkinSpec& spec) {
  return std::make_shared<const RootSystem>(spec);
}

RootSystemPtr build_root_system(const std::string& spec) {
  return build_root_system(DynkinSpec::parse(spec));
}

// ---- Chamber ---------------------------------------------------------------

Chamber Chamber::standard(RootSystemPtr rs) {
  Chamber c;
  int n = rs->size(), r = rs->rank();
  c.f_.assign(r, 1);
  c.pos_ = rs->positive_roots();
  c.basis_.resize(r);
  for (int k = 0; k < r; ++k)
    c.basis_[k] = rs->simple(k);
  c.coords_.reserve((std::size_t) n * r);
  for (int i = 0; i < n; ++i)
    c.coords_.insert(c.coords_.end(), rs->root(i).begin(), rs->root(i).end());
  c.rs_ = std::move(rs);
  return c;
}

Chamber Chamber::reflect_at(int node) const {
  const RootSystem& rs = *rs_;
  int b = basis_[node];
  Chamber c;
  c.rs_ = rs_;
  int n = rs.size(), r = rs.rank();
  long long fb = value(b);
  c.f_.resize(r);
  for (int j = 0; j < r; ++j)
    c.f_[j] = f_[j] - (long long) rs.pairing(rs.simple(j), b) * fb;
  c.pos_ = RootSet(n);
  c.coords_.resize((std::size_t) n * r);
  for (int i = 0; i < n; ++i) {
    int s = rs.reflect(b, i);
    if (pos_[s]) c.pos_.set(i);
    std::copy_n(coords_.begin() + (std::ptrdiff_t) s * r, r,
                c.coords_.begin() + (std::ptrdiff_t) i * r);
  }
  c.basis_.resize(r);
  for (int k = 0; k < r; ++k)
    c.basis_[k] = rs.reflect(b, basis_[k]);
  return c;
}

Chamber Chamber::from_functional(RootSystemPtr rs, const std::vector<long long>& f) {
  if ((int) f.size() != rs->rank())
    fail_input("chamber vector has wrong length");
  int n = rs->size();
  auto val = [&](int i) {
    long long v = 0;
    for (int k = 0; k < rs->rank(); ++k)
      v += f[k] * rs->root(i)[k];
    return v;
  };
  RootSet target(n);
  for (int i = 0; i < n; ++i) {
    long long v = val(i);
    if (v == 0)
      fail_input("chamber vector is not regular: vanishes on " +
                 format_root(rs->root(i)));
    if (v > 0) target.set(i);
  }
  Chamber c = standard(rs);
  while (c.pos_ != target) {
    int node = -1;
    for (int k = 0; k < rs->rank() && node < 0; ++k)
      if (val(c.basis_[k]) < 0) node = k;
    c = c.reflect_at(node);
  }
  c.f_ = f;
  return c;
}

int Chamber::node_of(int root) const {
  for (int k = 0; k < (int) basis_.size(); ++k)
    if (basis_[k] == root) return k;
  return -1;
}

std::vector<int> Chamber::support(int i) const {
  std::vector<int> s;
  auto co = coords(i);
  for (int k = 0; k < (int) co.size(); ++k)
    if (co[k] != 0) s.push_back(k);
  return s;
}

long long Chamber::value(int i) const {
  long long v = 0;
  const Root& a = rs_->root(i);
  for (int k = 0; k < (int) a.size(); ++k)
    v += f_[k] * a[k];
  return v;
}

Chamber apply_word(const Chamber& c, const WeylWord& w) {
  Chamber d = c;
  for (int k : w)
    d = d.reflect_at(k);
  return d;
}

std::vector<int> word_permutation(const Chamber& c, const WeylWord& w) {
  const RootSystem& rs = *c.roots();
  std::vector<int> perm(rs.size());
  for (int i = 0; i < rs.size(); ++i)
    perm[i] = i;
  // s_{k1} ... s_{kn} applied to a root: innermost letter first.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int b = c.basis(*it);
    for (int& x : perm)
      x = rs.reflect(b, x);
  }
  return perm;
}

std::vector<Chamber> enumerate_chambers(RootSystemPtr rs, std::uint64_t bound) {
  std::uint64_t order = rs->weyl_order();
  if (order > bound)
    fail_bound("|W(" + rs->dynkin().str() + ")| = " + std::to_string(order) +
               " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<Chamber> out;
  std::set<RootSet> seen;
  out.push_back(Chamber::standard(rs));
  seen.insert(out.back().positives());
  for (size_t i = 0; i < out.size(); ++i)
    for (int k = 0; k < rs->rank(); ++k) {
      Chamber d = out[i].reflect_at(k);
      if (seen.insert(d.positives()).second)
        out.push_back(std::move(d));
    }
  return out;
}

std::uint64_t weyl_order_of_nodes(const Chamber& c, const std::vector<int>& nodes) {
  const RootSystem& rs = *c.roots();
  std::vector<bool> in(rs.rank(), false);
  for (int k : nodes) in[k] = true;
  std::vector<int> heights;
  for (int i = 0; i < rs.size(); ++i) {
    if (!c.positive(i)) continue;
    auto co = c.coords(i);
    bool inside = true;
    int h = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      if (co[k] != 0 && !in[k]) inside = false;
      h += co[k];
    }
    if (inside) heights.push_back(h);
  }
  return weyl_order_from_heights(heights);
}

std::string format_nodes(const std::vector<int>& nodes) {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(nodes[i] + 1);
  }
  return s + "}";
}

std::string format_root(const Root& r) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < r.size(); ++i)
    os << (i ? "," : "") << r[i];
  os << ']';
  return os.str();
}

} // namespace crflag
