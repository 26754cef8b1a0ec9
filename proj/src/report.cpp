#include "crflag/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "crflag/arc.hpp"
#include "crflag/error.hpp"
#include "crflag/reduce.hpp"
#include "crflag/topo.hpp"

namespace crflag {

using nlohmann::json;

CRSpec OrbitDocument::spec() const {
  if (!phi) fail_input("document has neither phi nor flag");
  return make_spec(conj, q);
}

nlohmann::json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) fail_input("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail_input(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

bool single_type_a(const RootSystem& rs) {
  const auto& c = rs.dynkin().components;
  return c.size() == 1 && c[0].type == 'A';
}

Root parse_root(const RootSystem& rs, const json& j) {
  if (j.is_string()) return parse_e_root(rs, j.get<std::string>());
  if (!j.is_array()) fail_input("a root must be an integer array or an \"e_i - e_j\" string");
  Root r;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail_input("root coordinates must be integers");
    r.push_back(x.get<int>());
  }
  rs.require(r);
  return r;
}

std::vector<int> parse_nodes(const json& j, int rank, const char* what) {
  if (!j.is_array()) fail_input(std::string(what) + " must be an array of node indices");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail_input(std::string(what) + " entries must be integers");
    int k = x.get<int>();
    if (k < 1 || k > rank)
      fail_input(std::string(what) + " entry " + std::to_string(k) + " is outside 1.." +
                 std::to_string(rank));
    out.push_back(k - 1);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    fail_input(std::string(what) + " has repeated entries");
  return out;
}

} // namespace

OrbitDocument parse_document(const json& j, bool need_phi) {
  if (!j.is_object()) fail_input("document must be a JSON object");
  static const std::vector<std::string> known{"schema_version", "dynkin", "real_form",
                                              "cayley", "phi", "flag", "chamber"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      fail_input("unknown document field '" + it.key() + "'");
  if (j.contains("schema_version") &&
      (!j["schema_version"].is_number_integer() || j["schema_version"] != kSchemaVersion))
    fail_input("unsupported schema_version");
  if (!j.contains("dynkin") || !j["dynkin"].is_string())
    fail_input("document needs a string field 'dynkin'");
  RootSystemPtr rs = build_root_system(j["dynkin"].get<std::string>());
  if (!j.contains("real_form")) fail_input("document needs a field 'real_form'");
  const json& rf = j["real_form"];
  ConjugationPtr base;
  if (rf.is_string())
    base = load_real_form(rf.get<std::string>());
  else if (rf.is_object())
    base = load_real_form(rf);
  else
    fail_input("'real_form' must be a catalog name or an inline entry");
  if (!(base->roots()->dynkin() == rs->dynkin()))
    fail_input("real form " + base->name() + " has type " + base->roots()->dynkin().str() +
               ", document says " + rs->dynkin().str());
  rs = base->roots();

  std::vector<int> cayley;
  if (j.contains("cayley")) {
    if (!j["cayley"].is_array()) fail_input("'cayley' must be an array of roots");
    for (const auto& r : j["cayley"]) cayley.push_back(rs->require(parse_root(*rs, r)));
  }
  ConjugationPtr conj = cayley.empty() ? base : apply_cayley(base, cayley);

  std::optional<Root> vec;
  Chamber chamber = Chamber::standard(rs);
  if (j.contains("chamber") && !j["chamber"].is_null()) {
    const json& cv = j["chamber"];
    if (!cv.is_array() || (int) cv.size() != rs->rank())
      fail_input("'chamber' must be an integer vector of length " +
                 std::to_string(rs->rank()));
    Root v;
    for (const auto& x : cv) {
      if (!x.is_number_integer()) fail_input("'chamber' entries must be integers");
      v.push_back(x.get<int>());
    }
    std::vector<long long> f(rs->rank());
    for (int k = 0; k < rs->rank(); ++k) f[k] = rs->form(v, rs->root(rs->simple(k)));
    chamber = Chamber::from_functional(rs, f);
    vec = v;
  }

  bool has_phi = j.contains("phi"), has_flag = j.contains("flag");
  if (has_phi && has_flag) fail_input("'phi' and 'flag' are mutually exclusive");
  if (!has_phi && !has_flag && need_phi) fail_input("document needs 'phi' or 'flag'");
  std::optional<std::vector<int>> phi;
  if (has_phi) phi = parse_nodes(j["phi"], rs->rank(), "phi");
  if (has_flag) {
    if (!single_type_a(*rs)) fail_input("'flag' signatures need a single type A component");
    phi = parse_nodes(j["flag"], rs->rank(), "flag");
  }
  RootSet q = rs->none();
  if (phi) q = parabolic_from_phi(chamber, *phi);
  return {rs, base, cayley, conj, chamber, vec, phi, q};
}

std::string root_label(const RootSystem& rs, const Root& r) {
  if (!single_type_a(rs)) return format_root(r);
  int lo = -1, hi = -1, sign = 0;
  for (int k = 0; k < (int) r.size(); ++k)
    if (r[k]) {
      if (lo < 0) lo = k;
      hi = k;
      sign = r[k];
    }
  if (lo < 0) return format_root(r);
  int i = lo + 1, j = hi + 2;
  if (sign < 0) std::swap(i, j);
  return "e" + std::to_string(i) + " - e" + std::to_string(j);
}

std::string flag_label(const RootSystem& rs, const std::vector<int>& nodes) {
  std::string body = format_nodes(nodes);
  if (single_type_a(rs))
    return "F^" + std::to_string(rs.rank() + 1) + "_" + body;
  return "Phi" + body;
}

ojson nodes_json(const std::vector<int>& nodes) {
  ojson a = ojson::array();
  for (int k : nodes) a.push_back(k + 1);
  return a;
}

namespace {

ojson flag_json(const RootSystemPtr& rs, const RootSet& q) {
  std::vector<int> f = flag_type(rs, q);
  ojson o;
  o["flag"] = nodes_json(f);
  o["signature"] = flag_label(*rs, f);
  return o;
}

ojson bits_json(const Bits& b) {
  ojson a = ojson::array();
  for (auto x : b) a.push_back((int) x);
  return a;
}

ojson predicates_json(const FibrationPredicates& p) {
  return ojson{{"is_cr_map", p.is_cr_map},
               {"is_cr_submersion", p.is_cr_submersion},
               {"has_complex_fibers", p.has_complex_fibers}};
}

ojson fiber_json(const FiberReport& f) {
  ojson o;
  o["sub_root_count"] = f.sub_roots.count();
  o["sub_rank"] = f.sub_rank;
  o["induced_root_count"] = f.induced.count();
  o["induced_cr_dim"] = f.induced_cr_dim;
  o["nil_complex_dim"] = f.nil_complex_dim;
  o["cr_dim"] = f.cr_dim;
  o["real_dim"] = f.real_dim;
  return o;
}

ojson reduction_json(const CRSpec& s, const Reduction& r) {
  const RootSystemPtr& rs = s.conj->roots();
  ojson o = flag_json(rs, r.q);
  o["phi"] = nodes_json(r.phi);
  o["psi"] = nodes_json(r.psi);
  CRSpec t = with_q(s, r.q);
  o["fibration"] = predicates_json(fibration_predicates(s, t));
  o["fiber"] = fiber_json(fiber_structure_report(s, t));
  return o;
}

int count_kind(const Conjugation& c, RootKind k) {
  int n = 0;
  for (int i = 0; i < c.roots()->size(); ++i)
    if (c.kind(i) == k) ++n;
  return n;
}

void check_flags(const ojson& j, int rank, const std::string& path,
                 std::vector<std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "flag" || it.key() == "phi" || it.key() == "psi") {
        bool ok = it->is_array();
        int prev = 0;
        if (ok)
          for (const auto& x : *it) {
            if (!x.is_number_integer() || x.get<int>() <= prev || x.get<int>() > rank) {
              ok = false;
              break;
            }
            prev = x.get<int>();
          }
        if (!ok) out.push_back("malformed node list at " + path + "/" + it.key());
      } else {
        check_flags(*it, rank, path + "/" + it.key(), out);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      check_flags(j[i], rank, path + "/" + std::to_string(i), out);
  }
}

} // namespace

ojson reduce_report(const CRSpec& s) {
  const RootSystemPtr& rs = s.conj->roots();
  ojson o;
  RootSet w = cr_weakening(s);
  ojson wk = flag_json(rs, w);
  wk["fibration"] = predicates_json(fibration_predicates(with_q(s, w), s));
  o["weakening"] = wk;
  ojson fund = reduction_json(s, fundamental_reduction(s));
  fund["is_fundamental"] = is_fundamental(s);
  o["fundamental_reduction"] = fund;
  ojson weak = reduction_json(s, weak_reduction(s));
  weak["holomorphically_nondegenerate"] = is_holomorphically_nondegenerate(s);
  o["weak_reduction"] = weak;
  o["strictly_nondegenerate"] = is_strictly_nondegenerate(s);
  ojson mx;
  mx["is_maximal"] = is_maximal(s);
  try {
    ojson list = ojson::array();
    for (const auto& psi : maximal_cr_structures(s)) list.push_back(nodes_json(psi));
    mx["structures"] = list;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Enumeration) throw;
    mx["structures"] = nullptr;
  }
  o["maximal"] = mx;
  return o;
}

ojson core_report(const CRSpec& s) {
  const RootSystemPtr& rs = s.conj->roots();
  CoreResult r = real_core(s);
  ojson o = flag_json(rs, r.q);
  o["iterations"] = r.iterations;
  ojson trace = ojson::array();
  for (const Stage& st : r.trace) {
    CRSpec t = with_q(s, st.q);
    ojson e;
    e["tag"] = tag_name(st.tag);
    e["h"] = st.h;
    e["phi"] = nodes_json(st.phi);
    e["signature"] = flag_label(*rs, st.phi);
    e["cr_dim"] = cr_dim(t);
    e["cr_codim"] = cr_codim(t);
    trace.push_back(e);
  }
  o["trace"] = trace;
  return o;
}

ojson pi1_report(const CRSpec& s) {
  const RootSystemPtr& rs = s.conj->roots();
  SubgroupDescription d = pi1_orbit(s);
  const GroupPresentation& g = d.ambient;
  ojson core = flag_json(rs, d.core);
  core["generators"] = nodes_json(g.generators);
  core["killed"] = nodes_json(g.killed);
  core["pairing"] = g.pairing;
  core["relations"] = g.relations;
  core["invariants"] = g.invariants;
  ojson orbit;
  ojson cay = ojson::array();
  for (int a : d.cayley) cay.push_back(root_label(*rs, rs->root(a)));
  orbit["cayley"] = cay;
  ojson ideals = ojson::array();
  for (const IdealBlock& b : d.ideals) {
    ojson ib;
    ib["nodes"] = nodes_json(b.nodes);
    ojson bc = ojson::array();
    for (int a : b.cayley) bc.push_back(root_label(*rs, rs->root(a)));
    ib["cayley"] = bc;
    ojson ker = ojson::array();
    for (const Bits& k : b.kernel) ker.push_back(bits_json(k));
    ib["kernel"] = ker;
    ideals.push_back(ib);
  }
  orbit["ideals"] = ideals;
  orbit["condition_columns"] = nodes_json(g.surviving());
  ojson cond = ojson::array();
  for (const Bits& b : d.conditions) cond.push_back(bits_json(b));
  orbit["conditions"] = cond;
  orbit["generators"] = d.generator_words;
  orbit["index"] = d.index;
  orbit["image_invariants"] = d.image_invariants;
  orbit["killed_consistent"] = d.killed_consistent;
  orbit["cayley_in_e"] = d.cayley_in_e;
  orbit["max_noncompact"] = d.max_noncompact;
  ojson o;
  o["core"] = core;
  o["orbit"] = orbit;
  o["fiber_components"] = fiber_component_count(s, with_q(s, d.core));
  return o;
}

ojson arc_report(const CRSpec& s) {
  const RootSystemPtr& rs = s.conj->roots();
  ArcReport a = arc_parabolic(s);
  ojson o;
  o["delta"] = a.delta;
  o["delta_zero"] = a.delta_zero;
  o["flag"] = nodes_json(a.flag);
  o["signature"] = flag_label(*rs, a.flag);
  o["stable"] = a.stable;
  o["core"] = flag_json(rs, a.core);
  o["relation"] = relation_name(a.relation);
  o["weak_reduction_invariant"] = arc_invariance(s);
  KjReport k = kj_check(s);
  o["closed_orbit_condition"] = ojson{{"holds", k.holds},
                                      {"method", k.method},
                                      {"arc_equals_core", k.arc_equals_core},
                                      {"weakening_sum_closed", k.weakening_sum_closed}};
  return o;
}

ojson analyze(const OrbitDocument& d) {
  CRSpec s = d.spec();
  const RootSystemPtr& rs = d.rs;
  const Conjugation& c = *d.conj;
  ojson o;
  o["schema_version"] = kSchemaVersion;
  ojson in;
  in["dynkin"] = rs->dynkin().str();
  in["real_form"] = d.base->name();
  ojson cay = ojson::array();
  for (int a : d.cayley) cay.push_back(root_label(*rs, rs->root(a)));
  in["cayley"] = cay;
  in["phi"] = nodes_json(*d.phi);
  if (d.chamber_vector) in["chamber"] = *d.chamber_vector;
  ojson fl = flag_json(rs, d.q);
  in["flag"] = fl["flag"];
  in["signature"] = fl["signature"];
  o["input"] = in;
  o["roots"] = ojson{{"total", rs->size()},
                     {"real", count_kind(c, RootKind::Real)},
                     {"imaginary", count_kind(c, RootKind::Imaginary)},
                     {"complex", count_kind(c, RootKind::Complex)}};
  o["cr"] = ojson{{"cr_dim", cr_dim(s)},
                  {"cr_codim", cr_codim(s)},
                  {"orbit_dim", orbit_dim(s)},
                  {"totally_real", is_totally_real(s)},
                  {"totally_complex", is_totally_complex(s)}};
  IsotropyDims iso = isotropy_dims(s);
  o["isotropy"] = ojson{{"dim_n", iso.n}, {"dim_l", iso.l}, {"dim_s", iso.s}, {"dim_z", iso.z}};
  o["reductions"] = reduce_report(s);
  o["real_core"] = core_report(s);
  o["pi1"] = pi1_report(s);
  o["arc"] = arc_report(s);
  std::vector<int> core_flag = o["real_core"]["flag"].get<std::vector<int>>();
  for (int& k : core_flag) --k;
  o["euler"] = ojson{{"ambient", euler_complex_flag(rs, flag_type(rs, d.q))},
                     {"core", euler_complex_flag(rs, core_flag)}};
  std::vector<std::string> issues = validate_report(o, rs->rank());
  o["consistency"] = ojson{{"passed", issues.empty()}, {"issues", issues}};
  if (!issues.empty()) fail_consistency("report failed validation: " + issues.front());
  return o;
}

std::vector<std::string> validate_report(const ojson& r, int rank) {
  std::vector<std::string> out;
  try {
    const ojson& trace = r.at("real_core").at("trace");
    if (trace.empty() || trace.back().at("cr_dim") != 0)
      out.push_back("real core is not totally real");
    if (trace.back().at("tag") != "core" || trace.back().at("phi") != r.at("real_core").at("flag"))
      out.push_back("last trace stage differs from the core");
    const ojson& pi = r.at("pi1");
    if (pi.at("orbit").at("max_noncompact") == "passed" &&
        pi.at("orbit").at("index") != pi.at("fiber_components"))
      out.push_back("subgroup index differs from the fiber component count");
    if (r.at("arc").at("relation") == "equal" &&
        r.at("arc").at("flag") != r.at("real_core").at("flag"))
      out.push_back("arc relation says equal but the flags differ");
    if (r.at("cr").at("totally_real") && r.at("real_core").at("iterations") != 0)
      out.push_back("totally real input needed core iterations");
  } catch (const ojson::exception& e) {
    out.push_back(std::string("report is missing a section: ") + e.what());
  }
  check_flags(r, rank, "", out);
  return out;
}

namespace {

bool scalar_array(const ojson& j) {
  return std::all_of(j.begin(), j.end(), [](const ojson& x) { return x.is_primitive(); });
}

void render(const ojson& j, int indent, std::ostringstream& os) {
  std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const ojson& v = *it;
    os << pad << it.key() << ":";
    if (v.is_object()) {
      os << "\n";
      render(v, indent + 2, os);
    } else if (v.is_array() && !scalar_array(v)) {
      os << "\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          os << pad << "  -\n";
          render(x, indent + 4, os);
        } else {
          os << pad << "  " << x.dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      os << " " << v.get<std::string>() << "\n";
    } else {
      os << " " << v.dump() << "\n";
    }
  }
}

} // namespace

std::string render_text(const ojson& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

} // namespace crflag
