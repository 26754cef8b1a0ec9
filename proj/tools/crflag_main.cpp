// crflag: orbits of real forms in complex flag manifolds.
//
//   crflag analyze DOC [--json]
//   crflag reduce|core|pi1|arc DOC [--json]
//   crflag oracle DOC [--check NAME] [--cayley-variants] [--json]
//   crflag oracle --corrupted-fixture
//   crflag catalog [NAME] [--check] [--json]
//
// DOC is a JSON file, or - for standard input.  Exit status: 0 success,
// 2 schema error, 3 catalog gap, 4 enumeration bound, 5 consistency failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "crflag/error.hpp"
#include "crflag/oracle.hpp"
#include "crflag/report.hpp"

using namespace crflag;

namespace {

void emit(const ojson& r, bool as_json) {
  if (as_json)
    std::cout << r.dump(2) << "\n";
  else
    std::cout << render_text(r);
}

ojson oracle_json(const OracleReport& r) {
  ojson o;
  o["check"] = r.check;
  o["cases"] = r.cases;
  o["skipped"] = r.skipped;
  o["result"] = r.passed() ? "pass" : "fail";
  ojson f = ojson::array();
  for (const auto& x : r.failures) f.push_back(ojson{{"case", x.key}, {"detail", x.detail}});
  o["failures"] = f;
  return o;
}

int run_oracle_command(const std::string& path, const std::string& check, bool variants,
                       bool fixture, bool as_json) {
  std::vector<OracleReport> reports;
  if (fixture) {
    RootSystemPtr rs = build_root_system("A2");
    reports.push_back(conjugation_oracle(*rs, corrupted_sigma_fixture()));
  } else {
    nlohmann::json j = read_json(path);
    if (j.is_object() && j.contains("real_form") && j["real_form"].is_object() &&
        j.contains("dynkin") && j["dynkin"].is_string()) {
      RootSystemPtr rs = build_root_system(j["dynkin"].get<std::string>());
      SatakeEntry e = parse_satake(j["real_form"]);
      OracleReport r = conjugation_oracle(*rs, e.sigma);
      if (!r.passed()) reports.push_back(r);
    }
    if (reports.empty()) {
      OrbitDocument d = parse_document(j, false);
      std::vector<ConjugationPtr> conjs{d.conj};
      if (variants)
        for (const auto& v : cayley_variants(*d.base))
          if (!v.empty()) conjs.push_back(apply_cayley(d.base, v));
      std::vector<std::string> checks;
      if (check == "all")
        checks = oracle_checks();
      else
        checks.push_back(check);
      for (const std::string& c : checks) {
        OracleReport total;
        total.check = c;
        for (const auto& conj : conjs) {
          OracleReport r = run_oracle(conj, c);
          total.cases += r.cases;
          total.skipped += r.skipped;
          total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
        }
        reports.push_back(total);
      }
    }
  }
  bool ok = true;
  ojson all = ojson::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    all.push_back(oracle_json(r));
    if (!as_json) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check << " cases=" << r.cases
                << " skipped=" << r.skipped << "\n";
      for (const auto& f : r.failures) std::cout << "  " << f.key << ": " << f.detail << "\n";
    }
  }
  if (as_json) std::cout << ojson{{"schema_version", kSchemaVersion}, {"oracle", all}}.dump(2)
                         << "\n";
  return ok ? 0 : exit_code(ErrorKind::Consistency);
}

int run_catalog_command(const std::string& name, bool check, bool as_json) {
  if (!name.empty()) {
    ojson e = satake_to_json(catalog_entry(name));
    if (check) load_real_form(name);
    std::cout << e.dump(as_json ? 2 : 1) << "\n";
    return 0;
  }
  ojson list = ojson::array();
  for (const std::string& n : catalog_names()) {
    const SatakeEntry& e = catalog_entry(n);
    if (check) load_real_form(n);
    list.push_back(ojson{{"name", n}, {"dynkin", e.dynkin.str()},
                         {"cor_id_list", e.cor_list.empty() ? ojson(nullptr) : ojson(e.cor_list)}});
    if (!as_json)
      std::cout << n << "  " << e.dynkin.str() << (e.cor_list.empty() ? "" : "  list " + e.cor_list)
                << "\n";
  }
  if (as_json) std::cout << ojson{{"schema_version", kSchemaVersion}, {"forms", list}}.dump(2)
                         << "\n";
  else if (check)
    std::cout << list.size() << " entries valid\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of real forms in complex flag manifolds"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string doc;
  auto add_doc = [&](CLI::App* sub) {
    sub->add_option("document", doc, "Orbit document (JSON file, - for stdin)")->required();
    sub->add_flag("--json", as_json, "Machine-readable output");
  };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Full report");
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Weakening and reductions");
  CLI::App* core_cmd = app.add_subcommand("core", "Real core and its trace");
  CLI::App* pi1_cmd = app.add_subcommand("pi1", "Fundamental groups");
  CLI::App* arc_cmd = app.add_subcommand("arc", "Algebraic arc components");
  for (CLI::App* c : {analyze_cmd, reduce_cmd, core_cmd, pi1_cmd, arc_cmd}) add_doc(c);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
  std::string check = "all";
  bool variants = false, fixture = false;
  oracle_cmd->add_option("document", doc, "Document giving dynkin, real_form and cayley");
  oracle_cmd->add_option("--check", check, "Check name or 'all'");
  oracle_cmd->add_flag("--cayley-variants", variants,
                       "Also sweep every strongly orthogonal Cayley set");
  oracle_cmd->add_flag("--corrupted-fixture", fixture,
                       "Run the conjugation check on a deliberately broken matrix");
  oracle_cmd->add_flag("--json", as_json, "Machine-readable output");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List or show catalog entries");
  std::string name;
  bool validate = false;
  catalog_cmd->add_option("name", name, "Entry to show");
  catalog_cmd->add_flag("--check", validate, "Load and validate the entries");
  catalog_cmd->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(ErrorKind::Input);
  }

  try {
    if (oracle_cmd->parsed()) {
      if (!fixture && doc.empty()) {
        std::cerr << "error: oracle needs a document or --corrupted-fixture\n";
        return exit_code(ErrorKind::Input);
      }
      return run_oracle_command(doc, check, variants, fixture, as_json);
    }
    if (catalog_cmd->parsed()) return run_catalog_command(name, validate, as_json);

    OrbitDocument d = parse_document(read_json(doc));
    ojson r;
    if (analyze_cmd->parsed()) {
      r = analyze(d);
    } else {
      CRSpec s = d.spec();
      r["schema_version"] = kSchemaVersion;
      if (reduce_cmd->parsed()) r["reductions"] = reduce_report(s);
      if (core_cmd->parsed()) r["real_core"] = core_report(s);
      if (pi1_cmd->parsed()) r["pi1"] = pi1_report(s);
      if (arc_cmd->parsed()) r["arc"] = arc_report(s);
    }
    emit(r, as_json);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}
