// Orbit specification documents and the JSON reports built from them.
//
// A document names a root system, a real form (catalog name or inline
// entry), an optional Cayley set, and a parabolic set given by Phi or, in
// type A, by a flag signature.  Reports are ordered JSON objects whose
// serialization is a pure function of the document.

#ifndef CRFLAG_REPORT_HPP
#define CRFLAG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crflag/parabolic.hpp"

namespace crflag {

using ojson = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct OrbitDocument {
  RootSystemPtr rs;
  ConjugationPtr base;            // the real form before the Cayley transform
  std::vector<int> cayley;        // root indices
  ConjugationPtr conj;            // after the Cayley transform
  Chamber chamber;                // the chamber Phi refers to
  std::optional<Root> chamber_vector;
  std::optional<std::vector<int>> phi;  // 0-based nodes of `chamber`
  RootSet q;                      // empty unless phi is present

  CRSpec spec() const;
};

// Throws Input on schema errors and CatalogGap on unknown forms.  When
// `need_phi` is false, phi and flag may both be absent.
OrbitDocument parse_document(const nlohmann::json& j, bool need_phi = true);
// Reads a JSON file, or standard input for "-".
nlohmann::json read_json(const std::string& path);

// "e1 - e7" for a root of a single type A component, else "[1,1,0]".
std::string root_label(const RootSystem& rs, const Root& r);
// "F^7_{1,2,4,6}" in type A, "Phi{1,2}" otherwise.
std::string flag_label(const RootSystem& rs, const std::vector<int>& nodes);

ojson nodes_json(const std::vector<int>& nodes);  // 1-based

ojson reduce_report(const CRSpec& s);
ojson core_report(const CRSpec& s);
ojson pi1_report(const CRSpec& s);
ojson arc_report(const CRSpec& s);
ojson analyze(const OrbitDocument& d);

// Consistency findings of an analysis report: empty when consistent.
std::vector<std::string> validate_report(const ojson& report, int rank);

// Indented plain text rendering of any of the reports above.
std::string render_text(const ojson& report);

} // namespace crflag

#endif
