// Exception types shared by all crflag modules.
//
// Every error carries a category that the command-line tool maps to an
// exit status.

#ifndef CRFLAG_ERROR_HPP
#define CRFLAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace crflag {

enum class ErrorKind {
  Input,          // malformed document, bad Dynkin type, not a root, ...
  CatalogGap,     // unknown form, unrecorded multiplicity or compactness
  Enumeration,    // Weyl group too large for exhaustive enumeration
  Consistency     // an internal cross-check failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw Error(ErrorKind::Input, msg);
}
[[noreturn]] inline void fail_gap(const std::string& msg) {
  throw Error(ErrorKind::CatalogGap, msg);
}
[[noreturn]] inline void fail_bound(const std::string& msg) {
  throw Error(ErrorKind::Enumeration, msg);
}
[[noreturn]] inline void fail_consistency(const std::string& msg) {
  throw Error(ErrorKind::Consistency, msg);
}

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return 2;
    case ErrorKind::CatalogGap: return 3;
    case ErrorKind::Enumeration: return 4;
    case ErrorKind::Consistency: return 5;
  }
  return 5;
}

} // namespace crflag

#endif
