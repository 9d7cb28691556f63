#pragma once

#include <stdexcept>
#include <string>

namespace elgot {

/// Loop start state (or transition target) outside the declared state set.
struct UnknownState : std::runtime_error {
  explicit UnknownState(const std::string& what) : std::runtime_error(what) {}
};

/// Kleisli operands over incompatible finite domains/codomains.
struct DomainMismatch : std::runtime_error {
  explicit DomainMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Requested enumeration exceeds the configured work budget.
struct SizeLimit : std::runtime_error {
  explicit SizeLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Candidate D-algebra fails the search-algebra equations on the probe set.
struct NotSearchAlgebra : std::runtime_error {
  explicit NotSearchAlgebra(const std::string& what) : std::runtime_error(what) {}
};

/// A reachable machine state escapes the declared finite-state certificate.
struct InvalidCertificate : std::runtime_error {
  explicit InvalidCertificate(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace elgot
