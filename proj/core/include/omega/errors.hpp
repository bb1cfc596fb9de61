#ifndef OMEGA_ERRORS_HPP
#define OMEGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omega {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter triple that no self-map of N realizes.
struct InvalidTriple : Error {
  using Error::Error;
};

struct UnknownProfile : Error {
  using Error::Error;
};

struct UnknownWitness : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A required structural oracle is absent on a Transformation.
struct CapabilityMissing : Error {
  using Error::Error;
};

// A finite image enumerator ran out of elements.
struct ImageExhausted : Error {
  using Error::Error;
};

struct KernelMismatch : Error {
  using Error::Error;
};

struct DefectMismatch : Error {
  using Error::Error;
};

// A lemma was invoked on inputs that fail its hypothesis.
struct HypothesisViolated : Error {
  HypothesisViolated(const std::string& part, const std::string& clause)
      : Error("hypothesis violated in " + part + ": " + clause),
        part(part),
        clause(clause) {}
  std::string part;
  std::string clause;
};

// A certified profile contradicts window observations.
struct InconsistentCertification : Error {
  InconsistentCertification(const std::string& clause)
      : Error("inconsistent certification: " + clause), clause(clause) {}
  std::string clause;
};

// The composition relation has class triples that are neither witnessed
// nor excluded by a documented argument.
struct UnresolvedTriples : Error {
  using Error::Error;
};

}  // namespace omega

#endif  // OMEGA_ERRORS_HPP
