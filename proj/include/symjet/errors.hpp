#pragma once

#include <stdexcept>
#include <string>

namespace symjet {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct OddDimension : Error {
  using Error::Error;
};
struct DenominatorDivisibleByP : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct SingularLinearPart : Error {
  using Error::Error;
};
struct NotHamiltonian : Error {
  using Error::Error;
};
struct NotSymplecticConjugator : Error {
  using Error::Error;
};
struct NotLagrangian : Error {
  using Error::Error;
};
struct NotInvolutive : Error {
  using Error::Error;
};
struct LinearPartNotSymplectic : Error {
  using Error::Error;
};
struct RetryLimitExceeded : Error {
  using Error::Error;
};
struct LinesNotDisjoint : Error {
  using Error::Error;
};
struct SolutionSpaceTooSmall : Error {
  using Error::Error;
};
struct InvalidFamily : Error {
  using Error::Error;
};
// File access or parse failures (distinguished so callers can map them to
// I/O exit codes rather than precondition ones).
struct IoError : Error {
  using Error::Error;
};

// The homogeneous level at which a jet stops being symplectic.
struct JetNotSymplecticToOrder : Error {
  int level;
  explicit JetNotSymplecticToOrder(int k)
      : Error("jet is not symplectic to order " + std::to_string(k)), level(k) {}
};

// A supplied family fails to span the potentials of the named level.
struct FamilyNotSpanning : Error {
  int level;
  explicit FamilyNotSpanning(int k)
      : Error("family does not span potentials at level " + std::to_string(k)), level(k) {}
};

}  // namespace symjet
