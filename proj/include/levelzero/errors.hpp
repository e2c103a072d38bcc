// levelzero: error taxonomy. Every failure mode that callers are expected to
// handle has its own exception type carrying a stable process exit code, so
// the command-line tool can map failures onto distinct, documented statuses.
#pragma once

#include <stdexcept>
#include <string>

namespace levelzero {

class Error : public std::runtime_error {
 public:
  Error(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// A matrix required to be invertible (over Q, or over Z where stated) is not.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(10, what) {}
};

// A sublattice is not stable under the endomorphism acting on the quotient.
class NotStable : public Error {
 public:
  explicit NotStable(const std::string& what) : Error(11, what) {}
};

// A requested group is malformed or outside the supported families.
class UnsupportedSpec : public Error {
 public:
  explicit UnsupportedSpec(const std::string& what) : Error(12, what) {}
};

// A Levi subset must be stable under the twist for twisted transfer.
class NotThetaStable : public Error {
 public:
  explicit NotThetaStable(const std::string& what) : Error(13, what) {}
};

// An enumeration would exceed the hard size cap (10^6 elements).
class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error(14, what) {}
};

// An order bound is above the cap or shares a factor with an excluded prime.
class BoundTooLarge : public Error {
 public:
  explicit BoundTooLarge(const std::string& what) : Error(15, what) {}
};

// Alcove combinatorics are implemented for split (untwisted) data only.
class TwistedUnsupported : public Error {
 public:
  explicit TwistedUnsupported(const std::string& what) : Error(16, what) {}
};

// Facet restriction was requested along a pair that is not a face relation.
class NotAFace : public Error {
 public:
  explicit NotAFace(const std::string& what) : Error(17, what) {}
};

// A (coordinate, twist) pair fails its defining compatibility equation.
class IncompatiblePair : public Error {
 public:
  explicit IncompatiblePair(const std::string& what) : Error(18, what) {}
};

// A base-vertex selection does not name a hyperspecial vertex.
class BadVertex : public Error {
 public:
  explicit BadVertex(const std::string& what) : Error(19, what) {}
};

// Command-line configuration is syntactically fine but semantically invalid.
class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& what) : Error(20, what) {}
};

}  // namespace levelzero
