#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taylor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration or closure cap was hit before completion.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class NotClosed : public Error { using Error::Error; };
class NotACongruence : public Error { using Error::Error; };
class SignatureMismatch : public Error { using Error::Error; };
class NotSubdirect : public Error { using Error::Error; };
class NotCompatible : public Error { using Error::Error; };
class ArityMismatch : public Error { using Error::Error; };
class NoCyclicWitness : public Error { using Error::Error; };
class SEdgeMismatch : public Error { using Error::Error; };
class PreconditionViolated : public Error { using Error::Error; };
class LimitExceeded : public Error { using Error::Error; };
class NotPolynomial : public Error { using Error::Error; };
class NotConsistent : public Error { using Error::Error; };
class NotRetractive : public Error { using Error::Error; };
class HypothesisUnmet : public Error { using Error::Error; };
/// Two independent decision procedures disagreed.
class CrossCheckFailed : public Error { using Error::Error; };

}  // namespace taylor
