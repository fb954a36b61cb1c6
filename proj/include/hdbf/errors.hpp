#pragma once

#include <stdexcept>
#include <string>

namespace hdbf {

// Base class for every error this library raises on bad input or data that
// cannot support the requested computation.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A group has fewer samples than the requested operation needs.
class GroupTooSmall : public Error {
  public:
    using Error::Error;
};

// Matrices or vectors with incompatible shapes.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

// A variance estimate came out <= 0; the statistic cannot be standardized.
class NonPositiveVariance : public Error {
  public:
    using Error::Error;
};

// The noise term of an asymptotic power formula is <= 0.
class DegenerateDenominator : public Error {
  public:
    using Error::Error;
};

// Both drift numerators of an efficiency ratio vanish.
class ZeroSignal : public Error {
  public:
    using Error::Error;
};

// A matrix required to be positive semidefinite has a clearly negative
// eigenvalue.
class NotPositiveSemidefinite : public Error {
  public:
    using Error::Error;
};

// CSV input violating the ingestion contract.
class MalformedCsv : public Error {
  public:
    using Error::Error;
};

// Campaign or power spec file that does not parse.
class ConfigError : public Error {
  public:
    using Error::Error;
};

}  // namespace hdbf
