#pragma once

#include <stdexcept>
#include <string>

namespace sgtop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CarrierMismatch : Error {
  using Error::Error;
};

struct PointOutOfRange : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

// validate_topology failures
struct MissingEmptyOrFull : Error {
  using Error::Error;
};
struct NotClosedUnderUnion : Error {
  using Error::Error;
};
struct NotClosedUnderIntersection : Error {
  using Error::Error;
};

struct EmptySubspace : Error {
  using Error::Error;
};
struct ProductTooLarge : Error {
  using Error::Error;
};
struct CarrierTooLarge : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

struct NotRepresentable : Error {
  using Error::Error;
};

struct UnknownClaim : Error {
  using Error::Error;
};
struct UnknownTarget : Error {
  using Error::Error;
};

}  // namespace sgtop
