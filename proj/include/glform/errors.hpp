#pragma once

#include <stdexcept>
#include <string>

namespace glform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PD text or crossing data (bad labels, bad grammar).
class MalformedPD : public Error {
 public:
  using Error::Error;
};

/// Braid letter out of range or unparsable braid text.
class MalformedBraid : public Error {
 public:
  using Error::Error;
};

/// Input describes a link with more than one component.
class NotAKnot : public Error {
 public:
  using Error::Error;
};

class NotAlternating : public Error {
 public:
  using Error::Error;
};

/// Braid word omits a generator, so Seifert's algorithm gives a split surface.
class DisconnectedSurface : public Error {
 public:
  using Error::Error;
};

class BadRegion : public Error {
 public:
  using Error::Error;
};

class BadVector : public Error {
 public:
  using Error::Error;
};

class BadMatrix : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails. Always a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace glform
