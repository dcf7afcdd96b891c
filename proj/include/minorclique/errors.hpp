#ifndef MINORCLIQUE_ERRORS_HPP
#define MINORCLIQUE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minorclique {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text (graph6 or edge-list JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search or materialization refused because the input is larger
/// than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace detail
}  // namespace minorclique

#endif  // MINORCLIQUE_ERRORS_HPP
