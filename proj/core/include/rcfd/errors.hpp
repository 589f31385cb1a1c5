#pragma once

#include <stdexcept>
#include <string>

namespace rcfd {

// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error { public: using Error::Error; };
class ZeroInverse : public Error { public: using Error::Error; };
class ShapeMismatch : public Error { public: using Error::Error; };
class KMismatch : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class UnverifiedInput : public Error { public: using Error::Error; };
class UnsupportedShape : public Error { public: using Error::Error; };
class FieldMismatch : public Error { public: using Error::Error; };
class Indivisible : public Error { public: using Error::Error; };
class BadBase : public Error { public: using Error::Error; };
class NoSuchPair : public Error { public: using Error::Error; };
class KernelUnavailable : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };

// Raised when a construction violates one of its own guaranteed
// postconditions. Seeing this means a bug, not bad input.
class InternalAssertion : public Error { public: using Error::Error; };

// Parse failures carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line_no, int col_no)
      : Error(msg + " (line " + std::to_string(line_no) + ", column " +
              std::to_string(col_no) + ")"),
        line(line_no),
        col(col_no) {}

  int line;
  int col;
};

}  // namespace rcfd
