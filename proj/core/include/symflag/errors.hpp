#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symflag {

/// Base of every structured failure raised by the library. `kind()` is the
/// stable machine-readable name that reports and the CLI print.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SYMFLAG_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& message) : Error(#Name, message) {}  \
  }

SYMFLAG_DEFINE_ERROR(UnknownRoot);
SYMFLAG_DEFINE_ERROR(BudgetExceeded);
SYMFLAG_DEFINE_ERROR(FloorBoundary);
SYMFLAG_DEFINE_ERROR(NotInChamber);
SYMFLAG_DEFINE_ERROR(NotSmall);
SYMFLAG_DEFINE_ERROR(LatticeNotStable);
SYMFLAG_DEFINE_ERROR(NotDominant);
SYMFLAG_DEFINE_ERROR(NotUgly);
SYMFLAG_DEFINE_ERROR(ModeMismatch);
SYMFLAG_DEFINE_ERROR(NotInImplementedSector);
SYMFLAG_DEFINE_ERROR(Degenerate);
SYMFLAG_DEFINE_ERROR(QuadratureNotConverged);
SYMFLAG_DEFINE_ERROR(InvariantViolation);

#undef SYMFLAG_DEFINE_ERROR

/// Vector lies on one or more walls; `walls` holds the offending root indices.
class NotRegular : public Error {
 public:
  NotRegular(const std::string& message, std::vector<std::size_t> walls)
      : Error("NotRegular", message), walls_(std::move(walls)) {}
  const std::vector<std::size_t>& walls() const noexcept { return walls_; }

 private:
  std::vector<std::size_t> walls_;
};

/// Some (w, q) has no chamber witness inside the enumeration window.
class WindowTooSmall : public Error {
 public:
  WindowTooSmall(const std::string& message, std::vector<std::string> missing)
      : Error("WindowTooSmall", message), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// Malformed catalog input. `location` is "line N" for syntax errors and a
/// JSON pointer for field-level errors.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& location, const std::string& message)
      : Error("SchemaError", location + ": " + message), location_(location) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace symflag
