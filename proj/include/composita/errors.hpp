#pragma once

#include <stdexcept>
#include <string>

namespace composita {

/// Mixing elements or polynomials that belong to different field descriptors,
/// dividing by zero, or violating an operation precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// The request is well-posed but outside what this library can decide
/// (e.g. full factorization over a rational function field).  Callers that
/// produce reports convert this into an UNKNOWN flag with the reason string.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded generation search ran out of room: the target is not expressible
/// within the requested degree bound.  Distinct from capability_error — the
/// computation itself succeeded and the negative outcome is meaningful.
struct not_generated_error : domain_error {
    explicit not_generated_error(const std::string& what) : domain_error(what) {}
};

/// Invalid construction input, e.g. a reducible defining polynomial.
struct construction_error : std::runtime_error {
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed.  Always indicates a bug; never
/// downgraded to UNKNOWN.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Syntax error in CLI input, with a 1-based column position.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t column)
        : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    std::size_t column() const { return column_; }

  private:
    std::size_t column_;
};

} // namespace composita
