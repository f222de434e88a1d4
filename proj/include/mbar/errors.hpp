#pragma once

#include <stdexcept>
#include <string>

namespace mbar {

/// Violation of an input constraint (wrong space, bad index, broken weight
/// constraint, ...). Messages quote the violated constraint so the CLI can
/// surface them verbatim.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mbar
