#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

/// A mathematical precondition failed (mismatched algebras, an element
/// outside the cone, a singular operator, ...).
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jordan
