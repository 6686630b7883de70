#pragma once

#include <stdexcept>
#include <string>

namespace linf {

/// Malformed input: unknown names, mismatched spaces, bad documents.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structure map or component has the wrong degree for its weight.
class StructuralError : public InputError {
public:
    StructuralError(int weight, const std::string& what)
        : InputError(what), weight_(weight) {}
    int weight() const noexcept { return weight_; }

private:
    int weight_;
};

/// An iteration that should terminate in a nilpotent setting did not.
class NonTerminationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A polynomial degree exceeded the configured t-degree guard.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace linf
