#pragma once

#include <stdexcept>

namespace xgd {

/// A state file (or other structured input) could not be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A class-specific closed form was requested for a state of another class.
class ClassMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace xgd
