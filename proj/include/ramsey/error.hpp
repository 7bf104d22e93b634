#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Bad parameters or malformed input.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction whose feasibility inequalities do not hold.
class Infeasible : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An exact search hit its node or time cap. Never a verdict.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certificate failed independent re-validation: an implementation bug.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

} // namespace ramsey
