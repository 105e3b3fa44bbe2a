#pragma once

#include <stdexcept>
#include <string>

namespace apfree {

// Rejected input or violated precondition. Maps to CLI exit code 1.
class InvalidArgument : public std::runtime_error {
public:
    explicit InvalidArgument(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource budget (node cap, depth cap, pair cap) was hit.
// Maps to CLI exit code 2. `partial` carries a JSON fragment describing
// the progress made before the abort, when the operation defines one.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& msg, std::string partial_json = "")
        : std::runtime_error(msg), partial(std::move(partial_json)) {}

    std::string partial;
};

}  // namespace apfree
