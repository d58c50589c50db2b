#pragma once

#include <stdexcept>
#include <string>

namespace finetti {

// Raised when an exact-rational evaluation is requested outside the
// bounds where its cost stays manageable.
struct cost_guard_error : std::runtime_error {
    explicit cost_guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finetti
