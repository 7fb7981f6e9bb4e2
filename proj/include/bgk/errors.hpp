#pragma once

#include <stdexcept>
#include <string>

namespace bgk {

/* Raised when an input is structurally valid but outside the regime a
 * computation is stated for (not p-regular, p | k, p = 2, ...).  The CLI
 * maps this to exit code 3; plain std::invalid_argument maps to exit 2. */
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bgk
