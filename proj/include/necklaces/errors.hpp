#pragma once

#include <stdexcept>

namespace necklaces {

// Thrown when an exhaustive operation would exceed its work ceiling.
// The message names the cheaper alternative (usually a closed formula).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace necklaces
