#pragma once

// Error types shared across the library, plus the global element budget that
// guards enumeration kernels against runaway memory use.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dilatelab {

// Thrown when an operation would materialize more elements than the
// configured budget allows. The CLI maps this to exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Maximum number of elements any single enumeration is allowed to produce.
std::size_t element_budget();
void set_element_budget(std::size_t budget);

// Throws budget_error mentioning `what` if `count` exceeds the budget.
void check_budget(double count, const std::string& what);

}  // namespace dilatelab
