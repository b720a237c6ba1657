#include "dilatelab/errors.hpp"

#include <atomic>
#include <cstdio>

namespace dilatelab {

namespace {
std::atomic<std::size_t> g_element_budget{std::size_t{1} << 26};
}

std::size_t element_budget() { return g_element_budget.load(); }

void set_element_budget(std::size_t budget) { g_element_budget.store(budget); }

void check_budget(double count, const std::string& what) {
    const auto budget = element_budget();
    if (!(count <= static_cast<double>(budget))) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s would materialize about %.3g elements (budget %zu)",
                      what.c_str(), count, budget);
        throw budget_error(buf);
    }
}

}  // namespace dilatelab
