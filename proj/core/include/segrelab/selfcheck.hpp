#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace segrelab {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Names of the built-in invariant suite, in run order.
std::vector<std::string> property_names();

/// Runs one property. Throws std::invalid_argument for an unknown name.
PropertyResult run_property(std::string_view name, std::uint64_t seed = 0, unsigned workers = 0);

/// Runs every property, or only `only`.
std::vector<PropertyResult> run_properties(const std::optional<std::string>& only = std::nullopt,
                                           std::uint64_t seed = 0, unsigned workers = 0);

}  // namespace segrelab
