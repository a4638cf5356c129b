#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aoisim {

// Per-sensor age of information in whole slots. Ages are zero only at
// initialization; any update leaves every entry >= 1.
struct AoiVector {
    std::vector<std::int64_t> ages;
    std::int64_t slot_index = 1;

    static AoiVector initial(std::size_t sensors) {
        return {std::vector<std::int64_t>(sensors, 0), 1};
    }
};

// Case-split recursion: sampled sensors drop to age 1, the rest age by one.
AoiVector step_aoi(const AoiVector& ages, const std::vector<std::uint8_t>& sampled);

// Time-average AoI accumulator. The 1/2 offset is the per-slot triangle of
// the age curve; the accumulated ages are the parallelogram parts.
struct AoiAverage {
    double running_sum = 0.0;
    std::int64_t slots_counted = 0;

    double value() const { return 0.5 + running_sum / static_cast<double>(slots_counted); }
};

AoiAverage accumulate_average(AoiAverage avg, std::int64_t age_at_slot);

}  // namespace aoisim
