#pragma once

#include <cstdint>
#include <vector>

#include "aoisim/aoi.hpp"

namespace aoisim {

// Virtual queues that enforce the per-sensor average-AoI caps. A cap must
// exceed 1/2, the unconditional lower bound of the average AoI.
struct QueueVector {
    std::vector<double> backlogs;
    std::vector<double> aoi_caps;

    static QueueVector initial(std::vector<double> caps);
    void validate() const;  // throws std::invalid_argument
};

// Per sensor: Q <- max(Q - (cap - 1/2), 0) + next_age.
QueueVector update_queue(const QueueVector& queues, const AoiVector& next_ages);

// 1/2 * sum_k Q_k^2.
double lyapunov_value(const QueueVector& queues);

// cap_k - average_k per sensor; nonnegative means the constraint is met.
std::vector<double> constraint_slack(const std::vector<AoiAverage>& averages,
                                     const std::vector<double>& caps);

// Incremental mean, used for the queue-stability diagnostic.
struct RunningMean {
    double mean = 0.0;
    std::int64_t count = 0;

    void add(double x) {
        ++count;
        mean += (x - mean) / static_cast<double>(count);
    }
};

}  // namespace aoisim
