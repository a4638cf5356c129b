#pragma once

#include <cstddef>

#include "aoisim/aoi.hpp"
#include "aoisim/virtual_queue.hpp"

namespace aoisim {

// Ages plus virtual-queue backlogs: everything the per-slot optimizer needs
// besides the channel realization.
struct NetworkState {
    AoiVector ages;
    QueueVector queues;

    std::size_t sensor_count() const { return ages.ages.size(); }
};

}  // namespace aoisim
