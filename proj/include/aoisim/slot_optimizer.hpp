#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aoisim/channel.hpp"
#include "aoisim/network_state.hpp"

namespace aoisim {

// Assignment entry for a subchannel no sensor transmits on.
inline constexpr int kIdleSubchannel = -1;

// Exhaustive search guard: (K+1)^N candidate maps at most.
inline constexpr std::uint64_t kMaxAssignmentMaps = 1'000'000;

struct SlotDecision {
    std::vector<std::uint8_t> sampled;  // per sensor
    std::vector<int> assignment;        // per subchannel: sensor index or kIdleSubchannel
    std::vector<double> powers;         // row-major, sensors x subchannels
    double objective_value = 0.0;

    double power(std::size_t sensor, std::size_t subchannel) const {
        return powers[sensor * assignment.size() + subchannel];
    }
    double total_power_w() const;
};

// Objective term a sampling decision adds for one sensor:
// 1/2 * (1 - (age+1)^2 - 2 * backlog * age). Zero at age 0, negative once the
// sensor has anything to gain from a fresh sample.
double sensor_weight(std::int64_t age, double backlog);

// Per-slot subproblem: minimize V * total power + sum_k b_k * weight_k over
// all (K+1)^N subchannel maps, sampling vectors, and continuous powers,
// subject to subchannel exclusivity, per-sensor power caps, and the
// rate-equality constraint. Sensors sample iff their candidate cost is
// strictly negative; ties across maps break to the lexicographically smallest
// assignment (idle ordered after every sensor index), then the smallest
// sampling vector. The all-idle decision is always feasible, so the returned
// objective is never positive.
SlotDecision solve_slot(const NetworkState& state, const ChannelRealization& channels, double v,
                        std::span<const double> power_caps_w, const RadioConstants& constants);

}  // namespace aoisim
