#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aoisim/network_state.hpp"
#include "aoisim/scenario.hpp"
#include "aoisim/slot_optimizer.hpp"

namespace aoisim {

// Everything realized in one slot, enough to re-audit the drift-plus-penalty
// bound offline.
struct SlotRecord {
    std::int64_t slot = 0;
    SlotDecision decision;
    NetworkState state_before;
    NetworkState state_after;
    double total_power_w = 0.0;
    double lyapunov_before = 0.0;
    double lyapunov_after = 0.0;
    double bound_value = 0.0;
    double dpp_value = 0.0;  // (lyapunov_after - lyapunov_before) + V * total power
};

struct EpisodeMetrics {
    std::vector<AoiAverage> avg_aoi;         // per sensor
    double avg_total_power_w = 0.0;
    std::vector<double> mean_queue_backlog;  // per sensor
    std::vector<double> sampling_frequency;  // per sensor, in [0,1]
    double min_bound_margin = 0.0;           // min over slots of bound - dpp
    std::int64_t horizon_slots = 0;
    std::vector<SlotRecord> records;         // kept only when requested
};

// Right side of the per-slot bound evaluated at realized actions, constant
// terms included: V*p + 1/2 sum_k [(cap-1/2)^2 + age'^2 + 2 Q (age' - (cap-1/2))]
// with age' the post-decision age and Q the pre-update backlog.
double bound_rhs(const QueueVector& queues_before, const AoiVector& next_ages,
                 double v_times_power);

// Checks realized drift-plus-penalty <= bound for one slot.
bool audit_bound(const SlotRecord& record, std::span<const double> aoi_caps, double v,
                 double tolerance = 1e-6);

// Runs the drift-plus-penalty controller for config.horizon_slots slots:
// draw channels, solve the slot subproblem, apply the decision, advance ages
// and queues, accumulate metrics.
EpisodeMetrics run_episode(const ScenarioConfig& config, bool keep_records = false);

}  // namespace aoisim
