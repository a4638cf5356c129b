#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aoisim/channel.hpp"

namespace aoisim {

struct AllocationResult {
    std::vector<double> per_subchannel_power_w;  // aligned with the input gain list
    double total_power_w = 0.0;
    double achieved_rate_bits = 0.0;
};

// Minimum total power whose summed rate over the given subchannels equals the
// packet size exactly. Water-filling: p_n = max(0, mu - W*N0/g_n), with the
// water level bisected in log2(mu) and then tightened by the closed form on
// the identified active set. Gains must be strictly positive; callers filter
// zero-gain subchannels, which can never carry rate.
//
// When the packet cannot be carried within double range the returned total
// is +inf (and min_power_capped reports infeasible).
AllocationResult min_power_for_rate(std::span<const double> gains,
                                    const RadioConstants& constants);

// Same allocation, or nullopt when the total exceeds p_max. The cap is
// boundary-inclusive; 1e-12 relative slack absorbs rounding of exact-boundary
// cases.
std::optional<AllocationResult> min_power_capped(std::span<const double> gains,
                                                 const RadioConstants& constants, double p_max);

}  // namespace aoisim
