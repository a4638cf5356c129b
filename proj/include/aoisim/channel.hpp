#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "aoisim/rng.hpp"

namespace aoisim {

// Radio constants shared by every subchannel. packet_size_bits is the fixed
// status-update size; slot_duration_s converts a rate in bits/s into bits per
// slot so that "rate equals packet size" is dimensionally consistent.
struct RadioConstants {
    double bandwidth_per_subchannel_hz = 0.0;
    double noise_psd_w_per_hz = 0.0;
    double slot_duration_s = 1.0;
    std::int64_t packet_size_bits = 0;

    double noise_power_w() const { return bandwidth_per_subchannel_hz * noise_psd_w_per_hz; }
    void validate() const;  // throws std::invalid_argument on the first bad field
};

// Sensor/sink geometry plus the fading law parameters. The path loss exponent
// is applied as (d/d0)^exponent, so a negative exponent makes gain fall with
// distance.
struct Topology {
    std::vector<std::array<double, 2>> sensor_positions_m;
    std::array<double, 2> sink_position_m{0.0, 0.0};
    double path_loss_exponent = 0.0;
    double reference_distance_m = 1.0;
    double rayleigh_scale = 0.0;

    std::size_t sensor_count() const { return sensor_positions_m.size(); }
    double distance_to_sink_m(std::size_t sensor) const;
    double large_scale_amplitude(std::size_t sensor) const;  // (d/d0)^exponent
    void validate() const;
};

// Channel power gains |h|^2 for one slot, sensors x subchannels.
struct ChannelRealization {
    std::size_t sensors = 0;
    std::size_t subchannels = 0;
    std::int64_t slot_index = 0;
    std::vector<double> gains;  // row-major

    double gain(std::size_t sensor, std::size_t subchannel) const {
        return gains[sensor * subchannels + subchannel];
    }
};

// One independent Rayleigh draw per (sensor, subchannel), row-major order:
// gain = ((d/d0)^xi * c)^2.
ChannelRealization draw_channels(const Topology& topology, std::size_t num_subchannels,
                                 std::int64_t slot, RandomStream& stream);

// p * g / (W * N0).
double snr(double power_w, double gain, const RadioConstants& constants);

// slot_duration * W * log2(1 + snr); zero iff power * gain is zero.
double rate_bits_per_slot(double power_w, double gain, const RadioConstants& constants);

}  // namespace aoisim
