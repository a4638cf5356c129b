#include "aoisim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aoisim {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void RadioConstants::validate() const {
    require(positive_finite(bandwidth_per_subchannel_hz),
            "bandwidth_per_subchannel_hz must be finite and > 0");
    require(positive_finite(noise_psd_w_per_hz), "noise_psd_w_per_hz must be finite and > 0");
    require(positive_finite(slot_duration_s), "slot_duration_s must be finite and > 0");
    require(packet_size_bits > 0, "packet_size_bits must be > 0");
}

double Topology::distance_to_sink_m(std::size_t sensor) const {
    const auto& p = sensor_positions_m[sensor];
    const double dx = p[0] - sink_position_m[0];
    const double dy = p[1] - sink_position_m[1];
    return std::hypot(dx, dy);
}

double Topology::large_scale_amplitude(std::size_t sensor) const {
    return std::pow(distance_to_sink_m(sensor) / reference_distance_m, path_loss_exponent);
}

void Topology::validate() const {
    require(!sensor_positions_m.empty(), "at least one sensor position required");
    require(positive_finite(reference_distance_m), "reference_distance_m must be finite and > 0");
    require(positive_finite(rayleigh_scale), "rayleigh_scale must be finite and > 0");
    require(std::isfinite(path_loss_exponent), "path_loss_exponent must be finite");
    require(std::isfinite(sink_position_m[0]) && std::isfinite(sink_position_m[1]),
            "sink_position_m must be finite");
    for (std::size_t k = 0; k < sensor_positions_m.size(); ++k) {
        const auto& p = sensor_positions_m[k];
        require(std::isfinite(p[0]) && std::isfinite(p[1]),
                "sensor position " + std::to_string(k) + " must be finite");
        require(distance_to_sink_m(k) > 0.0,
                "sensor " + std::to_string(k) + " coincides with the sink");
    }
}

ChannelRealization draw_channels(const Topology& topology, std::size_t num_subchannels,
                                 std::int64_t slot, RandomStream& stream) {
    const std::size_t sensors = topology.sensor_count();
    ChannelRealization out;
    out.sensors = sensors;
    out.subchannels = num_subchannels;
    out.slot_index = slot;
    out.gains.resize(sensors * num_subchannels);
    for (std::size_t k = 0; k < sensors; ++k) {
        const double amplitude = topology.large_scale_amplitude(k);
        for (std::size_t n = 0; n < num_subchannels; ++n) {
            const double h = amplitude * stream.rayleigh(topology.rayleigh_scale);
            out.gains[k * num_subchannels + n] = h * h;
        }
    }
    return out;
}

double snr(double power_w, double gain, const RadioConstants& constants) {
    return power_w * gain / constants.noise_power_w();
}

double rate_bits_per_slot(double power_w, double gain, const RadioConstants& constants) {
    return constants.slot_duration_s * constants.bandwidth_per_subchannel_hz *
           std::log2(1.0 + snr(power_w, gain, constants));
}

}  // namespace aoisim
