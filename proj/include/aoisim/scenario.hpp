#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aoisim/channel.hpp"

namespace aoisim {

// Structured configuration/IO failure. category is machine-readable
// ("config_validation", "parse", "io"); fields lists the offending config
// paths, e.g. "radio.noise_psd_w_per_hz".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string category, std::vector<std::string> fields, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)), fields_(std::move(fields)) {}

    const std::string& category() const { return category_; }
    const std::vector<std::string>& fields() const { return fields_; }

private:
    std::string category_;
    std::vector<std::string> fields_;
};

struct ScenarioConfig {
    Topology topology;
    RadioConstants radio;
    std::size_t num_subchannels = 0;
    std::vector<double> power_max_w;  // per sensor
    std::vector<double> aoi_max;      // per sensor, slots
    double v = 0.0;
    std::int64_t horizon_slots = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> trace_path;
    std::optional<std::string> summary_path;

    std::size_t sensor_count() const { return topology.sensor_count(); }
    void validate() const;  // throws ConfigError listing every offending field
};

// JSON config IO. Key names carry units (bandwidth_per_subchannel_hz,
// packet_bytes, ...); parse errors name the field or byte position.
ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);
std::string config_to_text(const ScenarioConfig& config);

// Two-sensor reference scenario matching the bundled configs/default.json.
ScenarioConfig default_scenario();

}  // namespace aoisim
