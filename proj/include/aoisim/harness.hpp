#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "aoisim/controller.hpp"
#include "aoisim/scenario.hpp"

namespace aoisim {

// One sweep row: statistics over all seeds for one V value.
struct SweepRow {
    double v = 0.0;
    std::size_t num_seeds = 0;
    std::vector<double> aoi_mean;  // per sensor, mean over seeds of the episode average AoI
    std::vector<double> aoi_std;   // sample standard deviation (0 for a single seed)
    double power_mean = 0.0;
    double power_std = 0.0;
    std::vector<double> slack;     // per sensor: cap - aoi_mean
};

// Runs one episode per (V, seed) cell. Seed entries are episode indices; each
// episode streams from config.seed XOR entry. Lists are deduplicated and
// sorted, so execution order never affects the output. Rows come back sorted
// by V.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, std::span<const double> v_values,
                                std::span<const std::uint64_t> seeds);

std::string summary_to_string(std::span<const SweepRow> rows, std::size_t sensors);
void write_summary(std::span<const SweepRow> rows, std::size_t sensors,
                   const std::filesystem::path& path);

std::string episode_summary_to_string(const EpisodeMetrics& metrics,
                                      const ScenarioConfig& config);
void write_episode_summary(const EpisodeMetrics& metrics, const ScenarioConfig& config,
                           const std::filesystem::path& path);

// Trace: one row per (slot, sensor) with the pre-decision state, the sampling
// bit, the assigned-subchannel bitmask, the spent power, and the slot
// objective term of that sensor.
std::string trace_to_string(std::span<const SlotRecord> records, double v);
void write_trace(std::span<const SlotRecord> records, double v,
                 const std::filesystem::path& path);

}  // namespace aoisim
