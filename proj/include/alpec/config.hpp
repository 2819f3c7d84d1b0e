#pragma once

#include "alpec/schemes.hpp"

#include <filesystem>
#include <utility>

namespace alpec {

/// All evaluation hyperparameters. Defaults are the framework's standard
/// choices; an empty config file is valid.
struct EvalConfig {
    double max_duration_s = 60.0;    // d; ignored when duration_unbounded
    bool duration_unbounded = false;
    double merge_distance_s = 10.0;  // delta
    double buffer_before_s = 15.0;
    double buffer_after_s = 15.0;
    double smooth_window_s = 3.0;    // w; 0 disables smoothing
    double iod_length_s = 10.0;      // l
    double window_s = 30.0;          // s
    double sampling_rate_hz = 1.0;   // f; fallback and synthesis rate
    Task task = Task::iod;
    Scheme scheme = Scheme::alpec;
    IodAlignment iod_alignment = IodAlignment::centered;
};

/// The fixed decision-threshold grid: 0.00, 0.01, ..., 1.00.
std::vector<double> const& threshold_grid();

/// Parse a flat key=value config file ('#' comments, blank lines allowed).
/// Unknown keys or unparsable values raise ValidationError with file:line.
EvalConfig load_config(std::filesystem::path const& path);

/// Apply one key=value assignment to an existing config.
void apply_config_entry(EvalConfig& cfg, std::string const& key, std::string const& value,
                        std::string const& where);

/// Canonical (key, value) listing used for report echoes; stable order.
std::vector<std::pair<std::string, std::string>> config_entries(EvalConfig const& cfg);

} // namespace alpec
