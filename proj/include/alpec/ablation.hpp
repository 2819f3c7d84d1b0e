#pragma once

#include "alpec/metrics.hpp"

namespace alpec {

struct AblationRow {
    std::string value; // as given; "none" allowed for d
    MetricSet aggregate;
};

/// Re-run the evaluation once per value of one hyperparameter
/// (w, l, d, delta, or b = both buffers), holding the rest of the config
/// fixed. Values are parsed with the config-file rules, so "none" works
/// for d.
std::vector<AblationRow> run_ablation(std::span<SubjectRecord const> dataset,
                                      EvalConfig const& base, std::string const& parameter,
                                      std::vector<std::string> const& values, int threads = 0);

std::string ablation_to_csv(std::string const& parameter, std::span<AblationRow const> rows);

} // namespace alpec
