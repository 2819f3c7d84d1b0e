#pragma once

#include "alpec/config.hpp"
#include "alpec/core.hpp"

#include <random>

namespace alpec {

/// SplitMix64 finalizer; used to derive independent per-subject streams.
std::uint64_t splitmix64(std::uint64_t x);

/// Order-insensitive combination of a base seed and a stream index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// FNV-1a 64-bit hash, for deriving streams from subject ids.
std::uint64_t fnv1a64(std::string const& s);

/// mt19937_64 with explicit, implementation-independent derivations: the
/// engine is fully specified by the standard, the distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1), 53 bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n) via rejection sampling.
    std::uint64_t below(std::uint64_t n);

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 eng_;
};

struct SynthParams {
    std::int64_t n_subjects = 20;
    double night_length_s = 28800.0; // 8 h
    double sampling_rate_hz = 1.0;
    std::int64_t arousals_min = 167;
    std::int64_t arousals_max = 167;
    double min_onset_gap_s = 13.0;
    double event_duration_s = 3.0; // clinical default
    std::uint64_t seed = 0;
    std::string label = "arousal";
};

enum class PredictorKind { constant0, constant1, random_uniform, random_stratified, jittered_oracle };

std::string to_string(PredictorKind k);
PredictorKind predictor_kind_from_string(std::string const& s);

struct Predictor {
    PredictorKind kind = PredictorKind::constant0;
    double jitter_s = 0.0;   // jittered_oracle only
    double miss_rate = 0.0;
    double extra_rate = 0.0;
};

/// One subject with uniformly placed onsets respecting the minimum gap
/// (plus a leading margin of one gap, matching the scoring rule that an
/// arousal needs preceding sleep). Deterministic per (seed, index). The
/// score stream is an all-zero pointwise placeholder until predict() runs.
SubjectRecord generate_subject(SynthParams const& params, std::int64_t subject_index);

/// n_subjects records with folds assigned alternately train/validation.
std::vector<SubjectRecord> generate_subjects(SynthParams const& params);

/// Score stream for one subject. Window-label predictors emit windowed
/// binary labels; jittered_oracle emits pointwise 0/1 scores rasterizing
/// the task targets, each one shifted by uniform jitter, dropped with
/// miss_rate, plus same-length spurious intervals injected with
/// extra_rate. Deterministic per (seed, subject_id).
ScoreSeries predict(Predictor const& predictor, SubjectRecord const& subject,
                    EvalConfig const& cfg, std::uint64_t seed);

/// generate_subjects + predict over the whole dataset.
std::vector<SubjectRecord> generate_dataset(SynthParams const& params, Predictor const& predictor,
                                            EvalConfig const& cfg);

} // namespace alpec
