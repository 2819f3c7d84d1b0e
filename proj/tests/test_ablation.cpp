#include "alpec/ablation.hpp"

#include "alpec/matching.hpp"
#include "alpec/synth.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <random>

using namespace alpec;

TEST_CASE("buffer ablation: a larger buffer recovers heavily jittered onsets") {
    SynthParams params;
    params.n_subjects = 8;
    params.night_length_s = 14400.0;
    params.arousals_min = params.arousals_max = 80;
    params.seed = 303;
    EvalConfig cfg;
    cfg.task = Task::pod;
    auto const dataset = generate_dataset(params, {PredictorKind::jittered_oracle, 20.0, 0, 0}, cfg);

    auto const rows = run_ablation(dataset, cfg, "b", {"15", "25"}, 0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].value == "15");
    CHECK(rows[1].value == "25");
    CHECK(rows[0].aggregate.f2 < rows[1].aggregate.f2);
}

TEST_CASE("delta ablation: split predictions merge only past the split gap") {
    SynthParams params;
    params.n_subjects = 6;
    params.night_length_s = 3600.0;
    params.arousals_min = params.arousals_max = 30;
    params.min_onset_gap_s = 40.0;
    params.seed = 404;
    EvalConfig cfg;
    cfg.task = Task::fed;

    auto dataset = generate_subjects(params);
    for (auto& s : dataset) {
        s.scores.values.assign(static_cast<std::size_t>(s.scores.n_samples), 0.0);
        for (auto const& ev : s.events) {
            auto const onset = seconds_to_samples(ev.onset_s, 1.0);
            for (std::int64_t i = onset; i < onset + 3; ++i) {
                s.scores.values[static_cast<std::size_t>(i)] = 1.0;
            }
            for (std::int64_t i = onset + 11; i < onset + 14; ++i) {
                s.scores.values[static_cast<std::size_t>(i)] = 1.0;
            }
        }
    }

    auto const rows = run_ablation(dataset, cfg, "delta", {"5", "10"}, 0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].aggregate.f2 > rows[0].aggregate.f2);
}

TEST_CASE("the set of duration-eligible predictions is non-decreasing in d") {
    std::mt19937_64 rng(505);
    for (int iter = 0; iter < 200; ++iter) {
        auto const pred = testing::random_intervals(rng, 40);
        MatchConfig d10, d30, d60;
        d10.max_duration_s = 10.0;
        d30.max_duration_s = 30.0;
        d60.max_duration_s = 60.0;
        for (auto const& p : pred) {
            if (p.length() <= d10.max_duration_samples()) {
                CHECK(p.length() <= d30.max_duration_samples());
            }
            if (p.length() <= d30.max_duration_samples()) {
                CHECK(p.length() <= d60.max_duration_samples());
            }
        }
    }
}

TEST_CASE("run_ablation validates its inputs") {
    SynthParams params;
    params.n_subjects = 2;
    params.night_length_s = 600.0;
    params.arousals_min = params.arousals_max = 5;
    EvalConfig cfg;
    auto const dataset = generate_dataset(params, {PredictorKind::jittered_oracle, 0, 0, 0}, cfg);
    CHECK_THROWS_AS(run_ablation(dataset, cfg, "q", {"1"}, 1), ValidationError);
    CHECK_THROWS_AS(run_ablation(dataset, cfg, "d", {}, 1), ValidationError);
}

TEST_CASE("ablation tables carry one row per value") {
    SynthParams params;
    params.n_subjects = 4;
    params.night_length_s = 1200.0;
    params.arousals_min = params.arousals_max = 10;
    params.seed = 9;
    EvalConfig cfg;
    auto const dataset = generate_dataset(params, {PredictorKind::jittered_oracle, 2.0, 0, 0}, cfg);
    auto const rows = run_ablation(dataset, cfg, "d", {"10", "30", "60", "none"}, 0);
    REQUIRE(rows.size() == 4);
    auto const csv = ablation_to_csv("d", rows);
    CHECK(csv.find("d,mean_precision,mean_recall,mean_f2") != std::string::npos);
    CHECK(csv.find("none,") != std::string::npos);
}
