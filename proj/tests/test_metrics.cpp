#include "alpec/metrics.hpp"

#include "alpec/report_io.hpp"
#include "alpec/schemes.hpp"
#include "alpec/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace alpec;

TEST_CASE("compute_metrics on plain counts") {
    auto const m = compute_metrics(1, 1, 1);
    CHECK(m.precision == 0.5);
    CHECK(m.recall == 0.5);
    CHECK(m.f1 == 0.5);
    CHECK(m.f2 == 0.5);

    auto const skew = compute_metrics(1, 4, 0);
    CHECK(skew.precision == doctest::Approx(0.2));
    CHECK(skew.recall == 1.0);
    CHECK(skew.f2 == doctest::Approx(1.0 / 1.8));
}

TEST_CASE("compute_metrics degenerate conventions") {
    auto const empty = compute_metrics(0, 0, 0);
    CHECK(empty.precision == 1.0);
    CHECK(empty.recall == 1.0);
    CHECK(empty.f1 == 1.0);
    CHECK(empty.f2 == 1.0);

    CHECK(compute_metrics(0, 3, 0).precision == 0.0);
    CHECK(compute_metrics(0, 0, 3).recall == 0.0);
    CHECK(compute_metrics(0, 2, 5).f2 == 0.0);
    CHECK_THROWS_AS(compute_metrics(-1, 0, 0), ValidationError);
}

TEST_CASE("F-beta lies between precision and recall; F2 = F1 when P = R") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> count(0, 40);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t const tp = count(rng), fp = count(rng), fn = count(rng);
        auto const m = compute_metrics(tp, fp, fn);
        double const lo = std::min(m.precision, m.recall);
        double const hi = std::max(m.precision, m.recall);
        if (tp + fp + fn == 0) continue;
        if (m.f2 > 0.0) {
            CHECK(m.f2 >= lo - 1e-12);
            CHECK(m.f2 <= hi + 1e-12);
        }
        if (m.precision == m.recall) {
            CHECK(m.f1 == doctest::Approx(m.precision));
            CHECK(m.f2 == doctest::Approx(m.precision));
        }
    }
}

TEST_CASE("select_threshold maximizes the subject-mean F2") {
    ThresholdSweep sweep;
    sweep.thresholds = {0.0, 0.01};
    sweep.subject_ids = {"a", "b"};
    sweep.per_subject_f2 = {{0.2, 0.6}, {0.4, 0.8}};
    auto const t = select_threshold(sweep);
    CHECK(t.index == 1);
    CHECK(t.value == 0.01);
}

TEST_CASE("select_threshold breaks ties at the smallest threshold") {
    ThresholdSweep sweep;
    sweep.thresholds = {0.0, 0.01, 0.02};
    sweep.subject_ids = {"a"};
    sweep.per_subject_f2 = {{0.3, 0.7, 0.7}};
    CHECK(select_threshold(sweep).value == 0.01);
}

TEST_CASE("select_threshold on a single cell and on an empty sweep") {
    ThresholdSweep sweep;
    sweep.thresholds = {0.42};
    sweep.subject_ids = {"a"};
    sweep.per_subject_f2 = {{0.9}};
    CHECK(select_threshold(sweep).value == 0.42);

    ThresholdSweep empty;
    empty.thresholds = threshold_grid();
    CHECK_THROWS_AS(select_threshold(empty), ValidationError);
}

TEST_CASE("argmax is invariant under strictly increasing transforms") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> value(0.0, 1.0);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<double> means(101);
        for (auto& v : means) v = value(rng);
        auto const base = argmax_smallest(means);
        std::vector<double> squared = means, shifted = means;
        for (auto& v : squared) v = v * v;          // strictly increasing on [0,1]
        for (auto& v : shifted) v = 3.0 * v + 1.0;  // affine increasing
        CHECK(argmax_smallest(squared) == base);
        CHECK(argmax_smallest(shifted) == base);
    }
}

TEST_CASE("the threshold grid is exactly 0.00..1.00 in steps of 0.01") {
    auto const& grid = threshold_grid();
    REQUIRE(grid.size() == 101);
    for (int k = 0; k <= 100; ++k) CHECK(grid[static_cast<std::size_t>(k)] == k / 100.0);
}

namespace {

// Two-subject dataset whose pointwise scores rasterize the fed targets.
std::vector<SubjectRecord> self_match_dataset() {
    std::vector<SubjectRecord> out;
    for (int s = 0; s < 2; ++s) {
        SubjectRecord rec;
        rec.subject_id = s == 0 ? "train0" : "val0";
        rec.fold = s == 0 ? Fold::train : Fold::validation;
        for (double onset : {100.0, 200.0, 321.0}) {
            rec.events.push_back({"arousal", onset, 3.0});
        }
        rec.scores.resolution = Resolution::pointwise;
        rec.scores.sampling_rate_hz = 1.0;
        rec.scores.n_samples = 600;
        rec.scores.values.assign(600, 0.0);
        for (auto const& ev : rec.events) {
            for (int i = 0; i < 3; ++i) {
                rec.scores.values[static_cast<std::size_t>(ev.onset_s) + static_cast<std::size_t>(i)] = 1.0;
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

TEST_CASE("exact self-match scores 1.0 everywhere") {
    auto const dataset = self_match_dataset();
    EvalConfig cfg;
    cfg.task = Task::fed;
    auto const report = evaluate(dataset, cfg, 1);
    REQUIRE(report.per_subject.size() == 1);
    CHECK(report.per_subject[0].metrics.precision == 1.0);
    CHECK(report.per_subject[0].metrics.recall == 1.0);
    CHECK(report.per_subject[0].metrics.f2 == 1.0);
    CHECK(report.aggregate.f2 == 1.0);
    REQUIRE(report.t_opt.has_value());
    CHECK(report.t_opt->value > 0.0);
}

TEST_CASE("pointwise evaluation scheme through the full pipeline") {
    auto const dataset = self_match_dataset();
    EvalConfig cfg;
    cfg.task = Task::fed;
    cfg.scheme = Scheme::pe;
    auto const report = evaluate(dataset, cfg, 1);
    REQUIRE(report.t_opt.has_value());
    // smoothing makes low thresholds over-mark and high thresholds
    // under-mark; the sweep settles on the exact-support band
    CHECK(report.per_subject[0].metrics.precision == 1.0);
    CHECK(report.per_subject[0].metrics.recall == 1.0);
    CHECK(report.per_subject[0].counts.tp == 9); // three 3-sample events
    CHECK(report.per_subject[0].counts.matched_pairs.empty());
}

TEST_CASE("window-based evaluation scheme reduces pointwise predictions") {
    auto const dataset = self_match_dataset();
    EvalConfig cfg;
    cfg.task = Task::fed;
    cfg.scheme = Scheme::we;
    auto const report = evaluate(dataset, cfg, 1);
    // events sit in windows 3, 6 and 10; predictions land in the same ones
    CHECK(report.per_subject[0].counts.tp == 3);
    CHECK(report.per_subject[0].metrics.precision == 1.0);
    CHECK(report.per_subject[0].metrics.recall == 1.0);
}

TEST_CASE("windowed probability scores run through the sweep") {
    std::vector<SubjectRecord> dataset;
    for (int s = 0; s < 2; ++s) {
        SubjectRecord rec;
        rec.subject_id = "w" + std::to_string(s);
        rec.fold = s == 0 ? Fold::train : Fold::validation;
        rec.events = {{"arousal", 100.0, 3.0}, {"arousal", 200.0, 3.0}, {"arousal", 321.0, 3.0}};
        rec.scores.resolution = Resolution::windowed;
        rec.scores.sampling_rate_hz = 1.0;
        rec.scores.n_samples = 600;
        rec.scores.values.assign(20, 0.1);
        for (std::size_t window : {3u, 6u, 10u}) rec.scores.values[window] = 0.8;
        dataset.push_back(std::move(rec));
    }

    for (auto const scheme : {Scheme::we, Scheme::alpec}) {
        EvalConfig cfg;
        cfg.task = Task::fed;
        cfg.scheme = scheme;
        auto const report = evaluate(dataset, cfg, 1);
        REQUIRE(report.t_opt.has_value());
        CHECK(report.t_opt->value == 0.11); // smallest t above the background score
        CHECK(report.per_subject[0].metrics.precision == 1.0);
        CHECK(report.per_subject[0].metrics.recall == 1.0);
        CHECK(report.per_subject[0].metrics.f2 == 1.0);
    }
}

TEST_CASE("evaluate errors on an empty validation fold or missing train fold") {
    auto dataset = self_match_dataset();
    EvalConfig cfg;
    cfg.task = Task::fed;

    auto no_val = dataset;
    no_val[1].fold = Fold::test;
    CHECK_THROWS_WITH_AS(evaluate(no_val, cfg, 1), doctest::Contains("validation"),
                         ValidationError);

    auto no_train = dataset;
    no_train[0].fold = Fold::test;
    CHECK_THROWS_WITH_AS(evaluate(no_train, cfg, 1), doctest::Contains("train"), ValidationError);
}

TEST_CASE("binary window-label input skips thresholding") {
    SynthParams params;
    params.n_subjects = 4;
    params.night_length_s = 1800.0;
    params.arousals_min = params.arousals_max = 12;
    params.seed = 5;
    EvalConfig cfg;
    Predictor constant1{PredictorKind::constant1, 0, 0, 0};
    auto const dataset = generate_dataset(params, constant1, cfg);
    auto const report = evaluate(dataset, cfg, 1);
    CHECK_FALSE(report.t_opt.has_value());
}

TEST_CASE("report aggregate equals per-subject means and is validated") {
    auto const dataset = self_match_dataset();
    EvalConfig cfg;
    cfg.task = Task::fed;
    auto report = evaluate(dataset, cfg, 1);
    CHECK_NOTHROW(validate_report(report));
    report.aggregate.f2 += 0.25;
    CHECK_THROWS_AS(validate_report(report), ValidationError);
}

TEST_CASE("parallel evaluation matches the serial reference byte for byte") {
    SynthParams params;
    params.n_subjects = 6;
    params.night_length_s = 2400.0;
    params.arousals_min = 10;
    params.arousals_max = 20;
    params.min_onset_gap_s = 21.0;
    params.seed = 31;
    EvalConfig cfg;
    Predictor oracle{PredictorKind::jittered_oracle, 5.0, 0.2, 0.4};
    auto const dataset = generate_dataset(params, oracle, cfg);

    auto const serial = reference::evaluate(dataset, cfg);
    for (int threads : {1, 2, 8}) {
        auto const parallel = evaluate(dataset, cfg, threads);
        CHECK(report_to_json(parallel) == report_to_json(serial));
    }
}

TEST_CASE("run_sweep produces one F2 row per train subject over the grid") {
    auto const dataset = self_match_dataset();
    EvalConfig cfg;
    cfg.task = Task::fed;
    auto const sweep = run_sweep(dataset, cfg, 1);
    REQUIRE(sweep.subject_ids.size() == 1);
    CHECK(sweep.subject_ids[0] == "train0");
    REQUIRE(sweep.per_subject_f2.size() == 1);
    CHECK(sweep.per_subject_f2[0].size() == 101);
    CHECK(sweep.thresholds == threshold_grid());
}
