#include "alpec/metrics.hpp"

#include "alpec/matching.hpp"
#include "alpec/parallel.hpp"
#include "alpec/postproc.hpp"
#include "alpec/schemes.hpp"

#include <algorithm>

namespace alpec {

MetricSet compute_metrics(std::int64_t tp, std::int64_t fp, std::int64_t fn) {
    if (tp < 0 || fp < 0 || fn < 0) {
        throw ValidationError("compute_metrics: negative count");
    }
    MetricSet m;
    if (tp == 0 && fp == 0 && fn == 0) {
        m.precision = m.recall = m.f1 = m.f2 = 1.0;
        return m;
    }
    double const tpd = static_cast<double>(tp);
    m.precision = tp + fp > 0 ? tpd / static_cast<double>(tp + fp) : 0.0;
    m.recall = tp + fn > 0 ? tpd / static_cast<double>(tp + fn) : 0.0;
    double const f1_den = m.precision + m.recall;
    m.f1 = f1_den > 0.0 ? 2.0 * m.precision * m.recall / f1_den : 0.0;
    double const f2_den = 4.0 * m.precision + m.recall;
    m.f2 = f2_den > 0.0 ? 5.0 * m.precision * m.recall / f2_den : 0.0;
    return m;
}

std::vector<double> ThresholdSweep::mean_f2() const {
    std::vector<double> means(thresholds.size(), 0.0);
    if (per_subject_f2.empty()) return means;
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        double sum = 0.0;
        for (auto const& row : per_subject_f2) sum += row[k];
        means[k] = sum / static_cast<double>(per_subject_f2.size());
    }
    return means;
}

std::size_t argmax_smallest(std::span<double const> values) {
    if (values.empty()) throw ValidationError("argmax_smallest: empty input");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return best;
}

ThresholdChoice select_threshold(ThresholdSweep const& sweep) {
    if (sweep.per_subject_f2.empty()) {
        throw ValidationError("select_threshold: empty training sweep");
    }
    for (auto const& row : sweep.per_subject_f2) {
        if (row.size() != sweep.thresholds.size()) {
            throw ValidationError("select_threshold: F2 row length does not match the grid");
        }
    }
    auto const means = sweep.mean_f2();
    std::size_t const k = argmax_smallest(means);
    return {static_cast<int>(k), sweep.thresholds[k]};
}

namespace {

// Per-subject state reused across the 101 thresholds of the sweep.
struct Prepared {
    SubjectRecord const* rec = nullptr;
    std::vector<double> proc;            // preprocessed scores
    std::vector<Interval> targets;
    std::vector<Interval> targets_ext;   // alpec
    std::vector<std::uint8_t> gt_raster; // pe, we
    std::vector<std::uint8_t> gt_windows; // we
};

MatchConfig match_config_for(EvalConfig const& cfg, ScoreSeries const& scores) {
    MatchConfig mc;
    mc.buffer_before_s = cfg.buffer_before_s;
    mc.buffer_after_s = cfg.buffer_after_s;
    mc.max_duration_s = cfg.max_duration_s;
    mc.duration_unbounded = cfg.duration_unbounded;
    mc.sampling_rate_hz = scores.sampling_rate_hz;
    mc.n_samples = scores.n_samples;
    return mc;
}

Prepared prepare_subject(SubjectRecord const& subject, EvalConfig const& cfg) {
    Prepared p;
    p.rec = &subject;
    p.proc = preprocess_scores(subject.scores, cfg);
    p.targets = build_targets(subject.events, cfg.task, cfg.iod_length_s, cfg.iod_alignment,
                              subject.scores.sampling_rate_hz, subject.scores.n_samples);
    switch (cfg.scheme) {
        case Scheme::alpec:
            p.targets_ext = extend_ground_truth(p.targets, match_config_for(cfg, subject.scores));
            break;
        case Scheme::pe:
            p.gt_raster = rasterize(p.targets, subject.scores.n_samples);
            break;
        case Scheme::we:
            p.gt_raster = rasterize(p.targets, subject.scores.n_samples);
            p.gt_windows = window_labels_presence(p.gt_raster, cfg.window_s,
                                                  subject.scores.sampling_rate_hz);
            break;
    }
    return p;
}

MatchResult counts_at(Prepared const& p, std::optional<double> t, EvalConfig const& cfg) {
    ScoreSeries const& scores = p.rec->scores;
    MatchResult result;
    switch (cfg.scheme) {
        case Scheme::alpec: {
            auto const pred = predicted_intervals(scores, p.proc, t, cfg);
            return match_and_count(p.targets_ext, pred, match_config_for(cfg, scores));
        }
        case Scheme::pe: {
            auto const pred = binary_predictions(scores, p.proc, t, cfg);
            static_cast<ConfusionCounts&>(result) = evaluate_pointwise(p.gt_raster, pred);
            return result;
        }
        case Scheme::we: {
            std::vector<std::uint8_t> pred_windows;
            if (scores.resolution == Resolution::windowed) {
                pred_windows = window_label_predictions(p.proc, t);
            } else {
                auto const pred = binary_predictions(scores, p.proc, t, cfg);
                pred_windows = window_labels_presence(pred, cfg.window_s,
                                                      scores.sampling_rate_hz);
            }
            static_cast<ConfusionCounts&>(result) =
                    evaluate_pointwise(p.gt_windows, pred_windows);
            return result;
        }
    }
    return result;
}

bool binary_window_label_input(std::span<SubjectRecord const> dataset) {
    return !dataset.empty() &&
           std::all_of(dataset.begin(), dataset.end(), [](SubjectRecord const& s) {
               return s.scores.resolution == Resolution::windowed && s.scores.is_binary();
           });
}

ThresholdSweep sweep_prepared(std::vector<Prepared> const& train, EvalConfig const& cfg,
                              int threads) {
    auto const& grid = threshold_grid();
    ThresholdSweep sweep;
    sweep.thresholds = grid;
    sweep.subject_ids.reserve(train.size());
    for (auto const& p : train) sweep.subject_ids.push_back(p.rec->subject_id);
    sweep.per_subject_f2.assign(train.size(), std::vector<double>(grid.size(), 0.0));

    std::int64_t const jobs = static_cast<std::int64_t>(train.size() * grid.size());
    parallel_for(jobs, threads, [&](std::int64_t j) {
        std::size_t const s = static_cast<std::size_t>(j) / grid.size();
        std::size_t const k = static_cast<std::size_t>(j) % grid.size();
        auto const counts = counts_at(train[s], grid[k], cfg);
        sweep.per_subject_f2[s][k] = compute_metrics(counts).f2;
    });
    return sweep;
}

std::vector<Prepared> prepare_fold(std::span<SubjectRecord const> dataset, Fold fold,
                                   EvalConfig const& cfg, int threads) {
    std::vector<SubjectRecord const*> members;
    for (auto const& s : dataset) {
        if (s.fold == fold) members.push_back(&s);
    }
    std::vector<Prepared> prepared(members.size());
    parallel_for(static_cast<std::int64_t>(members.size()), threads, [&](std::int64_t i) {
        prepared[static_cast<std::size_t>(i)] =
                prepare_subject(*members[static_cast<std::size_t>(i)], cfg);
    });
    return prepared;
}

MetricSet aggregate_of(std::vector<SubjectResult> const& results) {
    MetricSet agg;
    for (auto const& r : results) {
        agg.precision += r.metrics.precision;
        agg.recall += r.metrics.recall;
        agg.f1 += r.metrics.f1;
        agg.f2 += r.metrics.f2;
    }
    double const n = static_cast<double>(results.size());
    if (n > 0) {
        agg.precision /= n;
        agg.recall /= n;
        agg.f1 /= n;
        agg.f2 /= n;
    }
    return agg;
}

} // namespace

void validate_report(Report const& report) {
    MetricSet const agg = aggregate_of(report.per_subject);
    if (agg.precision != report.aggregate.precision || agg.recall != report.aggregate.recall ||
        agg.f1 != report.aggregate.f1 || agg.f2 != report.aggregate.f2) {
        throw ValidationError("report aggregate does not match per-subject means");
    }
}

MatchResult count_subject(SubjectRecord const& subject, std::optional<double> t,
                          EvalConfig const& cfg) {
    return counts_at(prepare_subject(subject, cfg), t, cfg);
}

ThresholdSweep run_sweep(std::span<SubjectRecord const> dataset, EvalConfig const& cfg,
                         int threads) {
    if (binary_window_label_input(dataset)) {
        throw ValidationError("run_sweep: input is binary window labels; no threshold to select");
    }
    int const nt = resolve_threads(threads);
    auto const train = prepare_fold(dataset, Fold::train, cfg, nt);
    if (train.empty()) throw ValidationError("run_sweep: empty train fold");
    return sweep_prepared(train, cfg, nt);
}

Report evaluate(std::span<SubjectRecord const> dataset, EvalConfig const& cfg, int threads) {
    int const nt = resolve_threads(threads);
    Report report;
    report.config = cfg;

    std::optional<double> t;
    if (!binary_window_label_input(dataset)) {
        auto const train = prepare_fold(dataset, Fold::train, cfg, nt);
        if (train.empty()) {
            throw ValidationError("evaluate: probability-score input requires a non-empty train fold");
        }
        report.t_opt = select_threshold(sweep_prepared(train, cfg, nt));
        t = report.t_opt->value;
    }

    auto const val = prepare_fold(dataset, Fold::validation, cfg, nt);
    if (val.empty()) throw ValidationError("evaluate: empty validation fold");

    report.per_subject.resize(val.size());
    parallel_for(static_cast<std::int64_t>(val.size()), nt, [&](std::int64_t i) {
        auto const& p = val[static_cast<std::size_t>(i)];
        SubjectResult r;
        r.subject_id = p.rec->subject_id;
        r.counts = counts_at(p, t, cfg);
        r.metrics = compute_metrics(r.counts);
        report.per_subject[static_cast<std::size_t>(i)] = std::move(r);
    });
    report.aggregate = aggregate_of(report.per_subject);
    return report;
}

namespace reference {

Report evaluate(std::span<SubjectRecord const> dataset, EvalConfig const& cfg) {
    Report report;
    report.config = cfg;

    std::optional<double> t;
    if (!binary_window_label_input(dataset)) {
        auto const& grid = threshold_grid();
        ThresholdSweep sweep;
        sweep.thresholds = grid;
        for (auto const& subject : dataset) {
            if (subject.fold != Fold::train) continue;
            sweep.subject_ids.push_back(subject.subject_id);
            std::vector<double> row(grid.size(), 0.0);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                row[k] = compute_metrics(count_subject(subject, grid[k], cfg)).f2;
            }
            sweep.per_subject_f2.push_back(std::move(row));
        }
        if (sweep.per_subject_f2.empty()) {
            throw ValidationError("evaluate: probability-score input requires a non-empty train fold");
        }
        report.t_opt = select_threshold(sweep);
        t = report.t_opt->value;
    }

    for (auto const& subject : dataset) {
        if (subject.fold != Fold::validation) continue;
        SubjectResult r;
        r.subject_id = subject.subject_id;
        r.counts = count_subject(subject, t, cfg);
        r.metrics = compute_metrics(r.counts);
        report.per_subject.push_back(std::move(r));
    }
    if (report.per_subject.empty()) throw ValidationError("evaluate: empty validation fold");

    MetricSet agg;
    for (auto const& r : report.per_subject) {
        agg.precision += r.metrics.precision;
        agg.recall += r.metrics.recall;
        agg.f1 += r.metrics.f1;
        agg.f2 += r.metrics.f2;
    }
    double const n = static_cast<double>(report.per_subject.size());
    agg.precision /= n;
    agg.recall /= n;
    agg.f1 /= n;
    agg.f2 /= n;
    report.aggregate = agg;
    return report;
}

} // namespace reference

} // namespace alpec
