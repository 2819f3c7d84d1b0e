// Times the OpenMP evaluation path against the serial reference on a
// synthetic dataset and checks that both produce identical reports.

#include "alpec/metrics.hpp"
#include "alpec/parallel.hpp"
#include "alpec/report_io.hpp"
#include "alpec/synth.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace {

double run_ms(std::vector<alpec::SubjectRecord> const& dataset, alpec::EvalConfig const& cfg,
              int threads, alpec::Report& out) {
    auto const t0 = std::chrono::steady_clock::now();
    out = threads == 0 ? alpec::reference::evaluate(dataset, cfg)
                       : alpec::evaluate(dataset, cfg, threads);
    auto const t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    double f = 64.0;
    int subjects = 6;
    if (argc > 1) f = std::atof(argv[1]);
    if (argc > 2) subjects = std::atoi(argv[2]);

    alpec::SynthParams params;
    params.n_subjects = subjects;
    params.night_length_s = 3600.0;
    params.sampling_rate_hz = f;
    params.arousals_min = params.arousals_max = 40;
    params.min_onset_gap_s = 30.0;
    params.seed = 99;

    alpec::EvalConfig cfg;
    cfg.sampling_rate_hz = f;

    alpec::Predictor predictor;
    predictor.kind = alpec::PredictorKind::jittered_oracle;
    predictor.jitter_s = 6.0;
    predictor.miss_rate = 0.1;
    predictor.extra_rate = 0.5;

    auto const dataset = alpec::generate_dataset(params, predictor, cfg);
    std::printf("dataset: %d subjects, %.0f Hz, %.0f s nights, scheme=%s\n", subjects, f,
                params.night_length_s, to_string(cfg.scheme).c_str());

    alpec::Report ref;
    double const serial_ms = run_ms(dataset, cfg, 0, ref);
    std::printf("%-28s %10.1f ms\n", "reference (serial)", serial_ms);

    int const max_threads = alpec::resolve_threads(0);
    for (int threads = 1; threads <= max_threads; threads *= 2) {
        alpec::Report report;
        double const ms = run_ms(dataset, cfg, threads, report);
        bool const identical = alpec::report_to_json(report) == alpec::report_to_json(ref);
        std::printf("parallel, %2d thread(s)        %10.1f ms   speedup %5.2fx   %s\n", threads,
                    ms, serial_ms / ms, identical ? "identical" : "MISMATCH");
        if (!identical) return 1;
    }
    return 0;
}
