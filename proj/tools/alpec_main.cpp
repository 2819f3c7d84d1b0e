#include "alpec/ablation.hpp"
#include "alpec/dataset_io.hpp"
#include "alpec/metrics.hpp"
#include "alpec/parallel.hpp"
#include "alpec/report_io.hpp"
#include "alpec/synth.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

alpec::EvalConfig load_config_or_default(std::string const& path) {
    if (path.empty()) return {};
    return alpec::load_config(path);
}

void write_text(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw alpec::ValidationError("cannot write " + path);
    out << text;
    if (!out) throw alpec::ValidationError("failed while writing " + path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Event-detection evaluation toolkit: interval-level event counting "
                 "with pointwise and window-based baselines"};
    app.require_subcommand(1);

    std::string manifest, config_path, out_path, out_dir;
    std::string scheme_str, task_str, alignment_str, format_str = "json";

    auto* evaluate = app.add_subcommand("evaluate", "Evaluate a dataset and write a report");
    evaluate->add_option("--manifest", manifest, "Dataset manifest path")->required();
    evaluate->add_option("--config", config_path, "Config file (key=value lines)")->required();
    evaluate->add_option("--scheme", scheme_str, "Counting scheme: alpec|pe|we");
    evaluate->add_option("--task", task_str, "Target construction: fed|iod|pod");
    evaluate->add_option("--iod-alignment", alignment_str, "IOD interval placement: centered|leading");
    evaluate->add_option("--out", out_path, "Report output path")->required();
    evaluate->add_option("--format", format_str, "Report format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));

    auto* sweep = app.add_subcommand("sweep", "Per-threshold train-fold mean F2 table");
    sweep->add_option("--manifest", manifest, "Dataset manifest path")->required();
    sweep->add_option("--config", config_path, "Config file (key=value lines)")->required();
    sweep->add_option("--out", out_path, "Sweep table output path")->required();

    std::string ablate_param;
    std::string ablate_values;
    auto* ablate = app.add_subcommand("ablate", "Re-evaluate over one hyperparameter");
    ablate->add_option("--manifest", manifest, "Dataset manifest path")->required();
    ablate->add_option("--config", config_path, "Config file (key=value lines)")->required();
    ablate->add_option("--param", ablate_param, "Parameter: w|l|d|delta|b")->required();
    ablate->add_option("--values", ablate_values, "Comma-separated values")->required();
    ablate->add_option("--out", out_path, "Ablation table output path")->required();

    std::int64_t synth_subjects = 20;
    double synth_night_s = 28800.0, synth_f = 1.0, synth_gap_s = 13.0;
    std::string synth_arousals = "167";
    std::string predictor_str = "constant0";
    double jitter_s = 0.0, miss_rate = 0.0, extra_rate = 0.0;
    std::uint64_t synth_seed = 0;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth->add_option("--subjects", synth_subjects, "Number of subjects")->required();
    synth->add_option("--night-s", synth_night_s, "Recording length in seconds");
    synth->add_option("--arousals", synth_arousals, "Events per subject: N or MIN:MAX");
    synth->add_option("--predictor", predictor_str,
                      "constant0|constant1|random_uniform|random_stratified|jittered_oracle")
            ->required();
    synth->add_option("--seed", synth_seed, "Base seed")->required();
    synth->add_option("--out-dir", out_dir, "Output directory")->required();
    synth->add_option("--f", synth_f, "Sampling rate in Hz");
    synth->add_option("--min-gap-s", synth_gap_s, "Minimum onset gap in seconds");
    synth->add_option("--jitter-s", jitter_s, "jittered_oracle: max onset shift");
    synth->add_option("--miss-rate", miss_rate, "jittered_oracle: event drop probability");
    synth->add_option("--extra-rate", extra_rate, "jittered_oracle: spurious interval rate");
    synth->add_option("--config", config_path, "Config used for target windows/tasks");

    std::string report_in;
    auto* report = app.add_subcommand("report", "Re-serialize a JSON report");
    report->add_option("--in", report_in, "JSON report path")->required();
    report->add_option("--format", format_str, "Output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", out_path, "Output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        int const threads = alpec::resolve_threads(0);

        if (*evaluate) {
            auto cfg = load_config_or_default(config_path);
            if (!scheme_str.empty()) cfg.scheme = alpec::scheme_from_string(scheme_str);
            if (!task_str.empty()) cfg.task = alpec::task_from_string(task_str);
            if (!alignment_str.empty()) {
                cfg.iod_alignment = alpec::iod_alignment_from_string(alignment_str);
            }
            auto const dataset = alpec::load_dataset(manifest, cfg, threads);
            auto const result = alpec::evaluate(dataset, cfg, threads);
            alpec::write_report(result, alpec::report_format_from_string(format_str), out_path);
        } else if (*sweep) {
            auto const cfg = load_config_or_default(config_path);
            auto const dataset = alpec::load_dataset(manifest, cfg, threads);
            auto const result = alpec::run_sweep(dataset, cfg, threads);
            auto const choice = alpec::select_threshold(result);
            auto const means = result.mean_f2();
            std::string table = "# threshold sweep over the train fold\n";
            {
                char line[128];
                std::snprintf(line, sizeof(line), "# t_opt=%.6f index=%d\n", choice.value,
                              choice.index);
                table += line;
            }
            table += "threshold,mean_train_f2\n";
            for (std::size_t k = 0; k < result.thresholds.size(); ++k) {
                char line[128];
                std::snprintf(line, sizeof(line), "%.6f,%.6f\n", result.thresholds[k], means[k]);
                table += line;
            }
            write_text(out_path, table);
        } else if (*ablate) {
            auto const cfg = load_config_or_default(config_path);
            auto const dataset = alpec::load_dataset(manifest, cfg, threads);
            std::vector<std::string> values;
            std::string token;
            std::istringstream ss(ablate_values);
            while (std::getline(ss, token, ',')) {
                auto const b = token.find_first_not_of(" \t");
                if (b == std::string::npos) continue;
                auto const e = token.find_last_not_of(" \t");
                values.push_back(token.substr(b, e - b + 1));
            }
            auto const rows = alpec::run_ablation(dataset, cfg, ablate_param, values, threads);
            write_text(out_path, alpec::ablation_to_csv(ablate_param, rows));
        } else if (*synth) {
            auto const cfg = load_config_or_default(config_path);
            alpec::SynthParams params;
            params.n_subjects = synth_subjects;
            params.night_length_s = synth_night_s;
            params.sampling_rate_hz = synth_f;
            params.min_onset_gap_s = synth_gap_s;
            params.seed = synth_seed;
            auto const colon = synth_arousals.find(':');
            if (colon == std::string::npos) {
                params.arousals_min = params.arousals_max = std::stoll(synth_arousals);
            } else {
                params.arousals_min = std::stoll(synth_arousals.substr(0, colon));
                params.arousals_max = std::stoll(synth_arousals.substr(colon + 1));
            }
            alpec::Predictor predictor;
            predictor.kind = alpec::predictor_kind_from_string(predictor_str);
            predictor.jitter_s = jitter_s;
            predictor.miss_rate = miss_rate;
            predictor.extra_rate = extra_rate;
            auto const dataset = alpec::generate_dataset(params, predictor, cfg);
            auto const manifest_path = alpec::write_dataset(out_dir, dataset);
            std::cout << manifest_path.string() << "\n";
        } else if (*report) {
            auto const loaded = alpec::read_report(report_in);
            alpec::write_report(loaded, alpec::report_format_from_string(format_str), out_path);
        }
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
