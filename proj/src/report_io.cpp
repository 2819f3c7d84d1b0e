#include "alpec/report_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace alpec {

using nlohmann::json;

ReportFormat report_format_from_string(std::string const& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    throw ValidationError("unknown report format '" + s + "' (expected json|csv)");
}

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

std::string report_to_json(Report const& report) {
    validate_report(report);
    json j;
    if (report.t_opt.has_value()) {
        j["t_opt"] = report.t_opt->value;
        j["t_opt_index"] = report.t_opt->index;
    } else {
        j["t_opt"] = nullptr;
        j["t_opt_index"] = nullptr;
    }
    j["aggregate"] = {{"precision", report.aggregate.precision},
                      {"recall", report.aggregate.recall},
                      {"f1", report.aggregate.f1},
                      {"f2", report.aggregate.f2}};
    json subjects = json::array();
    for (auto const& r : report.per_subject) {
        json pairs = json::array();
        for (auto const& [g, p] : r.counts.matched_pairs) pairs.push_back({g, p});
        subjects.push_back({{"id", r.subject_id},
                            {"tp", r.counts.tp},
                            {"fp", r.counts.fp},
                            {"fn", r.counts.fn},
                            {"matched_pairs", std::move(pairs)},
                            {"precision", r.metrics.precision},
                            {"recall", r.metrics.recall},
                            {"f1", r.metrics.f1},
                            {"f2", r.metrics.f2}});
    }
    j["subjects"] = std::move(subjects);
    json cfg = json::object();
    for (auto const& [key, value] : config_entries(report.config)) cfg[key] = value;
    j["config"] = std::move(cfg);
    return j.dump(2) + "\n";
}

std::string report_to_csv(Report const& report) {
    validate_report(report);
    std::ostringstream out;
    out << "# report\n";
    out << "# t_opt=" << (report.t_opt.has_value() ? fixed6(report.t_opt->value) : "none") << "\n";
    out << "#";
    for (auto const& [key, value] : config_entries(report.config)) out << ' ' << key << '=' << value;
    out << "\n";
    out << "subject_id,tp,fp,fn,precision,recall,f1,f2\n";
    double mtp = 0, mfp = 0, mfn = 0;
    for (auto const& r : report.per_subject) {
        out << r.subject_id << ',' << r.counts.tp << ',' << r.counts.fp << ',' << r.counts.fn
            << ',' << fixed6(r.metrics.precision) << ',' << fixed6(r.metrics.recall) << ','
            << fixed6(r.metrics.f1) << ',' << fixed6(r.metrics.f2) << '\n';
        mtp += static_cast<double>(r.counts.tp);
        mfp += static_cast<double>(r.counts.fp);
        mfn += static_cast<double>(r.counts.fn);
    }
    double const n = report.per_subject.empty() ? 1.0 : static_cast<double>(report.per_subject.size());
    out << "aggregate," << fixed6(mtp / n) << ',' << fixed6(mfp / n) << ',' << fixed6(mfn / n)
        << ',' << fixed6(report.aggregate.precision) << ',' << fixed6(report.aggregate.recall)
        << ',' << fixed6(report.aggregate.f1) << ',' << fixed6(report.aggregate.f2) << '\n';
    return out.str();
}

void write_report(Report const& report, ReportFormat format, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write report to " + path.string());
    out << (format == ReportFormat::json ? report_to_json(report) : report_to_csv(report));
    if (!out) throw ValidationError("failed while writing report to " + path.string());
}

Report read_report(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open report " + path.string());
    json j;
    try {
        in >> j;
    } catch (json::exception const& e) {
        throw ValidationError(path.string() + ": invalid JSON report: " + e.what());
    }
    try {
        Report report;
        if (!j.at("t_opt").is_null()) {
            report.t_opt = ThresholdChoice{j.at("t_opt_index").get<int>(),
                                           j.at("t_opt").get<double>()};
        }
        report.aggregate.precision = j.at("aggregate").at("precision").get<double>();
        report.aggregate.recall = j.at("aggregate").at("recall").get<double>();
        report.aggregate.f1 = j.at("aggregate").at("f1").get<double>();
        report.aggregate.f2 = j.at("aggregate").at("f2").get<double>();
        for (auto const& s : j.at("subjects")) {
            SubjectResult r;
            r.subject_id = s.at("id").get<std::string>();
            r.counts.tp = s.at("tp").get<std::int64_t>();
            r.counts.fp = s.at("fp").get<std::int64_t>();
            r.counts.fn = s.at("fn").get<std::int64_t>();
            for (auto const& pair : s.at("matched_pairs")) {
                r.counts.matched_pairs.emplace_back(pair.at(0).get<std::int64_t>(),
                                                    pair.at(1).get<std::int64_t>());
            }
            r.metrics.precision = s.at("precision").get<double>();
            r.metrics.recall = s.at("recall").get<double>();
            r.metrics.f1 = s.at("f1").get<double>();
            r.metrics.f2 = s.at("f2").get<double>();
            report.per_subject.push_back(std::move(r));
        }
        for (auto const& [key, value] : j.at("config").items()) {
            apply_config_entry(report.config, key, value.get<std::string>(), path.string());
        }
        validate_report(report);
        return report;
    } catch (json::exception const& e) {
        throw ValidationError(path.string() + ": malformed report: " + e.what());
    }
}

} // namespace alpec
