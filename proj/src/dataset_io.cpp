#include "alpec/dataset_io.hpp"

#include "alpec/parallel.hpp"
#include "alpec/schemes.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace alpec {

namespace {

std::string loc(std::filesystem::path const& path, int line) {
    return path.string() + ":" + std::to_string(line);
}

std::string strip(std::string const& s) {
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto const e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Strips comments/whitespace; empty result means "skip this line".
std::string logical_line(std::string line) {
    auto const hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return strip(line);
}

double parse_double_at(std::string const& text, std::string const& where) {
    try {
        std::size_t pos = 0;
        double const v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (std::exception const&) {
        throw ValidationError(where + ": cannot parse number '" + text + "'");
    }
}

std::int64_t parse_int_at(std::string const& text, std::string const& where) {
    try {
        std::size_t pos = 0;
        long long const v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (std::exception const&) {
        throw ValidationError(where + ": cannot parse integer '" + text + "'");
    }
}

std::string expect_kv(std::string const& token, std::string const& key,
                      std::string const& where) {
    auto const eq = token.find('=');
    if (eq == std::string::npos || token.substr(0, eq) != key) {
        throw ValidationError(where + ": expected '" + key + "=<value>', got '" + token + "'");
    }
    return token.substr(eq + 1);
}

std::vector<EventAnnotation> load_annotations(std::filesystem::path const& path,
                                              std::int64_t n_samples, double f) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open annotations file " + path.string());
    std::vector<EventAnnotation> events;
    std::string raw;
    int lineno = 0;
    double const horizon_s = static_cast<double>(n_samples) / f;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string const line = logical_line(raw);
        if (line.empty()) continue;
        std::string const where = loc(path, lineno);
        std::istringstream ss(line);
        EventAnnotation ev;
        std::string onset, duration, extra;
        if (!(ss >> ev.label >> onset >> duration)) {
            throw ValidationError(where + ": expected 'label onset_s duration_s'");
        }
        if (ss >> extra) {
            throw ValidationError(where + ": unexpected trailing field '" + extra + "'");
        }
        ev.onset_s = parse_double_at(onset, where);
        ev.duration_s = parse_double_at(duration, where);
        if (ev.onset_s < 0.0) throw ValidationError(where + ": onset_s must be >= 0");
        if (ev.duration_s < 0.0) throw ValidationError(where + ": duration_s must be >= 0");
        if (ev.onset_s + ev.duration_s > horizon_s + 1e-9) {
            throw ValidationError(where + ": event ends at " +
                                  std::to_string(ev.onset_s + ev.duration_s) +
                                  " s, beyond the recording end at " + std::to_string(horizon_s) +
                                  " s");
        }
        events.push_back(std::move(ev));
    }
    std::stable_sort(events.begin(), events.end(),
                     [](EventAnnotation const& a, EventAnnotation const& b) {
                         return a.onset_s < b.onset_s;
                     });
    return events;
}

ScoreSeries load_scores(std::filesystem::path const& path, std::int64_t n_samples, double f,
                        EvalConfig const& cfg) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scores file " + path.string());
    std::string raw;
    int lineno = 0;

    // Header: sampling_rate_hz=<f> n=<count> resolution=<pointwise|windowed>
    std::string header;
    while (std::getline(in, raw)) {
        ++lineno;
        header = logical_line(raw);
        if (!header.empty()) break;
    }
    std::string const hwhere = loc(path, lineno);
    std::istringstream hs(header);
    std::string tok_f, tok_n, tok_res, extra;
    if (!(hs >> tok_f >> tok_n >> tok_res) || (hs >> extra)) {
        throw ValidationError(hwhere +
                              ": malformed header, expected "
                              "'sampling_rate_hz=<f> n=<count> resolution=<pointwise|windowed>'");
    }
    ScoreSeries series;
    series.sampling_rate_hz = parse_double_at(expect_kv(tok_f, "sampling_rate_hz", hwhere), hwhere);
    series.n_samples = parse_int_at(expect_kv(tok_n, "n", hwhere), hwhere);
    try {
        series.resolution = resolution_from_string(expect_kv(tok_res, "resolution", hwhere));
    } catch (ValidationError const& e) {
        throw ValidationError(hwhere + ": " + e.what());
    }
    if (series.sampling_rate_hz <= 0.0) {
        throw ValidationError(hwhere + ": sampling_rate_hz must be > 0");
    }
    if (series.sampling_rate_hz != f) {
        throw ValidationError(hwhere + ": sampling_rate_hz " +
                              std::to_string(series.sampling_rate_hz) +
                              " does not match the manifest value " + std::to_string(f));
    }
    if (series.n_samples != n_samples) {
        throw ValidationError(hwhere + ": n " + std::to_string(series.n_samples) +
                              " does not match the manifest value " + std::to_string(n_samples));
    }

    std::int64_t const expected =
            series.resolution == Resolution::pointwise
                    ? series.n_samples
                    : window_count(series.n_samples, cfg.window_s, series.sampling_rate_hz);
    series.values.reserve(static_cast<std::size_t>(expected));
    while (std::getline(in, raw)) {
        ++lineno;
        std::string const line = logical_line(raw);
        if (line.empty()) continue;
        std::string const where = loc(path, lineno);
        double const v = parse_double_at(line, where);
        if (v < 0.0 || v > 1.0) {
            throw ValidationError(where + ": score " + line + " outside [0, 1]");
        }
        series.values.push_back(v);
    }
    if (static_cast<std::int64_t>(series.values.size()) != expected) {
        throw ValidationError(path.string() + ": got " + std::to_string(series.values.size()) +
                              " values, expected " + std::to_string(expected) + " (" +
                              to_string(series.resolution) + ", n=" +
                              std::to_string(series.n_samples) + ")");
    }
    return series;
}

} // namespace

DatasetManifest load_manifest(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open manifest " + path.string());
    auto const base = path.parent_path();
    DatasetManifest manifest;
    bool have_f = false;
    std::unordered_set<std::string> seen_ids;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string const line = logical_line(raw);
        if (line.empty()) continue;
        std::string const where = loc(path, lineno);
        if (line.rfind("f=", 0) == 0) {
            manifest.sampling_rate_hz = parse_double_at(line.substr(2), where);
            if (manifest.sampling_rate_hz <= 0.0) {
                throw ValidationError(where + ": f must be > 0");
            }
            have_f = true;
            continue;
        }
        std::istringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw != "subject") {
            throw ValidationError(where + ": expected 'f=<hz>' or 'subject ...', got '" + kw + "'");
        }
        ManifestEntry entry;
        std::string fold, n_str, ann, sco, extra;
        if (!(ss >> entry.subject_id >> fold >> n_str >> ann >> sco)) {
            throw ValidationError(where +
                                  ": expected 'subject <id> <fold> <n_samples> "
                                  "<annotations_path> <scores_path>'");
        }
        if (ss >> extra) {
            throw ValidationError(where + ": unexpected trailing field '" + extra + "'");
        }
        try {
            entry.fold = fold_from_string(fold);
        } catch (ValidationError const& e) {
            throw ValidationError(where + ": " + e.what());
        }
        entry.n_samples = parse_int_at(n_str, where);
        if (entry.n_samples <= 0) throw ValidationError(where + ": n_samples must be > 0");
        if (!seen_ids.insert(entry.subject_id).second) {
            throw ValidationError(where + ": duplicate subject_id '" + entry.subject_id + "'");
        }
        entry.annotations_path = base / ann;
        entry.scores_path = base / sco;
        manifest.subjects.push_back(std::move(entry));
    }
    if (!have_f) throw ValidationError(path.string() + ": missing 'f=<hz>' line");
    return manifest;
}

std::vector<SubjectRecord> load_dataset(std::filesystem::path const& manifest_path,
                                        EvalConfig const& cfg, int threads) {
    auto const manifest = load_manifest(manifest_path);
    std::vector<SubjectRecord> subjects(manifest.subjects.size());
    parallel_for(static_cast<std::int64_t>(manifest.subjects.size()), resolve_threads(threads),
                 [&](std::int64_t i) {
                     auto const& entry = manifest.subjects[static_cast<std::size_t>(i)];
                     SubjectRecord rec;
                     rec.subject_id = entry.subject_id;
                     rec.fold = entry.fold;
                     rec.scores = load_scores(entry.scores_path, entry.n_samples,
                                              manifest.sampling_rate_hz, cfg);
                     rec.events = load_annotations(entry.annotations_path, entry.n_samples,
                                                   manifest.sampling_rate_hz);
                     subjects[static_cast<std::size_t>(i)] = std::move(rec);
                 });
    return subjects;
}

std::filesystem::path write_dataset(std::filesystem::path const& dir,
                                    std::span<SubjectRecord const> subjects) {
    if (subjects.empty()) throw ValidationError("write_dataset: no subjects");
    double const f = subjects[0].scores.sampling_rate_hz;
    for (auto const& s : subjects) {
        if (s.scores.sampling_rate_hz != f) {
            throw ValidationError("write_dataset: subjects disagree on the sampling rate");
        }
    }
    std::filesystem::create_directories(dir);

    auto const manifest_path = dir / "manifest.txt";
    std::ofstream manifest(manifest_path);
    if (!manifest) throw ValidationError("cannot write " + manifest_path.string());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", f);
    manifest << "# dataset manifest\n" << "f=" << buf << "\n";

    for (auto const& s : subjects) {
        std::string const ann_name = s.subject_id + ".events.txt";
        std::string const sco_name = s.subject_id + ".scores.txt";
        manifest << "subject " << s.subject_id << ' ' << to_string(s.fold) << ' '
                 << s.scores.n_samples << ' ' << ann_name << ' ' << sco_name << '\n';

        std::ofstream ann(dir / ann_name);
        if (!ann) throw ValidationError("cannot write " + (dir / ann_name).string());
        for (auto const& ev : s.events) {
            char onset[64], duration[64];
            std::snprintf(onset, sizeof(onset), "%.17g", ev.onset_s);
            std::snprintf(duration, sizeof(duration), "%.17g", ev.duration_s);
            ann << ev.label << ' ' << onset << ' ' << duration << '\n';
        }

        std::ofstream sco(dir / sco_name);
        if (!sco) throw ValidationError("cannot write " + (dir / sco_name).string());
        char fbuf[64];
        std::snprintf(fbuf, sizeof(fbuf), "%.17g", s.scores.sampling_rate_hz);
        sco << "sampling_rate_hz=" << fbuf << " n=" << s.scores.n_samples << " resolution="
            << to_string(s.scores.resolution) << '\n';
        for (double v : s.scores.values) {
            char vbuf[64];
            std::snprintf(vbuf, sizeof(vbuf), "%.17g", v);
            sco << vbuf << '\n';
        }
    }
    return manifest_path;
}

} // namespace alpec
