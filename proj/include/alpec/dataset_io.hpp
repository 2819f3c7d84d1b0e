#pragma once

#include "alpec/config.hpp"
#include "alpec/core.hpp"

#include <filesystem>

namespace alpec {

/// One manifest row; paths are resolved relative to the manifest file.
struct ManifestEntry {
    std::string subject_id;
    Fold fold = Fold::validation;
    std::int64_t n_samples = 0;
    std::filesystem::path annotations_path;
    std::filesystem::path scores_path;
};

struct DatasetManifest {
    double sampling_rate_hz = 1.0;
    std::vector<ManifestEntry> subjects;
};

DatasetManifest load_manifest(std::filesystem::path const& path);

/// Load and validate every subject referenced by the manifest. The config
/// supplies the window size used to validate windowed score files. Every
/// failure is a ValidationError carrying file and line.
std::vector<SubjectRecord> load_dataset(std::filesystem::path const& manifest_path,
                                        EvalConfig const& cfg, int threads = 0);

/// Write subjects as manifest + per-subject annotation and score files
/// under dir (created if missing). Returns the manifest path. Score values
/// are written with round-trip precision, so load_dataset reproduces the
/// records exactly.
std::filesystem::path write_dataset(std::filesystem::path const& dir,
                                    std::span<SubjectRecord const> subjects);

} // namespace alpec
