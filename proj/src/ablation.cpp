#include "alpec/ablation.hpp"

#include <cstdio>
#include <sstream>

namespace alpec {

std::vector<AblationRow> run_ablation(std::span<SubjectRecord const> dataset,
                                      EvalConfig const& base, std::string const& parameter,
                                      std::vector<std::string> const& values, int threads) {
    if (parameter != "w" && parameter != "l" && parameter != "d" && parameter != "delta" &&
        parameter != "b") {
        throw ValidationError("run_ablation: unknown parameter '" + parameter +
                              "' (expected w|l|d|delta|b)");
    }
    if (values.empty()) throw ValidationError("run_ablation: no values given");

    std::vector<AblationRow> rows;
    rows.reserve(values.size());
    for (auto const& value : values) {
        EvalConfig cfg = base;
        apply_config_entry(cfg, parameter, value, "ablation value '" + value + "'");
        rows.push_back({value, evaluate(dataset, cfg, threads).aggregate});
    }
    return rows;
}

std::string ablation_to_csv(std::string const& parameter, std::span<AblationRow const> rows) {
    std::ostringstream out;
    out << "# ablation over " << parameter << "\n";
    out << parameter << ",mean_precision,mean_recall,mean_f2\n";
    for (auto const& row : rows) {
        char buf[3][64];
        std::snprintf(buf[0], sizeof(buf[0]), "%.6f", row.aggregate.precision);
        std::snprintf(buf[1], sizeof(buf[1]), "%.6f", row.aggregate.recall);
        std::snprintf(buf[2], sizeof(buf[2]), "%.6f", row.aggregate.f2);
        out << row.value << ',' << buf[0] << ',' << buf[1] << ',' << buf[2] << '\n';
    }
    return out.str();
}

} // namespace alpec
