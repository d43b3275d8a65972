// Rank-agreement study: SearchRank versus PageRank over a config grid.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>

#include "cli_common.hpp"
#include "qsr/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Kendall rank-agreement study"};

    std::string config_path, out_dir;
    int jobs = 0;

    app.add_option("--config", config_path, "Study config JSON (sweep schema)")->required();
    app.add_option("--out", out_dir, "Output directory")->required();
    app.add_option("--jobs", jobs, "Concurrent cells (overrides the config)");

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        namespace fs = std::filesystem;
        qsr::SweepConfig cfg = qsr::SweepConfig::from_json_file(config_path);
        if (jobs > 0) cfg.jobs = jobs;
        const auto records = qsr::run_kendall_study(cfg);

        fs::create_directories(out_dir);
        qsr::write_kendall_csv(records, (fs::path(out_dir) / "kendall.csv").string());

        const auto summary = qsr::summarize_kendall(records);
        qsr::CsvTable table;
        table.header = {"M", "algorithm", "reference", "mean_tau", "std_tau", "count", "undefined"};
        for (const auto& row : summary)
            table.rows.push_back({std::to_string(row.marked_count), to_string(row.algorithm),
                                  row.reference, qsr::format_double(row.mean_tau),
                                  qsr::format_double(row.std_tau), std::to_string(row.count),
                                  std::to_string(row.undefined_count)});
        qsr::write_csv((fs::path(out_dir) / "kendall_summary.csv").string(), table);

        nlohmann::json j;
        j["config"] = nlohmann::json::parse(cfg.to_json());
        j["summary"] = nlohmann::json::array();
        for (const auto& row : summary)
            j["summary"].push_back({{"M", row.marked_count},
                                    {"algorithm", to_string(row.algorithm)},
                                    {"reference", row.reference},
                                    {"mean_tau", row.mean_tau},
                                    {"std_tau", row.std_tau},
                                    {"count", row.count},
                                    {"undefined", row.undefined_count}});
        qsr::write_text_file((fs::path(out_dir) / "summary.json").string(), j.dump(2) + "\n");
        std::cout << records.size() << " records -> " << out_dir << '\n';
    });
}
