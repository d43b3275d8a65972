// Power-law fit over columns of a results CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_common.hpp"
#include "qsr/analysis.hpp"

namespace {

// Column values by name; "ratio" is synthesized as N/M.
double field_value(const qsr::CsvTable& table, const std::vector<std::string>& row,
                   const std::string& name) {
    if (name == "ratio") {
        const double n = qsr::parse_double(row[table.column("N")]);
        const double m = qsr::parse_double(row[table.column("M")]);
        return n / m;
    }
    return qsr::parse_double(row[table.column(name)]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Log-log least-squares power-law fit"};

    std::string input, x_name = "ratio", y_name = "p_star";
    double cutoff = 0.0;
    std::string algorithm_filter;

    app.add_option("--input", input, "Input CSV path")->required();
    app.add_option("--x", x_name, "X column name, or 'ratio' for N/M");
    app.add_option("--y", y_name, "Y column name");
    app.add_option("--cutoff", cutoff, "Minimum x admitted to the fit");
    app.add_option("--algorithm", algorithm_filter, "Keep only rows of this algorithm");

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        const qsr::CsvTable table = qsr::read_csv(input);
        std::vector<std::pair<double, double>> points;
        for (const auto& row : table.rows) {
            if (!algorithm_filter.empty() && row[table.column("algorithm")] != algorithm_filter) continue;
            points.emplace_back(field_value(table, row, x_name), field_value(table, row, y_name));
        }
        const qsr::FitResult fit = qsr::fit_power_law(points, cutoff);
        const nlohmann::json out{{"A", fit.prefactor},
                                 {"n", fit.exponent},
                                 {"stderr_A", fit.stderr_prefactor},
                                 {"stderr_n", fit.stderr_exponent},
                                 {"npoints", fit.npoints}};
        std::cout << out.dump(2) << '\n';
    });
}
