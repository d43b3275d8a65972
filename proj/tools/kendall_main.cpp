// Kendall rank correlation between two score files.

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_common.hpp"
#include "qsr/analysis.hpp"

namespace {

// node,score CSV into a score-by-node map.
std::vector<double> scores_for_items(const std::string& path, const std::vector<int>& items) {
    const qsr::CsvTable table = qsr::read_csv(path);
    const std::size_t node_col = table.column("node");
    const std::size_t score_col = table.column("score");
    std::map<int, double> by_node;
    for (const auto& row : table.rows)
        by_node[static_cast<int>(qsr::parse_int(row[node_col]))] = qsr::parse_double(row[score_col]);

    std::vector<double> scores;
    for (int item : items) {
        const auto it = by_node.find(item);
        if (it == by_node.end())
            throw std::invalid_argument(path + ": no score for node " + std::to_string(item));
        scores.push_back(it->second);
    }
    return scores;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kendall tau-b of two score lists"};

    std::string a_path, b_path;
    std::vector<int> items;

    app.add_option("--a", a_path, "First node,score CSV")->required();
    app.add_option("--b", b_path, "Second node,score CSV")->required();
    app.add_option("--items", items, "Item subset (comma separated); default: all nodes of --a")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        if (items.empty()) {
            const qsr::CsvTable table = qsr::read_csv(a_path);
            const std::size_t node_col = table.column("node");
            for (const auto& row : table.rows)
                items.push_back(static_cast<int>(qsr::parse_int(row[node_col])));
        }
        const qsr::KendallResult r =
            qsr::kendall_tau(scores_for_items(a_path, items), scores_for_items(b_path, items));
        const nlohmann::json out{
            {"tau", r.tau}, {"pairs", r.pairs}, {"ties_a", r.ties_a}, {"ties_b", r.ties_b}};
        std::cout << out.dump(2) << '\n';
    });
}
