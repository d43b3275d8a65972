#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsr {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Strict parsers; the whole token must be consumed.
double parse_double(const std::string& s);
long long parse_int(const std::string& s);
std::uint64_t parse_u64(const std::string& s);

std::vector<std::string> split(const std::string& s, char sep);

// Minimal CSV table: one header row, comma-separated, no quoting (none of the
// emitted values ever contain commas).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column; throws std::invalid_argument when absent.
    std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);

// Writes `text` to `path` with LF newlines, throwing on I/O failure.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace qsr
