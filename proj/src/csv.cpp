#include "qsr/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "qsr/errors.hpp"

namespace qsr {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

template <typename T>
T parse_with_from_chars(const std::string& s, const char* what) {
    T value{};
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw std::invalid_argument(std::string("not a valid ") + what + ": '" + s + "'");
    return value;
}

}  // namespace

double parse_double(const std::string& s) { return parse_with_from_chars<double>(s, "number"); }
long long parse_int(const std::string& s) { return parse_with_from_chars<long long>(s, "integer"); }
std::uint64_t parse_u64(const std::string& s) { return parse_with_from_chars<std::uint64_t>(s, "unsigned integer"); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::invalid_argument("no such column: '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    CsvTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (lineno == 1) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size())
                throw ParseError("expected " + std::to_string(table.header.size()) + " fields, got " +
                                     std::to_string(fields.size()),
                                 lineno);
            table.rows.push_back(std::move(fields));
        }
    }
    if (table.header.empty()) throw ParseError("missing header row", 1);
    return table;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ostringstream out;
    auto emit_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    };
    emit_row(table.header);
    for (const auto& row : table.rows) emit_row(row);
    write_text_file(path, out.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF newlines as-is
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qsr
