#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mcmd::bench {

// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;   // -1 when absent
    double as_double(std::size_t row, int col) const;
};

// UTF-8, comma-separated, '.' decimal, '\n' newlines, header row first.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Throws on missing file, empty file, or rows whose column count differs
// from the header.
CsvTable read_csv(const std::filesystem::path& path);

} // namespace mcmd::bench
