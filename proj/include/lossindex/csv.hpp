#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace lossindex::csv {

// RFC-4180 reader: quoted fields, embedded commas/quotes, CRLF tolerant.
// Lines starting with '#' (run stamps) and blank lines are skipped.
std::vector<std::vector<std::string>> read(const std::filesystem::path& path);

std::string escape(const std::string& field);

// Renders one row with RFC-4180 quoting where needed, '.' decimal point.
std::string format_row(const std::vector<std::string>& fields);

std::string format_double(double v);

// Writes content to a temp file in the target directory and renames it into
// place, so a rerun either fully replaces the file or leaves the old one.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace lossindex::csv
