#include "lossindex/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lossindex/errors.hpp"

namespace lossindex::csv {

std::vector<std::vector<std::string>> read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool line_start = true;
    bool comment = false;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
    };
    auto end_line = [&] {
        if (!comment && (!row.empty() || !field.empty())) {
            end_field();
            bool blank = row.size() == 1 && row[0].empty();
            if (!blank) rows.push_back(std::move(row));
        }
        row.clear();
        field.clear();
        comment = false;
        line_start = true;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (comment) {
            if (c == '\n') end_line();
            continue;
        }
        if (line_start && c == '#' && !quoted) {
            comment = true;
            continue;
        }
        line_start = false;
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_line();
        } else {
            field += c;
        }
    }
    if (quoted) throw data_error("unterminated quote in " + path.string());
    if (!field.empty() && field.back() == '\r') field.pop_back();
    end_line();
    return rows;
}

std::string escape(const std::string& field) {
    const bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    out += '\n';
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto dir = path.parent_path().empty() ? std::filesystem::path(".")
                                                : path.parent_path();
    std::filesystem::create_directories(dir);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw data_error("cannot write file: " + tmp);
        out << content;
        out.flush();
        if (!out) throw data_error("short write: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace lossindex::csv
