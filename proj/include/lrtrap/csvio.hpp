#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrtrap {

// Deterministic float formatting: 17 significant digits, C locale, LF rows.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    }

    void header(const std::vector<std::string>& cols) { write_cells(cols); }

    // nullopt cells are emitted empty (masked values)
    void row(const std::vector<std::optional<double>>& cells) {
        std::vector<std::string> s;
        s.reserve(cells.size());
        for (const auto& c : cells) s.push_back(c ? format_g17(*c) : std::string());
        write_cells(s);
    }

    void row_raw(const std::vector<std::string>& cells) { write_cells(cells); }

private:
    void write_cells(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

}  // namespace lrtrap
