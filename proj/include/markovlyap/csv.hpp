#pragma once

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace markovlyap {

// Minimal RFC-4180-style CSV writer: header row, comma separator, '.' decimal
// point, UTF-8, '\n' line ends. Numbers are rendered with %.17g so that a
// given run is byte-reproducible.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
        write_row_strings(header);
    }

    static std::string format(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    CsvWriter& field(const std::string& s) {
        cells_.push_back(quote(s));
        return *this;
    }
    CsvWriter& field(double v) {
        cells_.push_back(format(v));
        return *this;
    }
    CsvWriter& field(long long v) {
        cells_.push_back(std::to_string(v));
        return *this;
    }
    CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
    CsvWriter& field(std::size_t v) {
        cells_.push_back(std::to_string(v));
        return *this;
    }
    CsvWriter& field(bool v) {
        cells_.push_back(v ? "true" : "false");
        return *this;
    }

    void end_row() {
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells_[i];
        }
        out_ << '\n';
        cells_.clear();
    }

private:
    static std::string quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        q += '"';
        return q;
    }

    void write_row_strings(const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out_ << ',';
            out_ << quote(row[i]);
        }
        out_ << '\n';
    }

    std::ofstream out_;
    std::vector<std::string> cells_;
};

}  // namespace markovlyap
