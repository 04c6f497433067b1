#include "levex/csv.hpp"

#include <cstdio>
#include <fstream>

#include "levex/common.hpp"

namespace levex {

void Csv::meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void Csv::meta(const std::string& key, double value) { meta_.emplace_back(key, format(value)); }

std::string Csv::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Csv::row(const std::vector<double>& values) {
    std::string line;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += format(values[i]);
    }
    rows_.push_back(std::move(line));
}

void Csv::row_mixed(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    rows_.push_back(std::move(line));
}

std::string Csv::str() const {
    std::string out;
    for (const auto& [k, v] : meta_) out += "# " + k + "=" + v + "\n";
    for (size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto& r : rows_) {
        out += r;
        out += '\n';
    }
    return out;
}

void Csv::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("csv.write", "cannot open " + path);
    f << str();
}

}  // namespace levex
