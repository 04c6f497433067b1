#ifndef LEVEX_CSV_HPP
#define LEVEX_CSV_HPP

#include <string>
#include <vector>

namespace levex {

/// CSV table with a commented provenance header (# key=value).  Cells are
/// formatted on append with a fixed format so identical inputs produce
/// byte-identical files.
class Csv {
public:
    explicit Csv(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

    static std::string format(double v);

    std::string str() const;
    void write(const std::string& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> rows_;
};

}  // namespace levex

#endif
