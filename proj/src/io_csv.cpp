#include "hankel/io_csv.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hankel {

namespace {
std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

void write_csv(const std::filesystem::path& path, const CsvTable& table)
{
    if (table.header.size() != table.columns.size())
        throw std::invalid_argument("write_csv: header/column mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
    for (std::size_t c = 0; c < table.header.size(); ++c)
        out << (c ? "," : "") << table.header[c];
    out << "\n";
    const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
    for (const auto& col : table.columns)
        if (col.size() != rows) throw std::invalid_argument("write_csv: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << fmt(table.columns[c][r]);
        out << "\n";
    }
}

CsvTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path.string());
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) return table;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(cell);
    table.columns.resize(table.header.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t c = 0;
        while (std::getline(ls, cell, ',') && c < table.columns.size())
            table.columns[c++].push_back(std::stod(cell));
    }
    return table;
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectrumResult& s)
{
    const std::size_t rows = std::max({s.lambda_plus.size(), s.lambda_minus.size(), s.singular.size()});
    auto at = [](const std::vector<double>& v, std::size_t i) {
        return i < v.size() ? v[i] : 0.0;
    };
    CsvTable t;
    t.header = {"n", "lambda_plus", "lambda_minus", "s_n", "residual"};
    t.columns.resize(5);
    for (std::size_t i = 0; i < rows; ++i) {
        t.columns[0].push_back(static_cast<double>(i + 1));
        t.columns[1].push_back(at(s.lambda_plus, i));
        t.columns[2].push_back(at(s.lambda_minus, i));
        t.columns[3].push_back(at(s.singular, i));
        t.columns[4].push_back(std::max(at(s.residual_plus, i), at(s.residual_minus, i)));
    }
    write_csv(path, t);
}

void write_sequence_csv(const std::filesystem::path& path, std::span<const cxd> values)
{
    CsvTable t;
    t.header = {"index", "value_re", "value_im"};
    t.columns.resize(3);
    for (std::size_t i = 0; i < values.size(); ++i) {
        t.columns[0].push_back(static_cast<double>(i));
        t.columns[1].push_back(values[i].real());
        t.columns[2].push_back(values[i].imag());
    }
    write_csv(path, t);
}

void write_sequence_csv(const std::filesystem::path& path, std::span<const double> values)
{
    std::vector<cxd> v(values.begin(), values.end());
    write_sequence_csv(path, v);
}

void write_samples_csv(const std::filesystem::path& path, std::span<const double> points,
                       std::span<const double> values)
{
    if (points.size() != values.size()) throw std::invalid_argument("write_samples_csv: size mismatch");
    CsvTable t;
    t.header = {"point", "value_re", "value_im"};
    t.columns.resize(3);
    for (std::size_t i = 0; i < points.size(); ++i) {
        t.columns[0].push_back(points[i]);
        t.columns[1].push_back(values[i]);
        t.columns[2].push_back(0.0);
    }
    write_csv(path, t);
}

void write_dense_binary(const std::filesystem::path& path, std::span<const double> a,
                        std::size_t n, bool hermitian)
{
    if (a.size() != n * n) throw std::invalid_argument("write_dense_binary: size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_dense_binary: cannot open " + path.string());
    const std::uint64_t dim = n;
    const std::uint64_t herm = hermitian ? 1 : 0;
    out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
    out.write(reinterpret_cast<const char*>(&herm), sizeof herm);
    out.write(reinterpret_cast<const char*>(a.data()), static_cast<std::streamsize>(a.size() * 8));
}

std::pair<std::vector<double>, bool> read_dense_binary(const std::filesystem::path& path,
                                                       std::size_t& n)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_dense_binary: cannot open " + path.string());
    std::uint64_t dim = 0, herm = 0;
    in.read(reinterpret_cast<char*>(&dim), sizeof dim);
    in.read(reinterpret_cast<char*>(&herm), sizeof herm);
    std::vector<double> a(dim * dim);
    in.read(reinterpret_cast<char*>(a.data()), static_cast<std::streamsize>(a.size() * 8));
    if (!in) throw std::runtime_error("read_dense_binary: truncated file");
    n = dim;
    return {std::move(a), herm != 0};
}

}  // namespace hankel
