#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hankel/eigensolve.hpp"

namespace hankel {

/// One value table: named columns of equal length, written with %.17g so
/// artifacts round-trip bit-exactly.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

/// Columns: n, lambda_plus, lambda_minus, s_n, residual (absent entries 0).
void write_spectrum_csv(const std::filesystem::path& path, const SpectrumResult& spectrum);

/// Columns: index, value_re, value_im.
void write_sequence_csv(const std::filesystem::path& path, std::span<const cxd> values);
void write_sequence_csv(const std::filesystem::path& path, std::span<const double> values);

/// Columns: point, value_re, value_im.
void write_samples_csv(const std::filesystem::path& path, std::span<const double> points,
                       std::span<const double> values);

/// Dense row-major binary: uint64 dimension, uint64 hermitian flag, then
/// 8-byte little-endian doubles.
void write_dense_binary(const std::filesystem::path& path, std::span<const double> a,
                        std::size_t n, bool hermitian);
std::pair<std::vector<double>, bool> read_dense_binary(const std::filesystem::path& path,
                                                       std::size_t& n);

}  // namespace hankel
