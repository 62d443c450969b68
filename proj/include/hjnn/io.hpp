#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hjnn/slice.hpp"

namespace hjnn {

/// CSV for the rows at time index `k` of a slice table:
/// header `x<a>[,x<b>],t,value,argmin,gap` (1-based axes), 17 significant
/// digits, 1-based argmin, `inf` for an unbounded gap.
std::string slice_csv(const SliceSpec& spec, std::span<const SliceRow> rows, std::size_t k);

/// Binary 8-bit grayscale pixmap (P5) of the values at time index `k`: one
/// byte per grid point in table order, width = steps of the last free axis,
/// min -> 0 and max -> 255 (all 0 for a constant image).
std::vector<std::uint8_t> slice_pgm(const SliceSpec& spec, std::span<const SliceRow> rows, std::size_t k);

/// `<prefix>_t<t>` with t in shortest round-trip form.
std::string slice_file_stem(const std::string& prefix, double t);

/// Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hjnn
