#include "hjnn/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "hjnn/config.hpp"

namespace hjnn {
namespace {

void append_real(std::string& out, double v) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string slice_csv(const SliceSpec& spec, std::span<const SliceRow> rows, std::size_t k) {
  const std::size_t nt = spec.times.size();
  std::string out;
  for (std::size_t axis : spec.free_axes) out += "x" + std::to_string(axis + 1) + ",";
  out += "t,value,argmin,gap\n";
  for (std::size_t i = k; i < rows.size(); i += nt) {
    const auto& r = rows[i];
    for (std::size_t a = 0; a < spec.free_axes.size(); ++a) {
      append_real(out, r.coords[a]);
      out += ',';
    }
    append_real(out, r.t);
    out += ',';
    append_real(out, r.result.value);
    out += ',';
    out += std::to_string(r.result.argmin + 1);
    out += ',';
    if (r.result.gap.is_infinite()) {
      out += "inf";
    } else {
      append_real(out, r.result.gap.value());
    }
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> slice_pgm(const SliceSpec& spec, std::span<const SliceRow> rows, std::size_t k) {
  const std::size_t nt = spec.times.size();
  const std::size_t width = spec.ranges.back().steps;
  const std::size_t height = spec.grid_size() / width;

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = k; i < rows.size(); i += nt) {
    lo = std::min(lo, rows[i].result.value);
    hi = std::max(hi, rows[i].result.value);
  }

  const std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + width * height);
  for (std::size_t i = k; i < rows.size(); i += nt) {
    const double scaled = hi > lo ? 255.0 * (rows[i].result.value - lo) / (hi - lo) : 0.0;
    out.push_back(static_cast<std::uint8_t>(std::lround(std::clamp(scaled, 0.0, 255.0))));
  }
  return out;
}

std::string slice_file_stem(const std::string& prefix, double t) { return prefix + "_t" + format_real(t); }

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace hjnn
