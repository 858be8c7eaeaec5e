#include "maxdist/point_io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "maxdist/error.hpp"

namespace maxdist {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteInput, "line " + std::to_string(line_no) + ": non-finite coordinate");
  }
  return value;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (std::size_t k = 0; k < 8; ++k) bytes[k] = static_cast<char>((v >> (8 * k)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in, std::size_t offset) {
  std::array<unsigned char, 8> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw Error(ErrorCode::ParseError, "truncated file at byte offset " + std::to_string(offset));
  }
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(bytes[k]) << (8 * k);
  return v;
}

}  // namespace

std::optional<PointFormat> parse_point_format(std::string_view text) noexcept {
  if (text == "csv") return PointFormat::Csv;
  if (text == "bin") return PointFormat::Bin;
  return std::nullopt;
}

PointFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".bin" ? PointFormat::Bin : PointFormat::Csv;
}

PointSet parse_csv(std::istream& in) {
  PointSet points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (line_no == 1 && text == "x,y") continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    const double x = parse_field(text.substr(0, comma), line_no);
    const double y = parse_field(text.substr(comma + 1), line_no);
    points.push_back({x, y});
  }
  return points;
}

PointSet parse_bin(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || std::string_view(magic.data(), magic.size()) != kBinMagic) {
    throw Error(ErrorCode::BadMagic, "expected leading bytes 'MXD2'");
  }
  const std::uint64_t count = get_u64(in, 4);
  PointSet points;
  std::size_t offset = 12;
  for (std::uint64_t k = 0; k < count; ++k) {
    const double x = std::bit_cast<double>(get_u64(in, offset));
    const double y = std::bit_cast<double>(get_u64(in, offset + 8));
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorCode::NonFiniteInput, "point " + std::to_string(k) + " at byte offset " +
                                                 std::to_string(offset) + " has a non-finite coordinate");
    }
    points.push_back({x, y});
    offset += 16;
  }
  return points;
}

void write_csv(std::ostream& out, PointView points) {
  std::array<char, 64> buf;
  for (const Point2& p : points) {
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), p.x);
    *res.ptr++ = ',';
    res = std::to_chars(res.ptr, buf.data() + buf.size(), p.y);
    *res.ptr++ = '\n';
    out.write(buf.data(), res.ptr - buf.data());
  }
}

void write_bin(std::ostream& out, PointView points) {
  out.write(kBinMagic.data(), kBinMagic.size());
  put_u64(out, points.size());
  for (const Point2& p : points) {
    put_u64(out, std::bit_cast<std::uint64_t>(p.x));
    put_u64(out, std::bit_cast<std::uint64_t>(p.y));
  }
}

PointSet read_points(const std::filesystem::path& path, PointFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return format == PointFormat::Bin ? parse_bin(in) : parse_csv(in);
}

void write_points(PointView points, const std::filesystem::path& path, PointFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  if (format == PointFormat::Bin) {
    write_bin(out, points);
  } else {
    write_csv(out, points);
  }
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace maxdist
