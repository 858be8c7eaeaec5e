#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "maxdist/geometry.hpp"

namespace maxdist {

enum class PointFormat { Csv, Bin };

std::optional<PointFormat> parse_point_format(std::string_view text) noexcept;

/// ".bin" selects Bin, anything else Csv.
PointFormat format_from_path(const std::filesystem::path& path);

// Binary layout: "MXD2", u64 LE count, then count x (f64 LE x, f64 LE y).
inline constexpr std::string_view kBinMagic = "MXD2";

/// CSV: one "x,y" per line, optional "x,y" header, LF or CRLF. Throws
/// ParseError (with line number or byte offset), NonFiniteInput, BadMagic,
/// IoError.
PointSet parse_csv(std::istream& in);
PointSet parse_bin(std::istream& in);
void write_csv(std::ostream& out, PointView points);
void write_bin(std::ostream& out, PointView points);

PointSet read_points(const std::filesystem::path& path, PointFormat format);
void write_points(PointView points, const std::filesystem::path& path, PointFormat format);

}  // namespace maxdist
