#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "reuleaux/geom.hpp"

namespace reuleaux {

enum class PointFormat { Text, Json };

/// Parses either format; JSON is recognized by a leading '{'.
///
/// Text: one `x y z` triple per line, '#' starts a comment, blank lines ignored.
/// JSON: `{"points": [[x, y, z], ...]}`.
/// Decimal-to-binary conversion is correctly rounded in both cases.
std::vector<Vec3> parse_points(std::string_view content);
std::vector<Vec3> read_points(const std::filesystem::path& path);

/// Writes coordinates with 17 significant digits so they read back bit-identical.
void write_points(std::ostream& os, const std::vector<Vec3>& points, PointFormat format,
                  std::string_view comment = {});

/// Parses `{"smooth": [[i, j], ...]}` with 1-based labels; returns 0-based endpoint pairs.
std::vector<std::array<std::size_t, 2>> parse_plan(std::string_view content);
std::vector<std::array<std::size_t, 2>> read_plan(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace reuleaux
