#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hamel/tower.hpp"

namespace hamel {

/// Parses a linear expression over m's generator names, e.g.
/// `3/2*h1 - t + 2*(h2 - h1)`. A constant term must be 0.
Vector parse_vector(const Model& m, std::string_view text);
/// As parse_vector, also accepting `inf`.
Point parse_point(const Model& m, std::string_view text);
/// As parse_vector, also accepting `-inf` and `+inf`.
Bound parse_bound(const Model& m, std::string_view text);

std::string format_vector(const Model& m, const Vector& v);
std::string format_point(const Model& m, const Point& p);
std::string format_cut(const Model& m, const Cut& c);

/// Reads the line-oriented model presentation format. Errors carry the line
/// number; engine-level rejections (bad cuts, mode violations) are reported
/// as ParseError at the offending line too.
Model parse_model(std::string_view text);
std::string format_model(const Model& m);

Model load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const Model& m);

/// True for names that cannot be used for generators or variables.
bool is_reserved_name(std::string_view name);

}  // namespace hamel
