#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "chainhull/geometry.hpp"
#include "chainhull/melkman.hpp"
#include "chainhull/pipeline.hpp"

namespace chainhull {

/// Point file formats.
///   XyText:      one point per line, "x y" as ASCII decimal reals separated
///                by whitespace; blank lines and lines starting with '#' are
///                skipped.
///   XyBinary:    consecutive little-endian IEEE-754 float64 pairs (x, y);
///                bit-exact round trip.
///   ObjVertices: Wavefront OBJ; lines starting "v " contribute (x, y) with
///                z dropped, every other line is ignored.
enum class PointFormat { XyText, XyBinary, ObjVertices };

/// Stats file formats for write_stats.
enum class StatsFormat { Csv, Json };

/// Name <-> enum mapping used by the command line tool ("xy_text",
/// "xy_binary", "obj_vertices"; "csv", "json").
const char* point_format_name(PointFormat format);
PointFormat parse_point_format(const std::string& name);
StatsFormat parse_stats_format(const std::string& name);

/// Reads points from a file. Throws IoError when the file cannot be opened,
/// ParseError on malformed content (with the 1-based line number for text
/// formats), and NonFiniteCoordinate when a coordinate is NaN or infinite.
std::vector<Point2> read_points(const std::filesystem::path& path, PointFormat format);

/// Writes points. XyText emits 17 significant digits, enough for an exact
/// double round trip; XyBinary is bit-exact by construction. ObjVertices is
/// a read-only format. Throws IoError on failure.
void write_points(std::span<const Point2> points, const std::filesystem::path& path,
                  PointFormat format);

/// Writes a hull as XyText, vertices in canonical ring order.
void write_hull(const Hull& hull, const std::filesystem::path& path);

/// Writes one run's stats. CSV has a header row and one data row with the
/// columns n_input,n_after_round1,n_after_spa,n_hull,t_extremes_ms,
/// t_classify_ms,t_partition_ms,t_sort_ms,t_spa_ms,t_melkman_ms,t_total_ms;
/// JSON is one object with the same keys.
void write_stats(const StageStats& stats, const std::filesystem::path& path,
                 StatsFormat format);

}  // namespace chainhull
