#include "chainhull/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "chainhull/errors.hpp"

namespace chainhull {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses one double from the front of `s`, advancing past it. Returns false
// when the front of `s` is not a number.
bool take_double(std::string_view& s, double& out) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{}) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

void require_finite(const Point2& p, std::size_t line_number) {
  if (std::isfinite(p.x) && std::isfinite(p.y)) return;
  std::string where = line_number > 0 ? " at line " + std::to_string(line_number) : "";
  throw NonFiniteCoordinate("non-finite coordinate" + where);
}

std::vector<Point2> read_xy_text(std::istream& in) {
  std::vector<Point2> points;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view rest = line;
    Point2 p{};
    if (!take_double(rest, p.x) || !take_double(rest, p.y))
      throw ParseError(line_number, "expected two decimal coordinates");
    if (!trim(rest).empty())
      throw ParseError(line_number, "trailing characters after coordinates");
    require_finite(p, line_number);
    points.push_back(p);
  }
  return points;
}

std::vector<Point2> read_obj_vertices(std::istream& in) {
  std::vector<Point2> points;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = trim(raw);
    // Vertex lines start with the lone token "v"; everything else (normals,
    // texture coordinates, faces, comments) is ignored.
    if (line.size() < 2 || line.front() != 'v' || !is_space(line[1])) continue;
    line.remove_prefix(2);
    Point2 p{};
    double z = 0.0;
    if (!take_double(line, p.x) || !take_double(line, p.y))
      throw ParseError(line_number, "vertex line needs at least x and y");
    take_double(line, z);  // optional z, dropped
    if (!trim(line).empty())
      throw ParseError(line_number, "trailing characters after vertex");
    require_finite(p, line_number);
    points.push_back(p);
  }
  return points;
}

double decode_f64_le(const unsigned char* bytes) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | bytes[i];
  return std::bit_cast<double>(bits);
}

void encode_f64_le(double value, unsigned char* bytes) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
  for (int i = 0; i < 8; ++i) {
    bytes[i] = static_cast<unsigned char>(bits & 0xff);
    bits >>= 8;
  }
}

std::vector<Point2> read_xy_binary(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = std::move(buffer).str();
  if (bytes.size() % 16 != 0)
    throw ParseError(0, "binary payload is not a whole number of float64 pairs");
  std::vector<Point2> points(bytes.size() / 16);
  const auto* raw = reinterpret_cast<const unsigned char*>(bytes.data());
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].x = decode_f64_le(raw + 16 * i);
    points[i].y = decode_f64_le(raw + 16 * i + 8);
    require_finite(points[i], 0);
  }
  return points;
}

// 17 significant digits (trailing zeros stripped): enough for an exact
// double round trip, and a pure function of the value.
std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

void write_xy_text(std::span<const Point2> points, std::ostream& out) {
  std::string line;
  for (const Point2& p : points) {
    line = format_double(p.x);
    line += ' ';
    line += format_double(p.y);
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

void write_xy_binary(std::span<const Point2> points, std::ostream& out) {
  unsigned char record[16];
  for (const Point2& p : points) {
    encode_f64_le(p.x, record);
    encode_f64_le(p.y, record + 8);
    out.write(reinterpret_cast<const char*>(record), sizeof record);
  }
}

std::ifstream open_input(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

const char* point_format_name(PointFormat format) {
  switch (format) {
    case PointFormat::XyText: return "xy_text";
    case PointFormat::XyBinary: return "xy_binary";
    case PointFormat::ObjVertices: return "obj_vertices";
  }
  throw std::invalid_argument("point_format_name: unknown format");
}

PointFormat parse_point_format(const std::string& name) {
  if (name == "xy_text") return PointFormat::XyText;
  if (name == "xy_binary") return PointFormat::XyBinary;
  if (name == "obj_vertices") return PointFormat::ObjVertices;
  throw std::invalid_argument("parse_point_format: unknown format '" + name + "'");
}

StatsFormat parse_stats_format(const std::string& name) {
  if (name == "csv") return StatsFormat::Csv;
  if (name == "json") return StatsFormat::Json;
  throw std::invalid_argument("parse_stats_format: unknown format '" + name + "'");
}

std::vector<Point2> read_points(const std::filesystem::path& path, PointFormat format) {
  switch (format) {
    case PointFormat::XyText: {
      auto in = open_input(path, false);
      return read_xy_text(in);
    }
    case PointFormat::XyBinary: {
      auto in = open_input(path, true);
      return read_xy_binary(in);
    }
    case PointFormat::ObjVertices: {
      auto in = open_input(path, false);
      return read_obj_vertices(in);
    }
  }
  throw std::invalid_argument("read_points: unknown format");
}

void write_points(std::span<const Point2> points, const std::filesystem::path& path,
                  PointFormat format) {
  switch (format) {
    case PointFormat::XyText: {
      auto out = open_output(path, false);
      write_xy_text(points, out);
      finish_output(out, path);
      return;
    }
    case PointFormat::XyBinary: {
      auto out = open_output(path, true);
      write_xy_binary(points, out);
      finish_output(out, path);
      return;
    }
    case PointFormat::ObjVertices:
      throw std::invalid_argument("write_points: obj_vertices is a read-only format");
  }
  throw std::invalid_argument("write_points: unknown format");
}

void write_hull(const Hull& hull, const std::filesystem::path& path) {
  write_points(hull.vertices, path, PointFormat::XyText);
}

void write_stats(const StageStats& stats, const std::filesystem::path& path,
                 StatsFormat format) {
  auto out = open_output(path, false);
  if (format == StatsFormat::Csv) {
    out << "n_input,n_after_round1,n_after_spa,n_hull,t_extremes_ms,t_classify_ms,"
           "t_partition_ms,t_sort_ms,t_spa_ms,t_melkman_ms,t_total_ms\n";
    out << stats.n_input << ',' << stats.n_after_round1 << ',' << stats.n_after_spa
        << ',' << stats.n_hull << ',' << format_double(stats.t_extremes_ms) << ','
        << format_double(stats.t_classify_ms) << ','
        << format_double(stats.t_partition_ms) << ',' << format_double(stats.t_sort_ms)
        << ',' << format_double(stats.t_spa_ms) << ','
        << format_double(stats.t_melkman_ms) << ',' << format_double(stats.t_total_ms)
        << '\n';
  } else {
    nlohmann::ordered_json j;
    j["n_input"] = stats.n_input;
    j["n_after_round1"] = stats.n_after_round1;
    j["n_after_spa"] = stats.n_after_spa;
    j["n_hull"] = stats.n_hull;
    j["t_extremes_ms"] = stats.t_extremes_ms;
    j["t_classify_ms"] = stats.t_classify_ms;
    j["t_partition_ms"] = stats.t_partition_ms;
    j["t_sort_ms"] = stats.t_sort_ms;
    j["t_spa_ms"] = stats.t_spa_ms;
    j["t_melkman_ms"] = stats.t_melkman_ms;
    j["t_total_ms"] = stats.t_total_ms;
    out << j.dump(2) << '\n';
  }
  finish_output(out, path);
}

}  // namespace chainhull
