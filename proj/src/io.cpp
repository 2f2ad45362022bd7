#include "reuleaux/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "reuleaux/errors.hpp"

namespace reuleaux {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ParseError("line " + std::to_string(line) + ": cannot parse number '" +
                     std::string(token) + "'");
  return value;
}

std::vector<Vec3> parse_text(std::string_view content) {
  std::vector<Vec3> points;
  std::size_t line_no = 0;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto sep = line.find_first_of(" \t,");
      tokens.push_back(line.substr(0, sep));
      line = sep == std::string_view::npos ? std::string_view{} : trim(line.substr(sep + 1));
    }
    if (tokens.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 coordinates, got " +
                       std::to_string(tokens.size()));
    points.push_back({parse_number(tokens[0], line_no), parse_number(tokens[1], line_no),
                      parse_number(tokens[2], line_no)});
  }
  return points;
}

nlohmann::json parse_json(std::string_view content) {
  try {
    return nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Vec3> parse_json_points(std::string_view content) {
  const auto doc = parse_json(content);
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw ParseError("JSON point set must be an object with a \"points\" array");
  std::vector<Vec3> points;
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || row.size() != 3)
      throw ParseError("each JSON point must be an array of 3 numbers");
    for (const auto& c : row)
      if (!c.is_number()) throw ParseError("JSON point coordinates must be numbers");
    points.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
  }
  return points;
}

}  // namespace

std::vector<Vec3> parse_points(std::string_view content) {
  const auto body = trim(content);
  if (!body.empty() && body.front() == '{') return parse_json_points(body);
  return parse_text(content);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

std::vector<Vec3> read_points(const std::filesystem::path& path) {
  try {
    return parse_points(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_points(std::ostream& os, const std::vector<Vec3>& points, PointFormat format,
                  std::string_view comment) {
  char buf[3][32];
  auto fmt = [&](int k, double v) {
    const auto res = std::to_chars(buf[k], buf[k] + sizeof buf[k], v, std::chars_format::general, 17);
    return std::string_view(buf[k], static_cast<std::size_t>(res.ptr - buf[k]));
  };
  if (format == PointFormat::Text) {
    if (!comment.empty()) os << "# " << comment << '\n';
    for (const auto& p : points) os << fmt(0, p.x) << ' ' << fmt(1, p.y) << ' ' << fmt(2, p.z) << '\n';
    return;
  }
  os << "{\"points\": [";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    os << (i ? ",\n  " : "\n  ") << '[' << fmt(0, p.x) << ", " << fmt(1, p.y) << ", " << fmt(2, p.z)
       << ']';
  }
  os << "\n]}\n";
}

std::vector<std::array<std::size_t, 2>> parse_plan(std::string_view content) {
  const auto doc = parse_json(content);
  if (!doc.is_object() || !doc.contains("smooth") || !doc["smooth"].is_array())
    throw ParseError("plan must be an object with a \"smooth\" array");
  std::vector<std::array<std::size_t, 2>> out;
  for (const auto& row : doc["smooth"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw ParseError("each plan entry must be a pair of integer vertex labels");
    const auto i = row[0].get<long long>();
    const auto j = row[1].get<long long>();
    if (i < 1 || j < 1) throw ParseError("plan vertex labels are 1-based");
    out.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)});
  }
  return out;
}

std::vector<std::array<std::size_t, 2>> read_plan(const std::filesystem::path& path) {
  try {
    return parse_plan(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace reuleaux
