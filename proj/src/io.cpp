#include "confred/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace confred {

namespace {

std::vector<long long> parse_ints(std::string_view text, const std::string& source, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    long long value = 0;
    auto token = text.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(source, line_no, "expected an integer, got '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_blank(std::string_view text) {
  return text.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

IncidenceStructure parse_cfg(std::istream& in, const std::string& source_name) {
  std::string text;
  int line_no = 0;
  int header_line = 0;
  long long v = -1;
  long long b = -1;
  std::vector<std::vector<int>> lines;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view view(text);
    auto first = view.find_first_not_of(" \t");
    if (first != std::string_view::npos && view[first] == '#') continue;
    if (is_blank(view)) continue;
    auto values = parse_ints(view, source_name, line_no);
    if (v < 0) {
      if (values.size() != 2) throw ParseError(source_name, line_no, "header must be 'v b'");
      v = values[0];
      b = values[1];
      if (v < 0 || b < 0 || v > 1'000'000 || b > 1'000'000) {
        throw ParseError(source_name, line_no, "point and line counts out of range");
      }
      header_line = line_no;
      continue;
    }
    if (static_cast<long long>(lines.size()) >= b) {
      throw ParseError(source_name, line_no, "more than " + std::to_string(b) + " lines");
    }
    std::vector<int> line;
    for (long long p : values) {
      if (p < 0 || p >= v) {
        throw ParseError(source_name, line_no,
                         "point " + std::to_string(p) + " out of range [0, " + std::to_string(v) +
                             ")");
      }
      line.push_back(static_cast<int>(p));
    }
    lines.push_back(std::move(line));
    try {
      // Catch a repeated point on the line here so the error carries the line number.
      IncidenceStructure(static_cast<int>(v), {lines.back()});
    } catch (const StructureError& e) {
      throw ParseError(source_name, line_no, e.what());
    }
  }
  if (v < 0) throw ParseError(source_name, line_no, "missing 'v b' header");
  if (static_cast<long long>(lines.size()) != b) {
    throw ParseError(source_name, header_line,
                     "header declares " + std::to_string(b) + " lines, found " +
                         std::to_string(lines.size()));
  }
  try {
    return IncidenceStructure(static_cast<int>(v), std::move(lines));
  } catch (const StructureError& e) {
    throw ParseError(source_name, line_no, e.what());
  }
}

IncidenceStructure parse_cfg_string(std::string_view text, const std::string& source_name) {
  std::istringstream in{std::string(text)};
  return parse_cfg(in, source_name);
}

IncidenceStructure read_cfg(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_cfg(in, path.string());
}

void write_cfg(std::ostream& out, const IncidenceStructure& s, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string text;
    while (std::getline(lines, text)) out << "# " << text << '\n';
  }
  out << s.num_points() << ' ' << s.num_lines() << '\n';
  for (const auto& line : s.lines()) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << ' ';
      out << line[i];
    }
    out << '\n';
  }
}

std::string to_cfg_string(const IncidenceStructure& s, const std::string& comment) {
  std::ostringstream out;
  write_cfg(out, s, comment);
  return out.str();
}

void save_cfg(const std::filesystem::path& path, const IncidenceStructure& s,
              const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_cfg(out, s, comment);
}

std::string levi_dot(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "graph levi {\n";
  for (int p = 0; p < s.num_points(); ++p) out << "  p" << p << " [shape=circle];\n";
  for (int j = 0; j < s.num_lines(); ++j) out << "  l" << j << " [shape=box];\n";
  for (int j = 0; j < s.num_lines(); ++j) {
    for (int p : s.line(j)) out << "  p" << p << " -- l" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace confred
