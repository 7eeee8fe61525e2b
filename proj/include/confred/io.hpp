#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "confred/structure.hpp"

namespace confred {

// cfg text format:
//   # comment lines anywhere
//   v b
//   one line per geometric line: space-separated point indices (0-based)

IncidenceStructure parse_cfg(std::istream& in, const std::string& source_name = "<input>");
IncidenceStructure parse_cfg_string(std::string_view text,
                                    const std::string& source_name = "<string>");
IncidenceStructure read_cfg(const std::filesystem::path& path);

/// Writes the structure; `comment` (if non-empty) becomes leading '#' lines.
void write_cfg(std::ostream& out, const IncidenceStructure& s, const std::string& comment = {});
std::string to_cfg_string(const IncidenceStructure& s, const std::string& comment = {});
void save_cfg(const std::filesystem::path& path, const IncidenceStructure& s,
              const std::string& comment = {});

/// Graphviz rendering of the Levi graph: points "p<i>" as circles, lines
/// "l<j>" as boxes, emitted points first then lines, ascending.
std::string levi_dot(const IncidenceStructure& s);

}  // namespace confred
