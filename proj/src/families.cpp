#include "confred/families.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "confred/core.hpp"

namespace confred {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

IncidenceStructure cyclic(int v, const std::vector<int>& base) {
  if (base.empty()) throw FamilyError("cyclic: empty base line");
  if (*std::max_element(base.begin(), base.end()) >= v ||
      *std::min_element(base.begin(), base.end()) < 0) {
    throw FamilyError("cyclic: base residues must lie in [0, v)");
  }
  std::vector<std::vector<int>> lines;
  lines.reserve(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) {
    std::vector<int> line;
    for (int x : base) line.push_back((x + i) % v);
    lines.push_back(std::move(line));
  }
  try {
    IncidenceStructure s(v, std::move(lines));
    validate(s);
    return s;
  } catch (const Error& e) {
    throw FamilyError("NotConfiguration: cyclic(" + std::to_string(v) + "): " + e.what());
  }
}

namespace {

void require_prime_order(int n, const char* who) {
  if (!is_prime(n)) {
    throw FamilyError(std::string(who) + ": order " + std::to_string(n) + " is not prime");
  }
}

// Parallel classes of AG(2, n): class 0 = verticals, class 1 + s = slope s.
std::vector<std::vector<std::vector<int>>> affine_classes(int n) {
  std::vector<std::vector<std::vector<int>>> classes;
  std::vector<std::vector<int>> verticals;
  for (int c = 0; c < n; ++c) {
    std::vector<int> line;
    for (int y = 0; y < n; ++y) line.push_back(c * n + y);
    verticals.push_back(std::move(line));
  }
  classes.push_back(std::move(verticals));
  for (int slope = 0; slope < n; ++slope) {
    std::vector<std::vector<int>> cls;
    for (int c = 0; c < n; ++c) {
      std::vector<int> line;
      for (int x = 0; x < n; ++x) line.push_back(x * n + (slope * x + c) % n);
      cls.push_back(std::move(line));
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

IncidenceStructure affine_plane(int n) {
  require_prime_order(n, "affine_plane");
  std::vector<std::vector<int>> lines;
  for (auto& cls : affine_classes(n)) {
    for (auto& line : cls) lines.push_back(std::move(line));
  }
  return IncidenceStructure(n * n, std::move(lines));
}

IncidenceStructure projective_plane(int n) {
  require_prime_order(n, "projective_plane");
  std::vector<std::vector<int>> lines;
  std::vector<int> at_infinity;
  int class_index = 0;
  for (auto& cls : affine_classes(n)) {
    const int ideal = n * n + class_index++;
    at_infinity.push_back(ideal);
    for (auto& line : cls) {
      line.push_back(ideal);
      lines.push_back(std::move(line));
    }
  }
  lines.push_back(std::move(at_infinity));
  return IncidenceStructure(n * n + n + 1, std::move(lines));
}

IncidenceStructure transversal_design(int k, int n) {
  require_prime_order(n, "transversal_design");
  if (k < 2 || k > n) throw FamilyError("transversal_design: need 2 <= k <= n");
  std::vector<std::vector<int>> lines;
  auto classes = affine_classes(n);
  for (std::size_t c = 1; c < classes.size(); ++c) {
    for (const auto& line : classes[c]) {
      std::vector<int> kept;
      for (int p : line) {
        if (p / n < k) kept.push_back(p);
      }
      lines.push_back(std::move(kept));
    }
  }
  return IncidenceStructure(k * n, std::move(lines));
}

std::vector<std::vector<int>> transversal_design_groups(int k, int n) {
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
  for (int g = 0; g < k; ++g) {
    for (int y = 0; y < n; ++y) groups[static_cast<std::size_t>(g)].push_back(g * n + y);
  }
  return groups;
}

namespace {

IncidenceStructure desargues() {
  // Points: 2-subsets of {0..4}; lines: 3-subsets; incidence: containment.
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) duads.emplace_back(a, b);
  }
  std::vector<std::vector<int>> lines;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int c = b + 1; c < 5; ++c) {
        std::vector<int> line;
        for (std::size_t i = 0; i < duads.size(); ++i) {
          auto [x, y] = duads[i];
          auto in = [&](int z) { return z == a || z == b || z == c; };
          if (in(x) && in(y)) line.push_back(static_cast<int>(i));
        }
        lines.push_back(std::move(line));
      }
    }
  }
  return IncidenceStructure(10, std::move(lines));
}

}  // namespace

IncidenceStructure named(const std::string& name) {
  if (name == "fano") return cyclic(7, {0, 1, 3});
  if (name == "moebius_kantor") return cyclic(8, {0, 1, 3});
  if (name == "pappus") return transversal_design(3, 3);
  if (name == "desargues") return desargues();
  throw FamilyError("unknown named configuration '" + name +
                    "' (expected fano, moebius_kantor, pappus or desargues)");
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& text, const std::string& spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FamilyError("bad integer '" + text + "' in family spec '" + spec + "'");
  }
  return value;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  FamilySpec spec;
  if (parts.empty()) throw FamilyError("empty family spec");
  const std::string& tag = parts[0];
  if (tag == "cyclic") {
    if (parts.size() != 3) throw FamilyError("expected cyclic:<v>:<b0>,<b1>,...");
    spec.tag = Tag::Cyclic;
    spec.v = to_int(parts[1], text);
    for (const auto& x : split(parts[2], ',')) spec.base.push_back(to_int(x, text));
  } else if (tag == "affine" || tag == "projective") {
    if (parts.size() != 2) throw FamilyError("expected " + tag + ":<n>");
    spec.tag = tag == "affine" ? Tag::Affine : Tag::Projective;
    spec.n = to_int(parts[1], text);
  } else if (tag == "td") {
    if (parts.size() != 3) throw FamilyError("expected td:<k>:<n>");
    spec.tag = Tag::TransversalDesign;
    spec.k = to_int(parts[1], text);
    spec.n = to_int(parts[2], text);
  } else if (tag == "named") {
    if (parts.size() != 2) throw FamilyError("expected named:<name>");
    spec.tag = Tag::Named;
    spec.name = parts[1];
  } else if (parts.size() == 1) {
    spec.tag = Tag::Named;
    spec.name = tag;
  } else {
    throw FamilyError("unknown family tag '" + tag + "'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (tag) {
    case Tag::Cyclic: {
      std::string out = "cyclic:" + std::to_string(v) + ":";
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(base[i]);
      }
      return out;
    }
    case Tag::Affine:
      return "affine:" + std::to_string(n);
    case Tag::Projective:
      return "projective:" + std::to_string(n);
    case Tag::TransversalDesign:
      return "td:" + std::to_string(k) + ":" + std::to_string(n);
    case Tag::Named:
      return "named:" + name;
  }
  return {};
}

IncidenceStructure FamilySpec::build() const {
  switch (tag) {
    case Tag::Cyclic:
      return cyclic(v, base);
    case Tag::Affine:
      return affine_plane(n);
    case Tag::Projective:
      return projective_plane(n);
    case Tag::TransversalDesign:
      return transversal_design(k, n);
    case Tag::Named:
      return named(name);
  }
  throw FamilyError("unreachable family tag");
}

}  // namespace confred
