#include "confred/enumerate.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "confred/augment.hpp"
#include "confred/core.hpp"
#include "confred/errors.hpp"
#include "confred/io.hpp"
#include "confred/reduce.hpp"
#include "search_util.hpp"

namespace confred {

std::size_t Census::count(int d, int r, int k) const {
  auto it = cells.find({d, r, k});
  return it == cells.end() ? 0 : it->second.size();
}

std::size_t Census::total() const {
  std::size_t n = 0;
  for (const auto& [key, cell] : cells) n += cell.size();
  return n;
}

bool Census::insert(const IncidenceStructure& s) {
  const auto params = validate(s);
  auto labeling = canonical_labeling(s);
  auto& cell = cells[{params.d, params.r, params.k}];
  if (cell.count(labeling.form)) return false;
  CensusEntry entry;
  entry.structure = s.relabeled(labeling.point_map, labeling.line_map);
  cell.emplace(std::move(labeling.form), std::move(entry));
  return true;
}

namespace {

using Mask = std::uint64_t;

// Incidence matrices with one column per line, stored as a bitmask whose most
// significant used bit is row 0. A matrix is canonical when no row
// permutation makes its column sequence, sorted in decreasing order,
// lexicographically larger. Columns are added in strictly decreasing order and
// every prefix must be canonical; prefixes of canonical matrices are
// canonical, so each isomorphism class is produced exactly once.
class Orderly {
 public:
  Orderly(int v, int b, int r, int k) : v_(v), b_(b), r_(r), k_(k), degree_(static_cast<std::size_t>(v), 0) {
    for (const auto& combo : detail::combinations(v, k)) {
      Mask m = 0;
      for (int row : combo) m |= bit(row);
      subsets_.push_back(m);
    }
    std::sort(subsets_.rbegin(), subsets_.rend());
  }

  // Indices into the subset list that may follow the forced first column.
  std::vector<std::size_t> second_columns() {
    std::vector<std::size_t> out;
    if (b_ < 2) return out;
    push(subsets_[0]);
    for (std::size_t i = 1; i < subsets_.size(); ++i) {
      if (admissible_next(subsets_[i]) == Next::Stop) break;
      if (admissible_next(subsets_[i]) == Next::Yes) out.push_back(i);
    }
    pop();
    return out;
  }

  void run_from(std::size_t second, std::vector<IncidenceStructure>& out) {
    push(subsets_[0]);
    push(subsets_[second]);
    if (canonical()) extend(second + 1, out);
    pop();
    pop();
  }

  // Only for b == 1 (not a configuration, but keeps the code total).
  void run_single(std::vector<IncidenceStructure>& out) {
    push(subsets_[0]);
    if (static_cast<int>(cols_.size()) == b_) emit(out);
    pop();
  }

 private:
  enum class Next { Yes, No, Stop };

  Mask bit(int row) const { return Mask{1} << (v_ - 1 - row); }
  int top_row(Mask m) const { return v_ - 1 - (63 - std::countl_zero(m)); }

  void push(Mask c) {
    cols_.push_back(c);
    for (int row = 0; row < v_; ++row) {
      if (c & bit(row)) ++degree_[static_cast<std::size_t>(row)];
    }
  }
  void pop() {
    const Mask c = cols_.back();
    cols_.pop_back();
    for (int row = 0; row < v_; ++row) {
      if (c & bit(row)) --degree_[static_cast<std::size_t>(row)];
    }
  }

  Next admissible_next(Mask c) const {
    // Later columns are smaller, so their top row never moves up again: every
    // row above this column's top row must already be full.
    const int top = top_row(c);
    for (int row = 0; row < top; ++row) {
      if (degree_[static_cast<std::size_t>(row)] < r_) return Next::Stop;
    }
    for (int row = 0; row < v_; ++row) {
      if ((c & bit(row)) && degree_[static_cast<std::size_t>(row)] >= r_) return Next::No;
    }
    for (Mask other : cols_) {
      if (std::popcount(c & other) > 1) return Next::No;
    }
    return Next::Yes;
  }

  void extend(std::size_t from, std::vector<IncidenceStructure>& out) {
    if (static_cast<int>(cols_.size()) == b_) {
      emit(out);
      return;
    }
    for (std::size_t i = from; i < subsets_.size(); ++i) {
      const auto next = admissible_next(subsets_[i]);
      if (next == Next::Stop) break;
      if (next == Next::No) continue;
      push(subsets_[i]);
      if (canonical()) extend(i + 1, out);
      pop();
    }
  }

  void emit(std::vector<IncidenceStructure>& out) const {
    for (int d : degree_) {
      if (d != r_) return;
    }
    std::vector<std::vector<int>> lines;
    for (Mask c : cols_) {
      std::vector<int> line;
      for (int row = 0; row < v_; ++row) {
        if (c & bit(row)) line.push_back(row);
      }
      lines.push_back(std::move(line));
    }
    out.emplace_back(v_, std::move(lines));
  }

  Mask image(Mask c, const std::vector<Mask>& cells) const {
    Mask img = 0;
    int pos = 0;
    for (Mask cell : cells) {
      const int m = std::popcount(cell & c);
      for (int i = 0; i < m; ++i) img |= bit(pos + i);
      pos += std::popcount(cell);
    }
    return img;
  }

  static std::vector<Mask> refine(Mask c, const std::vector<Mask>& cells) {
    std::vector<Mask> out;
    out.reserve(cells.size() + 1);
    for (Mask cell : cells) {
      if (cell & c) out.push_back(cell & c);
      if (cell & ~c) out.push_back(cell & ~c);
    }
    return out;
  }

  bool canonical() {
    used_.assign(cols_.size(), 0);
    Mask all = 0;
    for (int row = 0; row < v_; ++row) all |= bit(row);
    return !larger_exists(0, {all});
  }

  // Picks the column that becomes the depth-th largest image, placing its
  // rows first within every cell.
  bool larger_exists(std::size_t depth, const std::vector<Mask>& cells) {
    if (depth == cols_.size()) return false;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (used_[j]) continue;
      const Mask img = image(cols_[j], cells);
      if (img > cols_[depth]) return true;
      if (img < cols_[depth]) continue;
      used_[j] = 1;
      const bool found = larger_exists(depth + 1, refine(cols_[j], cells));
      used_[j] = 0;
      if (found) return true;
    }
    return false;
  }

  int v_;
  int b_;
  int r_;
  int k_;
  std::vector<Mask> subsets_;
  std::vector<Mask> cols_;
  std::vector<int> degree_;
  std::vector<char> used_;
};

}  // namespace

Census enumerate_exhaustive(int r, int k, int d_max, unsigned threads) {
  if (r < 2 || k < 2) throw ParameterError("enumerate_exhaustive needs r, k >= 2");
  for (int d = d_max; d >= 1; --d) {
    if (!admissible(d, r, k)) continue;
    if (params_from_reduced(d, r, k).v > 63) throw ParameterError("enumerate_exhaustive supports at most 63 points");
    break;
  }
  Census census;
  for (int d = 1; d <= d_max; ++d) {
    if (!admissible(d, r, k)) continue;
    const auto params = params_from_reduced(d, r, k);
    census.cells[{d, r, k}];
    Orderly probe(params.v, params.b, r, k);
    const auto seconds = probe.second_columns();
    auto found = detail::run_units<IncidenceStructure>(
        seconds.size(), 0, threads, [&](std::size_t unit, std::vector<IncidenceStructure>& out, std::size_t) {
          Orderly search(params.v, params.b, r, k);
          search.run_from(seconds[unit], out);
        });
    if (params.b == 1) probe.run_single(found);
    for (const auto& s : found) {
      if (!try_validate(s)) continue;
      census.insert(s);
    }
  }
  return census;
}

Census augmentation_closure(const std::vector<IncidenceStructure>& seeds, int d_max,
                            const ClosureOptions& options) {
  Census census;
  if (seeds.empty()) return census;
  const auto first = validate(seeds.front());
  int d_min = first.d;
  for (const auto& s : seeds) {
    const auto p = validate(s);
    if (p.r != first.r || p.k != first.k) {
      throw ParameterError("closure seeds must share (r, k): " + first.label() + " vs " + p.label());
    }
    d_min = std::min(d_min, p.d);
  }
  for (int d = d_min; d <= d_max; ++d) census.cells[{d, first.r, first.k}];
  for (const auto& s : seeds) {
    if (validate(s).d <= d_max) census.insert(s);
  }
  SearchOptions all;
  all.limit = 0;
  all.threads = options.threads;
  for (int d = d_min; d < d_max; ++d) {
    std::vector<IncidenceStructure> frontier;
    for (const auto& [form, entry] : census.cells[{d, first.r, first.k}]) frontier.push_back(entry.structure);
    for (const auto& s : frontier) {
      if (first.balanced()) {
        for (const auto& aug : find_augmentations_balanced(s, all)) {
          if (aug.post_swap && !options.post_swaps) continue;
          census.insert(apply_augmentation_balanced(s, aug));
        }
      } else {
        for (const auto& aug : find_augmentations_general(s, all)) {
          census.insert(apply_augmentation_general(s, aug));
        }
      }
    }
  }
  return census;
}

void compute_flags(Census& census, unsigned threads) {
  for (auto& [key, cell] : census.cells) {
    for (auto& [form, entry] : cell) {
      if (key.r == key.k) {
        entry.martinetti_irreducible = is_irreducible(entry.structure, ReductionMode::Martinetti, threads);
        entry.boben_irreducible = is_irreducible(entry.structure, ReductionMode::Boben, threads);
        entry.general_irreducible = entry.boben_irreducible;
      } else {
        entry.general_irreducible = is_irreducible(entry.structure, ReductionMode::General, threads);
      }
    }
  }
}

CensusDiff census_diff(const Census& a, const Census& b) {
  CensusDiff diff;
  auto collect = [](const Census& x, const Census& y, std::vector<CensusDiffItem>& out) {
    for (const auto& [key, cell] : x.cells) {
      auto other = y.cells.find(key);
      for (const auto& [form, entry] : cell) {
        if (other != y.cells.end() && other->second.count(form)) continue;
        out.push_back({key, form, entry.structure});
      }
    }
  };
  collect(a, b, diff.only_a);
  collect(b, a, diff.only_b);
  return diff;
}

namespace {

std::string flag_text(const std::optional<bool>& flag) {
  if (!flag) return "-";
  return *flag ? "1" : "0";
}

std::string file_name(const CellKey& key, const CanonicalForm& form) {
  return "d" + std::to_string(key.d) + "_r" + std::to_string(key.r) + "_k" + std::to_string(key.k) + "_" +
         form.hex_digest() + ".cfg";
}

const char* const kIndexHeader =
    "file\td\tr\tk\tdigest\tmartinetti_irreducible\tboben_irreducible\tgeneral_irreducible";

}  // namespace

void save_census(const Census& census, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream index(dir / "index.tsv");
  if (!index) throw Error("cannot write " + (dir / "index.tsv").string());
  index << kIndexHeader << "\n";
  std::set<std::string> names;
  for (const auto& [key, cell] : census.cells) {
    for (const auto& [form, entry] : cell) {
      const auto name = file_name(key, form);
      if (!names.insert(name).second) throw Error("digest collision on " + name);
      const auto params = validate(entry.structure);
      save_cfg(dir / name, entry.structure, params.label() + " d=" + std::to_string(key.d));
      index << name << "\t" << key.d << "\t" << key.r << "\t" << key.k << "\t" << form.hex_digest() << "\t"
            << flag_text(entry.martinetti_irreducible) << "\t" << flag_text(entry.boben_irreducible) << "\t"
            << flag_text(entry.general_irreducible) << "\n";
    }
  }
}

Census load_census(const std::filesystem::path& dir) {
  const auto index_path = dir / "index.tsv";
  std::ifstream index(index_path);
  if (!index) throw ParseError(index_path.string(), 0, "cannot open census index");
  Census census;
  std::string line;
  int line_no = 0;
  auto parse_flag = [&](const std::string& text) -> std::optional<bool> {
    if (text == "-") return std::nullopt;
    if (text == "1") return true;
    if (text == "0") return false;
    throw ParseError(index_path.string(), line_no, "bad flag '" + text + "'");
  };
  while (std::getline(index, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kIndexHeader) throw ParseError(index_path.string(), line_no, "unexpected header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, '\t')) fields.push_back(field);
    if (fields.size() != 8) throw ParseError(index_path.string(), line_no, "expected 8 columns");
    CellKey key;
    try {
      key = {std::stoi(fields[1]), std::stoi(fields[2]), std::stoi(fields[3])};
    } catch (const std::exception&) {
      throw ParseError(index_path.string(), line_no, "bad cell parameters");
    }
    const auto s = read_cfg(dir / fields[0]);
    const auto params = try_validate(s);
    if (!params || params->d != key.d || params->r != key.r || params->k != key.k) {
      throw ParseError(index_path.string(), line_no, fields[0] + " does not match its cell");
    }
    auto labeling = canonical_labeling(s);
    if (labeling.form.hex_digest() != fields[4]) {
      throw ParseError(index_path.string(), line_no, fields[0] + " does not match its digest");
    }
    CensusEntry entry;
    entry.structure = s.relabeled(labeling.point_map, labeling.line_map);
    entry.martinetti_irreducible = parse_flag(fields[5]);
    entry.boben_irreducible = parse_flag(fields[6]);
    entry.general_irreducible = parse_flag(fields[7]);
    census.cells[key].emplace(std::move(labeling.form), std::move(entry));
  }
  return census;
}

}  // namespace confred
