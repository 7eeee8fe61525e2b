#include "confred/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace confred {

int ConfigParams::gcd_rk() const { return std::gcd(r, k); }

std::string ConfigParams::label() const {
  if (balanced()) return std::to_string(v) + "_" + std::to_string(k);
  return "(" + std::to_string(v) + "_" + std::to_string(r) + "," + std::to_string(b) + "_" +
         std::to_string(k) + ")";
}

namespace {

ConfigParams make_params(int v, int b, int r, int k) {
  ConfigParams params;
  params.v = v;
  params.b = b;
  params.r = r;
  params.k = k;
  params.d = reduced_parameters(v, b, r, k);
  params.delta_p = v - (r * (k - 1) + 1);
  params.delta_l = b - (k * (r - 1) + 1);
  return params;
}

}  // namespace

ConfigParams validate(const IncidenceStructure& s) {
  const int v = s.num_points();
  const int b = s.num_lines();
  if (b == 0) throw ValidationError::not_uniform(-1, 0, 2);
  const int k = static_cast<int>(s.line(0).size());
  if (k < 2) throw ValidationError::not_uniform(0, k, 2);
  for (int j = 1; j < b; ++j) {
    int size = static_cast<int>(s.line(j).size());
    if (size != k) throw ValidationError::not_uniform(j, size, k);
  }
  const int r = static_cast<int>(s.lines_through(0).size());
  if (r < 2) throw ValidationError::not_regular(0, r, 2);
  for (int p = 1; p < v; ++p) {
    int degree = static_cast<int>(s.lines_through(p).size());
    if (degree != r) throw ValidationError::not_regular(p, degree, r);
  }
  std::vector<char> seen(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), 0);
  for (const auto& line : s.lines()) {
    for (std::size_t a = 0; a < line.size(); ++a) {
      for (std::size_t c = a + 1; c < line.size(); ++c) {
        auto& cell = seen[static_cast<std::size_t>(line[a]) * static_cast<std::size_t>(v) +
                          static_cast<std::size_t>(line[c])];
        if (cell) {
          throw ValidationError::not_linear(line[a], line[c], common_lines(s, line[a], line[c]));
        }
        cell = 1;
      }
    }
  }
  return make_params(v, b, r, k);
}

std::optional<ConfigParams> try_validate(const IncidenceStructure& s) {
  try {
    return validate(s);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

int reduced_parameters(int v, int b, int r, int k) {
  if (r <= 0 || k <= 0) throw ParameterError("r and k must be positive");
  if (static_cast<long long>(v) * r != static_cast<long long>(b) * k) {
    throw ParameterError("NonIntegral: v*r != b*k for (v,b,r,k) = (" + std::to_string(v) + "," +
                         std::to_string(b) + "," + std::to_string(r) + "," + std::to_string(k) +
                         ")");
  }
  const int g = std::gcd(r, k);
  if ((v * g) % k != 0) throw ParameterError("NonIntegral: v*gcd(r,k)/k");
  return v * g / k;
}

bool admissible(int d, int r, int k) {
  const long long g = std::gcd(r, k);
  return static_cast<long long>(d) * k >= g * (static_cast<long long>(r) * (k - 1) + 1);
}

ConfigParams params_from_reduced(int d, int r, int k) {
  if (r < 2 || k < 2) throw ParameterError("r and k must be at least 2");
  const int g = std::gcd(r, k);
  return make_params(d * k / g, d * r / g, r, k);
}

LeviGraph levi_graph(const IncidenceStructure& s) {
  LeviGraph g;
  g.num_points = s.num_points();
  g.num_lines = s.num_lines();
  g.adjacency.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int j = 0; j < s.num_lines(); ++j) {
    const int line_vertex = g.num_points + j;
    for (int p : s.line(j)) {
      g.adjacency[static_cast<std::size_t>(p)].push_back(line_vertex);
      g.adjacency[static_cast<std::size_t>(line_vertex)].push_back(p);
    }
  }
  return g;
}

std::optional<int> girth(const LeviGraph& g) {
  const int n = g.num_vertices();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    parent[static_cast<std::size_t>(source)] = -1;
    frontier.push(source);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      const int du = dist[static_cast<std::size_t>(u)];
      if (best > 0 && 2 * du >= best) break;
      for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          frontier.push(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          int cycle = du + dist[static_cast<std::size_t>(w)] + 1;
          if (best < 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

// Component id per Levi vertex (points first, then lines).
std::vector<int> component_ids(const IncidenceStructure& s, int* count) {
  const LeviGraph g = levi_graph(s);
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (int start = 0; start < g.num_vertices(); ++start) {
    if (id[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    id[static_cast<std::size_t>(start)] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
        if (id[static_cast<std::size_t>(w)] < 0) {
          id[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  *count = next;
  return id;
}

// Swaps (a.point, a.line), (b.point, b.line) into (a.point, b.line),
// (b.point, a.line).
std::optional<IncidenceStructure> swapped(const IncidenceStructure& s, Incidence a, Incidence b) {
  if (s.incident(a.point, b.line) || s.incident(b.point, a.line)) return std::nullopt;
  auto lines = s.lines();
  auto replace = [](std::vector<int>& line, int from, int to) {
    *std::find(line.begin(), line.end(), from) = to;
  };
  replace(lines[static_cast<std::size_t>(a.line)], a.point, b.point);
  replace(lines[static_cast<std::size_t>(b.line)], b.point, a.point);
  try {
    IncidenceStructure out(s.num_points(), std::move(lines));
    validate(out);
    return out;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Component> connected_components(const IncidenceStructure& s) {
  int count = 0;
  const auto id = component_ids(s, &count);
  std::vector<Component> out(static_cast<std::size_t>(count));
  for (int p = 0; p < s.num_points(); ++p) {
    out[static_cast<std::size_t>(id[static_cast<std::size_t>(p)])].points.push_back(p);
  }
  for (int j = 0; j < s.num_lines(); ++j) {
    out[static_cast<std::size_t>(id[static_cast<std::size_t>(s.num_points() + j)])]
        .lines.push_back(j);
  }
  return out;
}

IncidenceStructure repair_connectivity(const IncidenceStructure& s,
                                       const std::vector<Incidence>& preferred) {
  IncidenceStructure current = s;
  while (true) {
    int count = 0;
    const auto id = component_ids(current, &count);
    if (count <= 1) return current;

    // Candidate order: preferred incidences (still present) first, then the rest.
    std::vector<Incidence> order;
    for (const auto& inc : preferred) {
      if (inc.point < current.num_points() && inc.line < current.num_lines() &&
          current.incident(inc.point, inc.line)) {
        order.push_back(inc);
      }
    }
    const std::size_t num_preferred = order.size();
    for (const auto& inc : current.incidences()) {
      if (std::find(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(num_preferred),
                    inc) == order.begin() + static_cast<std::ptrdiff_t>(num_preferred)) {
        order.push_back(inc);
      }
    }

    auto comp = [&](const Incidence& inc) { return id[static_cast<std::size_t>(inc.point)]; };
    bool merged = false;
    for (std::size_t i = 0; i < order.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < order.size() && !merged; ++j) {
        if (comp(order[i]) == comp(order[j])) continue;
        auto candidate = swapped(current, order[i], order[j]);
        if (!candidate) continue;
        int new_count = 0;
        component_ids(*candidate, &new_count);
        if (new_count >= count) continue;
        current = std::move(*candidate);
        merged = true;
      }
    }
    // Unreachable for configurations: two components always admit a merging swap.
    if (!merged) return current;
  }
}

std::vector<int> common_lines(const IncidenceStructure& s, int p, int q) {
  const auto& a = s.lines_through(p);
  const auto& b = s.lines_through(q);
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace confred
