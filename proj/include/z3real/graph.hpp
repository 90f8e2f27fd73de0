#pragma once

// Loop-free multigraph with a reference orientation per edge, plus the
// structural operations used by the certificates and constructions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "z3real/sequence.hpp"

namespace z3real {

struct Edge {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Multigraph;
Multigraph build_graph(int n, std::vector<Edge> edges);

/// Vertices are 0..n-1; edges are indexed and may be parallel, never loops.
class Multigraph {
 public:
  Multigraph() = default;

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  int degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& degrees() const noexcept { return degree_; }
  int min_degree() const {
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
  }

  int multiplicity(int u, int v) const {
    int m = 0;
    for (const auto& e : edges_)
      if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) ++m;
    return m;
  }

  /// n x n matrix of edge multiplicities.
  std::vector<std::vector<int>> multiplicity_matrix() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (const auto& e : edges_) {
      ++m[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)];
      ++m[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)];
    }
    return m;
  }

  /// Distinct neighbours, sorted.
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
      if (e.tail == v) out.push_back(e.head);
      if (e.head == v) out.push_back(e.tail);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool is_simple() const {
    auto m = multiplicity_matrix();
    for (const auto& row : m)
      for (int c : row)
        if (c > 1) return false;
    return true;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  friend Multigraph build_graph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
};

inline Multigraph build_graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Multigraph g;
  g.n_ = n;
  g.degree_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(e.tail) + "," +
                       std::to_string(e.head) + ")");
    if (e.tail == e.head) throw GraphError("loop at vertex " + std::to_string(e.tail));
    ++g.degree_[static_cast<std::size_t>(e.tail)];
    ++g.degree_[static_cast<std::size_t>(e.head)];
  }
  g.edges_ = std::move(edges);
  return g;
}

inline Multigraph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [t, h] : pairs) edges.push_back({t, h});
  return build_graph(n, std::move(edges));
}

inline DegreeSequence degree_sequence_of(const Multigraph& g) {
  std::vector<int> d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  // isolated vertices cannot be represented in a positive sequence
  while (!d.empty() && d.back() == 0) d.pop_back();
  return DegreeSequence(std::move(d));
}

/// Graph together with old-vertex -> new-vertex map (-1 for removed vertices).
struct Relabeled {
  Multigraph graph;
  std::vector<int> map;
};

namespace detail {

inline std::vector<int> normalize_vertex_set(const Multigraph& g, std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int v : xs)
    if (v < 0 || v >= g.vertex_count())
      throw GraphError("vertex " + std::to_string(v) + " out of range");
  return xs;
}

}  // namespace detail

/// Merges `xs` into one vertex (placed at the position of its smallest
/// member); edges inside `xs` disappear, parallel edges to the rest stay.
inline Relabeled contract(const Multigraph& g, std::vector<int> xs) {
  xs = detail::normalize_vertex_set(g, std::move(xs));
  if (xs.empty()) throw GraphError("cannot contract an empty vertex set");
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : xs) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  int merged = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in[static_cast<std::size_t>(v)]) {
      if (merged < 0) merged = next++;
      map[static_cast<std::size_t>(v)] = merged;
    } else {
      map[static_cast<std::size_t>(v)] = next++;
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.tail)] && in[static_cast<std::size_t>(e.head)]) continue;
    edges.push_back({map[static_cast<std::size_t>(e.tail)], map[static_cast<std::size_t>(e.head)]});
  }
  return {build_graph(next, std::move(edges)), std::move(map)};
}

inline Relabeled induced_subgraph(const Multigraph& g, std::vector<int> xs) {
  xs = detail::normalize_vertex_set(g, std::move(xs));
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) map[static_cast<std::size_t>(xs[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int t = map[static_cast<std::size_t>(e.tail)];
    const int h = map[static_cast<std::size_t>(e.head)];
    if (t >= 0 && h >= 0) edges.push_back({t, h});
  }
  return {build_graph(static_cast<int>(xs.size()), std::move(edges)), std::move(map)};
}

namespace detail {

inline int find_edge(const Multigraph& g, int a, int b, int skip = -1) {
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == skip) continue;
    const auto& e = g.edge(i);
    if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) return i;
  }
  return -1;
}

inline void check_vertex(const Multigraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace detail

/// G_[uv,uw]: removes one copy of uv and of uw (lowest index) and adds vw.
inline Multigraph lift(const Multigraph& g, int u, int v, int w) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  detail::check_vertex(g, w);
  if (v == w) throw GraphError("lift needs two distinct neighbours");
  const int e1 = detail::find_edge(g, u, v);
  const int e2 = detail::find_edge(g, u, w);
  if (e1 < 0 || e2 < 0) throw GraphError("lift: missing edge at vertex " + std::to_string(u));
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != e1 && i != e2) edges.push_back(g.edge(i));
  edges.push_back({v, w});
  return build_graph(g.vertex_count(), std::move(edges));
}

/// G_(v,v1): deletes the 3-vertex v and joins its two other neighbours.
/// Vertices above v shift down by one.
inline Multigraph split_three_vertex(const Multigraph& g, int v, int v1) {
  detail::check_vertex(g, v);
  detail::check_vertex(g, v1);
  if (g.degree(v) != 3) throw GraphError("split: vertex " + std::to_string(v) + " is not a 3-vertex");
  std::vector<int> others;
  bool dropped = false;
  for (const auto& e : g.edges()) {
    int other = -1;
    if (e.tail == v) other = e.head;
    if (e.head == v) other = e.tail;
    if (other < 0) continue;
    if (other == v1 && !dropped) {
      dropped = true;
      continue;
    }
    others.push_back(other);
  }
  if (!dropped) throw GraphError("split: vertex " + std::to_string(v1) + " is not a neighbour");
  if (others[0] == others[1]) throw GraphError("split: the remaining two neighbours coincide");
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.tail == v || e.head == v) continue;
    edges.push_back({shift(e.tail), shift(e.head)});
  }
  edges.push_back({shift(others[0]), shift(others[1])});
  return build_graph(g.vertex_count() - 1, std::move(edges));
}

inline bool is_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = n;
  for (const auto& e : g.edges()) {
    const int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

struct Wheel {
  int center = -1;
  std::vector<int> rim;  // cyclic order

  std::vector<int> vertices() const {
    std::vector<int> out = rim;
    out.push_back(center);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Brute force search for an even wheel with rim length in [4, max_rim]:
/// every hub, then even cycles among its neighbours. Lowest hub first; rims
/// start at their smallest vertex.
inline std::optional<Wheel> find_even_wheel(const Multigraph& g, int max_rim = 8) {
  const int n = g.vertex_count();
  const auto mult = g.multiplicity_matrix();
  auto adj = [&](int a, int b) { return mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0; };
  for (int c = 0; c < n; ++c) {
    const std::vector<int> nb = g.neighbors(c);
    if (static_cast<int>(nb.size()) < 4) continue;
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::optional<Wheel> found;
    std::function<bool(int)> extend = [&](int start) -> bool {
      const int last = path.back();
      const int len = static_cast<int>(path.size());
      if (len >= 4 && len % 2 == 0 && adj(last, start)) {
        found = Wheel{c, path};
        return true;
      }
      if (len == max_rim) return false;
      for (int x : nb) {
        if (x <= start || used[static_cast<std::size_t>(x)] || !adj(last, x)) continue;
        used[static_cast<std::size_t>(x)] = 1;
        path.push_back(x);
        if (extend(start)) return true;
        path.pop_back();
        used[static_cast<std::size_t>(x)] = 0;
      }
      return false;
    };
    for (int s : nb) {
      path.assign(1, s);
      used.assign(static_cast<std::size_t>(n), 0);
      used[static_cast<std::size_t>(s)] = 1;
      if (extend(s)) return found;
    }
  }
  return std::nullopt;
}

/// Partition of the edges under "share a cycle of length at most 3",
/// closed transitively. Edges on no such cycle get class -1.
inline std::vector<int> triangle_classes(const Multigraph& g) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> on_cycle(static_cast<std::size_t>(m), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  // edge indices per unordered vertex pair
  std::vector<std::vector<std::vector<int>>> between(
      static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < m; ++i) {
    const auto& e = g.edge(i);
    between[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)].push_back(i);
    between[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)].push_back(i);
  }
  auto at = [&](int a, int b) -> const std::vector<int>& {
    return between[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto& ab = at(a, b);
      if (ab.empty()) continue;
      if (ab.size() >= 2) {
        for (int e : ab) {
          on_cycle[static_cast<std::size_t>(e)] = 1;
          unite(ab.front(), e);
        }
      }
      for (int c = b + 1; c < n; ++c) {
        const auto& bc = at(b, c);
        const auto& ac = at(a, c);
        if (bc.empty() || ac.empty()) continue;
        for (const auto* group : {&ab, &bc, &ac})
          for (int e : *group) {
            on_cycle[static_cast<std::size_t>(e)] = 1;
            unite(ab.front(), e);
          }
      }
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    if (on_cycle[static_cast<std::size_t>(i)]) cls[static_cast<std::size_t>(i)] = find(i);
  return cls;
}

/// Every pair of edges is linked by a chain of cycles of length <= 3 whose
/// consecutive members share an edge. Graphs without edges are not.
inline bool is_triangularly_connected(const Multigraph& g) {
  if (g.edge_count() == 0) return false;
  const auto cls = triangle_classes(g);
  for (int c : cls)
    if (c < 0 || c != cls.front()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// text formats

/// "n m" then m lines "tail head". Lines starting with '#' are ignored.
inline void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
}

inline std::string to_edge_list(const Multigraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline Multigraph read_edge_list(std::istream& in) {
  std::string content;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    content += line;
    content += '\n';
  }
  std::istringstream body(content);
  long long n = 0, m = 0;
  if (!(body >> n >> m)) throw GraphError("edge list: missing header \"n m\"");
  if (n < 0 || m < 0) throw GraphError("edge list: negative counts");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long t = 0, h = 0;
    if (!(body >> t >> h)) throw GraphError("edge list: expected " + std::to_string(m) + " edges");
    edges.push_back({static_cast<int>(t), static_cast<int>(h)});
  }
  std::string extra;
  if (body >> extra) throw GraphError("edge list: trailing content '" + extra + "'");
  return build_graph(static_cast<int>(n), std::move(edges));
}

inline Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline std::string to_dot(const Multigraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& e : g.edges()) out << "  " << e.tail << " -- " << e.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace z3real
