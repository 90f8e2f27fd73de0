#pragma once

// Independent oracles and generators for the test suite. Nothing here
// shares code with the library beyond the Multigraph type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "z3real/z3real.hpp"

namespace testing_support {

using z3real::Edge;
using z3real::Multigraph;

/// All 2^m flows, boundaries collected in a set.
inline bool naive_z3_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 1) return true;
  std::set<std::vector<int>> seen;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
      const int a = (mask >> i) & 1u ? 2 : 1;
      const auto& e = g.edge(i);
      b[static_cast<std::size_t>(e.tail)] = (b[static_cast<std::size_t>(e.tail)] + a) % 3;
      b[static_cast<std::size_t>(e.head)] = (b[static_cast<std::size_t>(e.head)] + 3 - a) % 3;
    }
    seen.insert(b);
  }
  long long full = 1;
  for (int i = 0; i < n - 1; ++i) full *= 3;
  return static_cast<long long>(seen.size()) == full;
}

/// All 2^m orientations, out minus in divisible by 3.
inline bool naive_modular_orientation(const Multigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> ex(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
      auto e = g.edge(i);
      if ((mask >> i) & 1u) std::swap(e.tail, e.head);
      ++ex[static_cast<std::size_t>(e.tail)];
      --ex[static_cast<std::size_t>(e.head)];
    }
    if (std::all_of(ex.begin(), ex.end(), [](int x) { return x % 3 == 0; })) return true;
  }
  return false;
}

/// Lexicographically least multiplicity matrix over all permutations.
inline std::string brute_canonical(const Multigraph& g) {
  const int n = g.vertex_count();
  const auto mat = g.multiplicity_matrix();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s += static_cast<char>('0' + mat[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]
                                        [static_cast<std::size_t>(p[static_cast<std::size_t>(j)])]);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Multigraph random_multigraph(std::mt19937& rng, int n, int m) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    const int a = pick(rng), b = pick(rng);
    if (a != b) edges.push_back({a, b});
  }
  return z3real::build_graph(n, std::move(edges));
}

/// Simple graph, each pair present with probability p.
inline Multigraph random_simple(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return z3real::build_graph(n, std::move(edges));
}

inline Multigraph cycle(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return z3real::build_graph(k, std::move(edges));
}

inline Multigraph path(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return z3real::build_graph(k, std::move(edges));
}

inline Multigraph random_tree(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  return z3real::build_graph(n, std::move(edges));
}

inline Multigraph two_cycle() { return z3real::build_graph(2, std::vector<Edge>{{0, 1}, {0, 1}}); }

inline Multigraph squared_cycle(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    edges.push_back({i, (i + 2) % k});
  }
  return z3real::build_graph(k, std::move(edges));
}

/// Adds vertex n joined to the given vertices.
inline Multigraph attach(const Multigraph& g, const std::vector<int>& to) {
  std::vector<Edge> edges = g.edges();
  for (int x : to) edges.push_back({g.vertex_count(), x});
  return z3real::build_graph(g.vertex_count() + 1, std::move(edges));
}

/// Independent Erdos-Gallai check.
inline bool eg_graphic(std::vector<int> d) {
  std::sort(d.rbegin(), d.rend());
  long long total = std::accumulate(d.begin(), d.end(), 0LL);
  if (total % 2) return false;
  const long long n = static_cast<long long>(d.size());
  for (long long k = 1; k <= n; ++k) {
    long long lhs = 0, rhs = k * (k - 1);
    for (long long i = 0; i < k; ++i) lhs += d[static_cast<std::size_t>(i)];
    for (long long i = k; i < n; ++i) rhs += std::min<long long>(d[static_cast<std::size_t>(i)], k);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Every nonincreasing sequence of length n with entries in [lo, hi].
inline std::vector<std::vector<int>> all_sequences(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int top) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

}  // namespace testing_support
