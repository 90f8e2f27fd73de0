#pragma once

// Fixed base graphs. Figure graphs are labelled so that vertex i has the
// i-th entry of the sorted degree sequence.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z3real/graph.hpp"

namespace z3real {

enum class BaseGraphId { Fig1a, Fig1b, Fig1c, Fig1d, Fig2a, Fig2b, Fig2c, WheelEven, K4minus, K5, K5minus, K44 };

namespace detail {

inline Multigraph from_one_based(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a - 1, b - 1});
  return build_graph(n, std::move(edges));
}

inline Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return build_graph(n, std::move(edges));
}

}  // namespace detail

/// W_k: center 0, rim 1..k in cyclic order.
inline Multigraph wheel(int k) {
  if (k < 3) throw std::invalid_argument("wheel needs rim length >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({0, i});
  for (int i = 1; i < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({k, 1});
  return build_graph(k + 1, std::move(edges));
}

inline Multigraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return build_graph(a + b, std::move(edges));
}

/// `k` is the rim length for WheelEven and ignored otherwise.
inline Multigraph base_graph(BaseGraphId id, int k = 4) {
  using detail::from_one_based;
  switch (id) {
    case BaseGraphId::Fig1a:
      return from_one_based(6, {{1, 6}, {5, 2}, {3, 4}, {1, 3}, {6, 4}, {1, 2}, {1, 5}, {5, 3}, {2, 4}, {6, 2}});
    case BaseGraphId::Fig1b:
      return from_one_based(7, {{2, 6}, {6, 5}, {1, 4}, {3, 4}, {2, 3}, {5, 4}, {2, 7}, {2, 1}, {1, 3}, {1, 5},
                                {1, 7}, {7, 6}});
    case BaseGraphId::Fig1c:
      return from_one_based(8, {{5, 2}, {1, 3}, {4, 3}, {5, 4}, {2, 3}, {5, 1}, {1, 4}, {1, 7}, {1, 8}, {6, 7},
                                {8, 7}, {6, 2}, {8, 2}, {1, 6}});
    case BaseGraphId::Fig1d:
      return from_one_based(8, {{5, 2}, {1, 3}, {4, 3}, {5, 4}, {2, 3}, {5, 1}, {1, 4}, {7, 2}, {1, 8}, {6, 7},
                                {8, 7}, {6, 2}, {8, 2}, {1, 6}});
    case BaseGraphId::Fig2a:
      return from_one_based(7, {{2, 3}, {4, 5}, {2, 4}, {3, 5}, {2, 7}, {2, 6}, {3, 7}, {1, 4}, {1, 5}, {1, 7},
                                {1, 6}, {6, 3}});
    case BaseGraphId::Fig2b:
      return from_one_based(8, {{2, 4}, {4, 5}, {5, 6}, {1, 8}, {7, 8}, {2, 7}, {6, 8}, {2, 3}, {2, 1}, {1, 7},
                                {1, 6}, {3, 4}, {1, 3}, {3, 5}});
    case BaseGraphId::Fig2c:
      return from_one_based(8, {{3, 4}, {5, 6}, {3, 7}, {7, 5}, {4, 8}, {8, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                {2, 3}, {2, 4}, {2, 7}, {2, 8}});
    case BaseGraphId::WheelEven:
      if (k < 4 || k % 2 != 0) throw std::invalid_argument("WheelEven needs an even rim length >= 4");
      return wheel(k);
    case BaseGraphId::K4minus:
      // 0 and 2 are the nonadjacent 2-vertices
      return build_graph(4, std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case BaseGraphId::K5:
      return detail::complete_graph(5);
    case BaseGraphId::K5minus: {
      std::vector<Edge> edges;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (!(i == 3 && j == 4)) edges.push_back({i, j});
      return build_graph(5, std::move(edges));
    }
    case BaseGraphId::K44:
      return complete_bipartite(4, 4);
  }
  throw std::invalid_argument("unknown base graph id");
}

inline std::string to_string(BaseGraphId id) {
  switch (id) {
    case BaseGraphId::Fig1a: return "Fig1a";
    case BaseGraphId::Fig1b: return "Fig1b";
    case BaseGraphId::Fig1c: return "Fig1c";
    case BaseGraphId::Fig1d: return "Fig1d";
    case BaseGraphId::Fig2a: return "Fig2a";
    case BaseGraphId::Fig2b: return "Fig2b";
    case BaseGraphId::Fig2c: return "Fig2c";
    case BaseGraphId::WheelEven: return "WheelEven";
    case BaseGraphId::K4minus: return "K4minus";
    case BaseGraphId::K5: return "K5";
    case BaseGraphId::K5minus: return "K5minus";
    case BaseGraphId::K44: return "K44";
  }
  return "?";
}

inline std::optional<BaseGraphId> base_graph_from_string(std::string_view name) {
  for (auto id : {BaseGraphId::Fig1a, BaseGraphId::Fig1b, BaseGraphId::Fig1c, BaseGraphId::Fig1d, BaseGraphId::Fig2a,
                  BaseGraphId::Fig2b, BaseGraphId::Fig2c, BaseGraphId::WheelEven, BaseGraphId::K4minus,
                  BaseGraphId::K5, BaseGraphId::K5minus, BaseGraphId::K44})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

/// Base graphs carrying a Z3-connectivity claim, used for embedding search.
/// Larger graphs first so that one contraction swallows more.
inline const std::vector<BaseGraphId>& z3_catalog() {
  static const std::vector<BaseGraphId> ids = {BaseGraphId::Fig1c, BaseGraphId::Fig1d, BaseGraphId::Fig2b,
                                               BaseGraphId::Fig2c, BaseGraphId::K44,   BaseGraphId::Fig1b,
                                               BaseGraphId::Fig2a, BaseGraphId::Fig1a, BaseGraphId::K5,
                                               BaseGraphId::K5minus};
  return ids;
}

}  // namespace z3real
