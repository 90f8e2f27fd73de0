#pragma once

// Exact Z3 decision procedures. The reachable boundaries of nowhere-zero
// Z3 flows are computed by a dynamic program over Z3^(n-1): the last vertex
// is implicit since every boundary sums to zero.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "z3real/graph.hpp"

namespace z3real {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int n, int cap, const std::string& what = "oracle")
      : std::runtime_error("input has " + std::to_string(n) + " vertices; " + what + " cap is " +
                           std::to_string(cap)) {}
};

inline constexpr int kDefaultOracleCap = 14;

/// Vertex labelling by Z3 with total 0.
struct ZeroSumFunction {
  std::vector<int> values;

  ZeroSumFunction() = default;
  explicit ZeroSumFunction(std::vector<int> v) : values(std::move(v)) {
    long long total = 0;
    for (int& x : values) {
      x = ((x % 3) + 3) % 3;
      total += x;
    }
    if (total % 3 != 0) throw std::invalid_argument("boundary values do not sum to 0 mod 3");
  }
  friend bool operator==(const ZeroSumFunction&, const ZeroSumFunction&) = default;
};

/// Edge index -> {1,2}, relative to the reference orientation.
using FlowAssignment = std::vector<int>;

/// reversed[e] != 0 flips edge e against its reference direction.
struct Orientation {
  std::vector<char> reversed;
};

inline ZeroSumFunction boundary(const Multigraph& g, const FlowAssignment& f) {
  if (static_cast<int>(f.size()) != g.edge_count())
    throw std::invalid_argument("flow has " + std::to_string(f.size()) + " values for " +
                                std::to_string(g.edge_count()) + " edges");
  std::vector<int> b(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const int a = ((f[static_cast<std::size_t>(i)] % 3) + 3) % 3;
    if (a == 0) throw std::invalid_argument("flow value 0 on edge " + std::to_string(i));
    const auto& e = g.edge(i);
    b[static_cast<std::size_t>(e.tail)] = (b[static_cast<std::size_t>(e.tail)] + a) % 3;
    b[static_cast<std::size_t>(e.head)] = (b[static_cast<std::size_t>(e.head)] + 3 - a) % 3;
  }
  return ZeroSumFunction(std::move(b));
}

namespace detail {

class BoundaryDP {
 public:
  explicit BoundaryDP(int n) : dims_(n - 1) {
    pow3_.assign(static_cast<std::size_t>(dims_) + 1, 1);
    for (int i = 1; i <= dims_; ++i) pow3_[static_cast<std::size_t>(i)] = pow3_[static_cast<std::size_t>(i - 1)] * 3;
    size_ = pow3_[static_cast<std::size_t>(dims_)];
  }

  std::size_t size() const { return size_; }

  std::size_t index_of(const std::vector<int>& b) const {
    std::size_t idx = 0;
    for (int v = 0; v < dims_; ++v) idx += static_cast<std::size_t>(b[static_cast<std::size_t>(v)]) * pow3_[static_cast<std::size_t>(v)];
    return idx;
  }

  /// out = (in + d) U (in + 2d), d = chi_t - chi_h. Returns |out|.
  std::size_t step(const std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out, int t, int h) const {
    out.assign(size_, 0);
    std::vector<int> digit(static_cast<std::size_t>(dims_) + 1, 0);
    std::size_t count = 0;
    const bool t_free = t < dims_;
    const bool h_free = h < dims_;
    const long long pt = t_free ? static_cast<long long>(pow3_[static_cast<std::size_t>(t)]) : 0;
    const long long ph = h_free ? static_cast<long long>(pow3_[static_cast<std::size_t>(h)]) : 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if (in[i]) {
        const int dt = t_free ? digit[static_cast<std::size_t>(t)] : 0;
        const int dh = h_free ? digit[static_cast<std::size_t>(h)] : 0;
        for (int a = 1; a <= 2; ++a) {
          long long j = static_cast<long long>(i);
          if (t_free) j += (((dt + a) % 3) - dt) * pt;
          if (h_free) j += (((dh + 3 - a) % 3) - dh) * ph;
          auto& cell = out[static_cast<std::size_t>(j)];
          if (!cell) {
            cell = 1;
            ++count;
          }
        }
      }
      for (int k = 0; k < dims_; ++k) {
        if (++digit[static_cast<std::size_t>(k)] < 3) break;
        digit[static_cast<std::size_t>(k)] = 0;
      }
    }
    return count;
  }

  /// Predecessor of state j across an edge carrying value a.
  std::size_t back(std::size_t j, int t, int h, int a) const {
    long long i = static_cast<long long>(j);
    if (t < dims_) {
      const int d = digit_at(j, t);
      i += (((d + 3 - a) % 3) - d) * static_cast<long long>(pow3_[static_cast<std::size_t>(t)]);
    }
    if (h < dims_) {
      const int d = digit_at(j, h);
      i += (((d + a) % 3) - d) * static_cast<long long>(pow3_[static_cast<std::size_t>(h)]);
    }
    return static_cast<std::size_t>(i);
  }

 private:
  int digit_at(std::size_t idx, int v) const {
    return static_cast<int>((idx / pow3_[static_cast<std::size_t>(v)]) % 3);
  }

  int dims_;
  std::size_t size_ = 1;
  std::vector<std::size_t> pow3_;
};

inline void check_cap(const Multigraph& g, int cap) {
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  if (g.vertex_count() > cap) throw CapExceeded(g.vertex_count(), cap);
}

}  // namespace detail

/// Full reach set as a 0/1 vector over Z3^(n-1), digit v = b(v).
inline std::vector<std::uint8_t> boundary_reach_set(const Multigraph& g, int cap = kDefaultOracleCap) {
  detail::check_cap(g, cap);
  detail::BoundaryDP dp(g.vertex_count());
  std::vector<std::uint8_t> cur(dp.size(), 0), next;
  cur[0] = 1;
  for (const auto& e : g.edges()) {
    dp.step(cur, next, e.tail, e.head);
    cur.swap(next);
  }
  return cur;
}

inline bool is_z3_connected(const Multigraph& g, int cap = kDefaultOracleCap) {
  detail::check_cap(g, cap);
  if (g.vertex_count() == 1) return true;
  if (!is_connected(g)) return false;
  detail::BoundaryDP dp(g.vertex_count());
  std::vector<std::uint8_t> cur(dp.size(), 0), next;
  cur[0] = 1;
  for (const auto& e : g.edges()) {
    if (dp.step(cur, next, e.tail, e.head) == dp.size()) return true;
    cur.swap(next);
  }
  return false;
}

inline std::optional<FlowAssignment> solve_boundary(const Multigraph& g, const ZeroSumFunction& b,
                                                    int cap = kDefaultOracleCap) {
  detail::check_cap(g, cap);
  if (static_cast<int>(b.values.size()) != g.vertex_count())
    throw std::invalid_argument("boundary has wrong length");
  long long total = 0;
  for (int x : b.values) total += x;
  if (total % 3 != 0) throw std::invalid_argument("boundary is not zero-sum");
  detail::BoundaryDP dp(g.vertex_count());
  const int m = g.edge_count();
  std::vector<std::vector<std::uint8_t>> layers(static_cast<std::size_t>(m) + 1);
  layers[0].assign(dp.size(), 0);
  layers[0][0] = 1;
  for (int i = 0; i < m; ++i)
    dp.step(layers[static_cast<std::size_t>(i)], layers[static_cast<std::size_t>(i) + 1], g.edge(i).tail, g.edge(i).head);
  std::size_t state = dp.index_of(b.values);
  if (!layers[static_cast<std::size_t>(m)][state]) return std::nullopt;
  FlowAssignment f(static_cast<std::size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    const auto& e = g.edge(i);
    for (int a = 1; a <= 2; ++a) {
      const std::size_t prev = dp.back(state, e.tail, e.head, a);
      if (layers[static_cast<std::size_t>(i)][prev]) {
        f[static_cast<std::size_t>(i)] = a;
        state = prev;
        break;
      }
    }
    if (f[static_cast<std::size_t>(i)] == 0) throw std::logic_error("boundary DP backtrack failed");
  }
  return f;
}

inline bool is_3_flowable(const Multigraph& g, int cap = kDefaultOracleCap) {
  detail::check_cap(g, cap);
  return solve_boundary(g, ZeroSumFunction(std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)), cap)
      .has_value();
}

/// Out-degree minus in-degree divisible by 3 everywhere. A flow of value
/// 2 = -1 is the same as reversing the edge with value 1.
inline std::optional<Orientation> has_modular_3_orientation(const Multigraph& g, int cap = kDefaultOracleCap) {
  detail::check_cap(g, cap);
  const auto f = solve_boundary(
      g, ZeroSumFunction(std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)), cap);
  if (!f) return std::nullopt;
  Orientation o;
  o.reversed.resize(f->size());
  std::vector<int> excess(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < f->size(); ++i) {
    o.reversed[i] = (*f)[i] == 2;
    const auto& e = g.edge(static_cast<int>(i));
    const int from = o.reversed[i] ? e.head : e.tail;
    const int to = o.reversed[i] ? e.tail : e.head;
    ++excess[static_cast<std::size_t>(from)];
    --excess[static_cast<std::size_t>(to)];
  }
  for (int x : excess)
    if (x % 3 != 0) throw std::logic_error("orientation check failed");
  return o;
}

}  // namespace z3real
