#pragma once

// Realizations of a degree sequence: one by the residual construction, or
// all of them by backtracking, optionally one per isomorphism class.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "z3real/graph.hpp"
#include "z3real/sequence.hpp"
#include "z3real/verifier.hpp"

namespace z3real {

inline constexpr int kEnumerationCap = 12;

/// Connects the smallest remaining vertex to the highest remaining ones.
/// Vertex i receives the i-th entry of the sorted sequence.
inline Multigraph hakimi_realize(const DegreeSequence& seq) {
  if (!is_graphic(seq)) throw std::invalid_argument("sequence " + to_string(seq) + " is not graphic");
  const int n = seq.size();
  std::vector<int> r = seq.degrees();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> edges;
  while (!order.empty()) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return r[static_cast<std::size_t>(a)] > r[static_cast<std::size_t>(b)];
    });
    const int last = order.back();
    order.pop_back();
    const int k = r[static_cast<std::size_t>(last)];
    for (int i = 0; i < k; ++i) {
      const int v = order[static_cast<std::size_t>(i)];
      edges.push_back({std::min(v, last), std::max(v, last)});
      --r[static_cast<std::size_t>(v)];
    }
    r[static_cast<std::size_t>(last)] = 0;
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.tail, a.head) < std::pair(b.tail, b.head); });
  return build_graph(n, std::move(edges));
}

namespace detail {

/// Canonical form by equitable refinement and individualisation, keeping
/// the lexicographically largest leaf. Automorphisms found at leaves prune
/// equivalent branches.
class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g) : n_(g.vertex_count()), mult_(g.multiplicity_matrix()) {}

  std::string run() {
    if (n_ == 0) return "0:";
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    search(cells);
    return std::to_string(n_) + ":" + best_key_;
  }

 private:
  using Partition = std::vector<std::vector<int>>;

  int count(int v, const std::vector<int>& cell) const {
    int c = 0;
    for (int u : cell) c += mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    return c;
  }

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        const std::vector<int> splitter = p[s];
        Partition out;
        for (const auto& cell : p) {
          if (cell.size() == 1) {
            out.push_back(cell);
            continue;
          }
          std::vector<std::pair<int, int>> keyed;
          for (int v : cell) keyed.push_back({count(v, splitter), v});
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          std::vector<int> cur{keyed[0].second};
          for (std::size_t i = 1; i < keyed.size(); ++i) {
            if (keyed[i].first != keyed[i - 1].first) {
              out.push_back(cur);
              cur.clear();
              changed = true;
            }
            cur.push_back(keyed[i].second);
          }
          out.push_back(cur);
        }
        p = std::move(out);
      }
    }
  }

  bool fixes_prefix(const std::vector<int>& gamma, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i)
      if (gamma[static_cast<std::size_t>(path_[i])] != path_[i]) return false;
    return true;
  }

  bool equivalent_to_explored(int v, const std::vector<int>& explored, std::size_t depth) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& gamma : autos_) {
      if (!fixes_prefix(gamma, depth)) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    for (int w : explored)
      if (find(w) == find(v)) return true;
    return false;
  }

  // Returns the depth to resume at after an automorphism, or -1.
  int search(Partition p) {
    refine(p);
    const std::size_t depth = path_.size();
    if (p.size() == static_cast<std::size_t>(n_)) return leaf(p);
    std::size_t target = 0;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1 && p[i].size() < best_size) {
        best_size = p[i].size();
        target = i;
      }
    std::vector<int> cell = p[target];
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    for (int v : cell) {
      if (equivalent_to_explored(v, explored, depth)) continue;
      explored.push_back(v);
      Partition child;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : p[i])
          if (u != v) rest.push_back(u);
        child.push_back(rest);
      }
      path_.push_back(v);
      const int r = search(std::move(child));
      path_.pop_back();
      if (r >= 0 && static_cast<std::size_t>(r) < depth) return r;
    }
    return -1;
  }

  int leaf(const Partition& p) {
    std::vector<int> inv(static_cast<std::size_t>(n_));  // position -> vertex
    for (std::size_t i = 0; i < p.size(); ++i) inv[i] = p[i][0];
    std::string key;
    key.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        key.push_back(static_cast<char>('0' + mult_[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])]
                                                   [static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])]));
    if (!have_leaf_) {
      have_leaf_ = true;
      first_key_ = best_key_ = key;
      first_inv_ = best_inv_ = inv;
      first_path_ = best_path_ = path_;
      return -1;
    }
    auto record = [&](const std::vector<int>& other_inv, const std::vector<int>& other_path) {
      // gamma maps this leaf's vertices onto the other leaf's
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int pos = 0; pos < n_; ++pos)
        gamma[static_cast<std::size_t>(inv[static_cast<std::size_t>(pos)])] = other_inv[static_cast<std::size_t>(pos)];
      autos_.push_back(gamma);
      std::size_t d = 0;
      while (d < other_path.size() && d < path_.size() && other_path[d] == path_[d]) ++d;
      return static_cast<int>(d);
    };
    if (key == first_key_) return record(first_inv_, first_path_);
    if (key == best_key_) return record(best_inv_, best_path_);
    if (key > best_key_) {
      best_key_ = key;
      best_inv_ = inv;
      best_path_ = path_;
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> path_;
  bool have_leaf_ = false;
  std::string first_key_, best_key_;
  std::vector<int> first_inv_, best_inv_, first_path_, best_path_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

/// Isomorphism invariant string; equal strings iff isomorphic multigraphs.
inline std::string canonical_form(const Multigraph& g) { return detail::Canonizer(g).run(); }

struct EnumerateOptions {
  long long limit = std::numeric_limits<long long>::max();
  bool dedup = false;
};

/// Labelled realizations in backtracking order: vertex i (degree d_i) picks
/// its later neighbours as a combination, pruned by Erdos-Gallai on the rest.
class RealizationStream {
 public:
  RealizationStream(const DegreeSequence& seq, EnumerateOptions opt = {})
      : n_(seq.size()), opt_(opt), residual_(seq.degrees()) {
    if (n_ > kEnumerationCap) throw CapExceeded(n_, kEnumerationCap, "enumeration");
    exhausted_ = !is_graphic(seq);
    if (!exhausted_ && n_ > 0) push_frame(0);
    if (n_ == 0) exhausted_ = true;
  }

  std::optional<Multigraph> next() {
    while (!exhausted_ && emitted_ < opt_.limit) {
      auto g = advance();
      if (!g) {
        exhausted_ = true;
        break;
      }
      ++generated_;
      if (opt_.dedup && !seen_.insert(canonical_form(*g)).second) continue;
      ++emitted_;
      return g;
    }
    return std::nullopt;
  }

  /// Labelled graphs produced so far, before dedup.
  long long generated() const { return generated_; }
  long long emitted() const { return emitted_; }

 private:
  struct Frame {
    int vertex;
    int k;
    std::vector<int> candidates;
    std::vector<int> choice;  // indices into candidates
    bool applied = false;
    bool started = false;
  };

  void push_frame(int v) {
    Frame f;
    f.vertex = v;
    f.k = residual_[static_cast<std::size_t>(v)];
    for (int j = v + 1; j < n_; ++j)
      if (residual_[static_cast<std::size_t>(j)] > 0) f.candidates.push_back(j);
    stack_.push_back(std::move(f));
  }

  void undo(Frame& f) {
    if (!f.applied) return;
    for (int idx : f.choice) {
      ++residual_[static_cast<std::size_t>(f.candidates[static_cast<std::size_t>(idx)])];
      edges_.pop_back();
    }
    residual_[static_cast<std::size_t>(f.vertex)] = f.k;
    f.applied = false;
  }

  static bool next_combination(std::vector<int>& c, int total) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == total - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  }

  bool rest_graphic(int from) const {
    std::vector<int> rest(residual_.begin() + from, residual_.end());
    return erdos_gallai(std::move(rest));
  }

  std::optional<Multigraph> advance() {
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      undo(f);
      const int total = static_cast<int>(f.candidates.size());
      bool have = false;
      if (!f.started) {
        f.started = true;
        if (f.k <= total) {
          f.choice.resize(static_cast<std::size_t>(f.k));
          for (int i = 0; i < f.k; ++i) f.choice[static_cast<std::size_t>(i)] = i;
          have = true;
        }
      } else {
        have = next_combination(f.choice, total);
      }
      if (!have) {
        stack_.pop_back();
        continue;
      }
      for (int idx : f.choice) {
        const int j = f.candidates[static_cast<std::size_t>(idx)];
        --residual_[static_cast<std::size_t>(j)];
        edges_.push_back({f.vertex, j});
      }
      residual_[static_cast<std::size_t>(f.vertex)] = 0;
      f.applied = true;
      if (!rest_graphic(f.vertex + 1)) continue;
      if (f.vertex + 1 == n_) return build_graph(n_, edges_);
      push_frame(f.vertex + 1);
    }
    return std::nullopt;
  }

  int n_;
  EnumerateOptions opt_;
  std::vector<int> residual_;
  std::vector<Edge> edges_;
  std::vector<Frame> stack_;
  std::set<std::string> seen_;
  long long generated_ = 0;
  long long emitted_ = 0;
  bool exhausted_ = false;
};

inline RealizationStream all_realizations(const DegreeSequence& seq, EnumerateOptions opt = {}) {
  return RealizationStream(seq, opt);
}

/// One representative per isomorphism class.
inline std::vector<Multigraph> realization_classes(const DegreeSequence& seq) {
  std::vector<Multigraph> out;
  auto stream = all_realizations(seq, {std::numeric_limits<long long>::max(), true});
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

/// True iff no realization of an exception sequence is Z3-connected.
inline bool verify_exception(const DegreeSequence& seq, int cap = kDefaultOracleCap) {
  if (!classify(seq).is_exception())
    throw std::invalid_argument("sequence " + to_string(seq) + " is not an exception family");
  if (seq.size() > cap) throw CapExceeded(seq.size(), cap);
  for (const auto& g : realization_classes(seq))
    if (is_z3_connected(g, cap)) return false;
  return true;
}

}  // namespace z3real
