#pragma once

// Explicit Z3-connected realizations, dispatched on the classification
// route. Output graphs are labelled so that vertex i has degree d_{i+1};
// edges are (smaller, larger) pairs in lexicographic order.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "z3real/catalog.hpp"
#include "z3real/enumerate.hpp"
#include "z3real/graph.hpp"
#include "z3real/reducer.hpp"
#include "z3real/sequence.hpp"
#include "z3real/verifier.hpp"

namespace z3real {

/// A construction produced a wrong graph. Always a bug.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// realize_family called on a sequence outside the family.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RealizeOptions {
  int oracle_cap = kDefaultOracleCap;
  bool search_out_of_coverage = false;
  int search_n_max = 12;
  long long search_limit = 1'000'000;
  /// Skip certificate/oracle at the top level (callers that verify themselves).
  bool prove = true;
  CertifyOptions certify;
};

enum class ResultKind { Realized, Exception, NotGraphic, Unsupported };
enum class ProofKind { None, Certificate, Oracle, Unverified };

inline const char* to_string(ResultKind k) {
  switch (k) {
    case ResultKind::Realized: return "Realized";
    case ResultKind::Exception: return "Exception";
    case ResultKind::NotGraphic: return "NotGraphic";
    case ResultKind::Unsupported: return "Unsupported";
  }
  return "?";
}

inline const char* to_string(ProofKind k) {
  switch (k) {
    case ProofKind::None: return "none";
    case ProofKind::Certificate: return "certificate";
    case ProofKind::Oracle: return "oracle";
    case ProofKind::Unverified: return "unverified";
  }
  return "?";
}

struct RealizationResult {
  ResultKind kind = ResultKind::Unsupported;
  Classification classification;
  Multigraph graph;
  ProofKind proof = ProofKind::None;
  std::optional<Certificate> certificate;
  std::vector<LiftHint> lifts;
  std::vector<std::string> trace;
  std::string reason;

  bool realized() const { return kind == ResultKind::Realized; }
};

/// Graph plus lifts that, applied first, let the reducer finish the proof.
struct Built {
  Multigraph graph;
  std::vector<LiftHint> lifts;
};

namespace detail {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relabels by degree (descending, stable in creation order) and sorts edges.
inline Built normalize(int n, const std::vector<Edge>& edges, const std::vector<LiftHint>& lifts) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    ++deg[static_cast<std::size_t>(e.tail)];
    ++deg[static_cast<std::size_t>(e.head)];
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  auto lab = [&](int v) { return label[static_cast<std::size_t>(v)]; };
  std::vector<Edge> out;
  for (const auto& e : edges) {
    const int a = lab(e.tail), b = lab(e.head);
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.tail, x.head) < std::pair(y.tail, y.head); });
  std::vector<LiftHint> hints;
  for (const auto& l : lifts) hints.push_back({lab(l.u), lab(l.v), lab(l.w)});
  return {build_graph(n, std::move(out)), std::move(hints)};
}

class Assembler {
 public:
  struct WheelIds {
    int center;
    std::vector<int> rim;
  };

  int vertex() { return n_++; }

  std::vector<int> vertices(int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.push_back(vertex());
    return out;
  }

  void edge(int a, int b) { edges_.push_back({a, b}); }

  void lift(int u, int v, int w) { lifts_.push_back({u, v, w}); }

  /// Rim of length k around an existing or new center.
  WheelIds wheel(int k, std::optional<int> center = std::nullopt) {
    WheelIds w{center ? *center : vertex(), vertices(k)};
    for (int r : w.rim) edge(w.center, r);
    for (int i = 0; i < k; ++i) edge(w.rim[static_cast<std::size_t>(i)], w.rim[static_cast<std::size_t>((i + 1) % k)]);
    return w;
  }

  std::vector<int> graph(const Multigraph& g) {
    auto ids = vertices(g.vertex_count());
    for (const auto& e : g.edges()) edge(ids[static_cast<std::size_t>(e.tail)], ids[static_cast<std::size_t>(e.head)]);
    return ids;
  }

  std::vector<int> built(const Built& b) {
    auto ids = graph(b.graph);
    for (const auto& l : b.lifts)
      lift(ids[static_cast<std::size_t>(l.u)], ids[static_cast<std::size_t>(l.v)], ids[static_cast<std::size_t>(l.w)]);
    return ids;
  }

  /// Perfect matching on consecutive pairs.
  void pair_up(const std::vector<int>& xs) {
    if (xs.size() % 2 != 0) throw ConstructionError("matching on an odd set");
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) edge(xs[i], xs[i + 1]);
  }

  Built finish() const { return normalize(n_, edges_, lifts_); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<LiftHint> lifts_;
};

inline std::vector<int> slice(const std::vector<int>& xs, std::size_t from, std::size_t to) {
  return {xs.begin() + static_cast<std::ptrdiff_t>(from), xs.begin() + static_cast<std::ptrdiff_t>(to)};
}

inline DegreeSequence seq_of(std::vector<int> heads, int value, int count, int threes) {
  heads.insert(heads.end(), static_cast<std::size_t>(count), value);
  heads.insert(heads.end(), static_cast<std::size_t>(threes), 3);
  return DegreeSequence(std::move(heads));
}

class Builder {
 public:
  explicit Builder(const RealizeOptions& opt) : opt_(opt) {}

  std::vector<std::string> trace;

  Built build(const DegreeSequence& seq, int depth) {
    const auto c = classify(seq);
    note(depth, to_string(seq) + ": " + to_string(c.tag) + (c.route ? std::string(" ") + to_string(*c.route) : ""));
    if (c.tag == ClassTag::OutOfCoverage) {
      if (opt_.search_out_of_coverage) return search(seq, depth, "outside the covered region");
      throw UnsupportedError(to_string(seq) + " is outside the covered region");
    }
    if (c.tag != ClassTag::Covered) throw UnsupportedError(to_string(seq) + " has no Z3-connected realization");
    return by_route(seq, *c.route, depth);
  }

  Built by_route(const DegreeSequence& seq, Route route, int depth) {
    Built b;
    switch (route) {
      case Route::T12: b = t12(seq, depth); break;
      case Route::L41: b = l41(seq, depth); break;
      case Route::T14: b = t14(seq, depth); break;
      case Route::T15: b = t15(seq, depth); break;
    }
    check(b, seq);
    return b;
  }

  // families --------------------------------------------------------------

  Built l31i(int n, int depth) {
    if (n < 6) throw HypothesisError("(n-2,4,3^(n-2)) needs n >= 6");
    if (n == 6) return base(BaseGraphId::Fig1a, depth, "L31I");
    if (n == 7) return base(BaseGraphId::Fig1b, depth, "L31I");
    if (n == 8) return base(BaseGraphId::Fig1c, depth, "L31I");
    Assembler a;
    if (n % 2 == 1) {
      note(depth, "L31I n=" + std::to_string(n) + ": W" + std::to_string(n - 5) + " + K4minus joined to the center");
      auto w = a.wheel(n - 5);
      auto k = a.graph(base_graph(BaseGraphId::K4minus));
      for (int i = 0; i < 3; ++i) a.edge(k[static_cast<std::size_t>(i)], w.center);
    } else {
      note(depth, "L31I n=" + std::to_string(n) + ": Fig1a with W" + std::to_string(n - 6) + " on its first vertex");
      auto f = a.graph(base_graph(BaseGraphId::Fig1a));
      a.wheel(n - 6, f[0]);
    }
    return a.finish();
  }

  Built l31ii(int n, int depth) {
    if (n < 5) throw HypothesisError("(4^(n-4),3^4) needs n >= 5");
    if (n == 5) {
      note(depth, "L31II n=5: W4");
      return normalize_graph(wheel(4));
    }
    if (n == 6) return base(BaseGraphId::Fig1a, depth, "L31II");
    if (n == 7) return base(BaseGraphId::Fig2a, depth, "L31II");
    if (n == 8) return base(BaseGraphId::Fig2c, depth, "L31II");
    Assembler a;
    if (n == 9) {
      note(depth, "L31II n=9: W4 + K4minus, edges u1v2 u2v4 u3v1");
      auto w = a.wheel(4);
      auto k = a.graph(base_graph(BaseGraphId::K4minus));  // v2=k0, v1=k1, v4=k2, v3=k3
      a.edge(w.rim[0], k[0]);
      a.edge(w.rim[1], k[2]);
      a.edge(w.rim[2], k[1]);
      return a.finish();
    }
    const int k = n / 2;
    note(depth, "L31II n=" + std::to_string(n) + ": join halves on " + std::to_string(k) + " and " +
                    std::to_string(n - k) + " vertices by two 3-vertex pairs");
    auto g1 = a.built(l31ii(k, depth + 1));
    auto g2 = a.built(l31ii(n - k, depth + 1));
    a.edge(g1[static_cast<std::size_t>(k - 4)], g2[static_cast<std::size_t>(n - k - 4)]);
    a.edge(g1[static_cast<std::size_t>(k - 3)], g2[static_cast<std::size_t>(n - k - 3)]);
    return a.finish();
  }

  Built l31iii(int n, int depth) {
    if (n < 7) throw HypothesisError("(5,4^(n-6),3^5) needs n >= 7");
    if (n == 7) return base(BaseGraphId::Fig1b, depth, "L31III");
    if (n == 8) return base(BaseGraphId::Fig2b, depth, "L31III");
    Assembler a;
    if (n == 9) {
      note(depth, "L31III n=9: W4 + K4minus, edges u0v2 u1v1 u2v4");
      auto w = a.wheel(4);
      auto k = a.graph(base_graph(BaseGraphId::K4minus));
      a.edge(w.center, k[0]);
      a.edge(w.rim[0], k[1]);
      a.edge(w.rim[1], k[2]);
      return a.finish();
    }
    const int k = n / 2;
    note(depth, "L31III n=" + std::to_string(n) + ": join halves on " + std::to_string(k) + " and " +
                    std::to_string(n - k) + " vertices (4-vertex and 3-vertex to two 3-vertices)");
    auto g1 = a.built(l31ii(k, depth + 1));
    auto g2 = a.built(l31ii(n - k, depth + 1));
    a.edge(g1[0], g2[static_cast<std::size_t>(n - k - 4)]);
    a.edge(g1[static_cast<std::size_t>(k - 4)], g2[static_cast<std::size_t>(n - k - 3)]);
    return a.finish();
  }

  Built t12(const DegreeSequence& seq, int depth) {
    if (seq == seq_of({4}, 3, 4, 0)) {
      note(depth, "T12: W4");
      return normalize_graph(wheel(4));
    }
    return search(seq, depth, "d1=n-1");
  }

  Built l41(const DegreeSequence& seq, int depth) {
    const int n = seq.size();
    if (seq.d(1) != n - 2) throw HypothesisError("L41 needs d1 = n-2");
    if (seq.d(n - 3) >= 4) return prior(seq, depth);
    if (seq.d(3) >= 4) return peel(seq, depth, "L41 d3>=4");
    const int d2 = seq.d(2);
    if (d2 == 4) {
      note(depth, "L41: (n-2,4,3^(n-2))");
      return l31i(n, depth);
    }
    Assembler a;
    if (n % 2 == 0) {
      note(depth, "L41 n even, d2=" + std::to_string(d2) + ": W" + std::to_string(n - d2 + 2) + ", |S|=" +
                      std::to_string(d2 - 4) + ", x on v2 s1 s2");
      auto w = a.wheel(n - d2 + 2);
      const int v2 = w.rim[0];
      auto s = a.vertices(d2 - 4);
      for (int x : s) {
        a.edge(w.center, x);
        a.edge(v2, x);
      }
      a.pair_up(slice(s, 2, s.size()));
      const int x = a.vertex();
      a.edge(x, v2);
      a.edge(x, s[0]);
      a.edge(x, s[1]);
    } else {
      note(depth, "L41 n odd, d2=" + std::to_string(d2) + ": W" + std::to_string(n - d2 + 1) + ", |S|=" +
                      std::to_string(d2 - 3) + ", x on s1 s2 s3");
      auto w = a.wheel(n - d2 + 1);
      const int v2 = w.rim[0];
      auto s = a.vertices(d2 - 3);
      for (int x : s) {
        a.edge(w.center, x);
        a.edge(v2, x);
      }
      const int x = a.vertex();
      for (int i = 0; i < 3; ++i) a.edge(x, s[static_cast<std::size_t>(i)]);
      a.pair_up(slice(s, 3, s.size()));
    }
    return a.finish();
  }

  Built t14(const DegreeSequence& seq, int depth) {
    const int n = seq.size();
    if (seq.d(1) != n - 3) throw HypothesisError("T14 needs d1 = n-3");
    if (seq.d(n - 3) >= 4) return prior(seq, depth);
    const int d2 = seq.d(2), d3 = seq.d(3);
    if (d3 >= 5) return peel(seq, depth, "T14 d3>=5");
    Assembler a;
    if (d3 == 3) {
      if (d2 == 5) {
        if (n == 8) return base(BaseGraphId::Fig1d, depth, "T14");
        if (n % 2 == 1) {
          note(depth, "T14 d2=5 n odd: W" + std::to_string(n - 5) + ", S={s1,s2}, x1 x2 on v2 s1 s2");
          auto w = a.wheel(n - 5);
          const int v2 = w.rim[0];
          auto s = a.vertices(2);
          for (int x : s) a.edge(w.center, x);
          for (int i = 0; i < 2; ++i) {
            const int x = a.vertex();
            a.edge(x, v2);
            a.edge(x, s[0]);
            a.edge(x, s[1]);
          }
        } else {
          note(depth, "T14 d2=5 n even: W" + std::to_string(n - 6) + ", S={s1,s2,s3}, v2s1, x1 on v2 s2 s3, x2 on S");
          auto w = a.wheel(n - 6);
          const int v2 = w.rim[0];
          auto s = a.vertices(3);
          for (int x : s) a.edge(w.center, x);
          a.edge(v2, s[0]);
          const int x1 = a.vertex();
          a.edge(x1, v2);
          a.edge(x1, s[1]);
          a.edge(x1, s[2]);
          const int x2 = a.vertex();
          for (int x : s) a.edge(x2, x);
        }
        return a.finish();
      }
      if (d2 < 7 || d2 % 2 == 0) throw HypothesisError("T14 with d3=3 needs odd d2 >= 5");
      if (n % 2 == 0) {
        note(depth, "T14 d2=" + std::to_string(d2) + " n even: W" + std::to_string(n - d2 + 1) + ", |S|=" +
                        std::to_string(d2 - 4) + ", x1 x2 on v2 and s");
        auto w = a.wheel(n - d2 + 1);
        const int v2 = w.rim[0];
        auto s = a.vertices(d2 - 4);
        for (int x : s) a.edge(w.center, x);
        const int s0 = s[0];
        auto s1 = slice(s, 1, s.size());
        for (int x : s1) a.edge(v2, x);
        a.pair_up(slice(s1, 2, s1.size()));
        for (int i = 0; i < 2; ++i) {
          const int x = a.vertex();
          a.edge(x, v2);
          a.edge(x, s1[static_cast<std::size_t>(i)]);
          a.edge(x, s0);
        }
      } else {
        note(depth, "T14 d2=" + std::to_string(d2) + " n odd: W" + std::to_string(n - d2) + ", |S|=" +
                        std::to_string(d2 - 3) + ", x1 x2 on v2 s3 s4");
        auto w = a.wheel(n - d2);
        const int v2 = w.rim[0];
        auto s = a.vertices(d2 - 3);
        for (int x : s) a.edge(w.center, x);
        auto s1 = slice(s, 2, s.size());
        for (int x : s1) a.edge(v2, x);
        for (int i = 0; i < 2; ++i) {
          const int x = a.vertex();
          a.edge(x, v2);
          a.edge(x, s[0]);
          a.edge(x, s[1]);
        }
        a.pair_up(s1);
      }
      return a.finish();
    }
    // d3 == 4
    if (d2 >= 5) return peel(seq, depth, "T14 d3=4 d2>=5");
    const int fours = seq.count(4) - (seq.d(1) == 4 ? 1 : 0);
    if (fours >= 4) return peel(seq, depth, "T14 (n-3,4^(i-1),3^(n-i)) with i>=5");
    if (n == 7) return base(BaseGraphId::Fig2a, depth, "T14");
    if (n == 8) return base(BaseGraphId::Fig2b, depth, "T14");
    if (n % 2 == 1) {
      note(depth, "T14 (n-3,4^2,3^(n-3)) n odd: W" + std::to_string(n - 5) + ", x1 on v2 S, x2 on v3 S");
      auto w = a.wheel(n - 5);
      auto s = a.vertices(2);
      for (int x : s) a.edge(w.center, x);
      for (int i = 0; i < 2; ++i) {
        const int x = a.vertex();
        a.edge(x, w.rim[static_cast<std::size_t>(i)]);
        a.edge(x, s[0]);
        a.edge(x, s[1]);
      }
    } else {
      note(depth, "T14 (n-3,4^2,3^(n-3)) n even: W" + std::to_string(n - 6) + ", v2s1, x1 on v3 s2 s3, x2 on S");
      auto w = a.wheel(n - 6);
      auto s = a.vertices(3);
      for (int x : s) a.edge(w.center, x);
      a.edge(w.rim[0], s[0]);
      const int x1 = a.vertex();
      a.edge(x1, w.rim[1]);
      a.edge(x1, s[1]);
      a.edge(x1, s[2]);
      const int x2 = a.vertex();
      for (int x : s) a.edge(x2, x);
    }
    return a.finish();
  }

  Built t15(const DegreeSequence& seq, int depth) {
    const int n = seq.size();
    if (seq.d(1) > n - 4 || n < 6 || seq.d(n - 5) < 4) throw HypothesisError("T15 needs d1 <= n-4 and d_(n-5) >= 4");
    if (seq.d(n - 3) >= 4) return prior(seq, depth);
    const int d1 = seq.d(1);
    if (seq.d(n - 4) >= 4) {
      if (seq.d(n - 4) >= 5) return peel(seq, depth, "T15 d_(n-4)>=5");
      if (d1 == 4) {
        note(depth, "T15: (4^(n-4),3^4)");
        return l31ii(n, depth);
      }
      if (seq.d(2) >= 5) return peel(seq, depth, "T15 d_(n-4)=4 d2>=5");
      return squared(seq, depth);
    }
    if (seq.d(3) >= 5) return peel(seq, depth, "T15 d3>=5");
    if (seq.d(2) >= 5) return peel(seq, depth, "T15 d2>=5");
    if (d1 == 5) {
      note(depth, "T15: (5,4^(n-6),3^5)");
      return l31iii(n, depth);
    }
    return inverse_lifts(seq, depth);
  }

  /// (d1, 4^(n-5), 3^4) with even d1 >= 6.
  Built squared(const DegreeSequence& seq, int depth) {
    const int n = seq.size();
    const int d1 = seq.d(1);
    const int m = n - d1 - 1;
    Assembler a;
    if (m == 3) {
      note(depth, "T15 (d1,4^(n-5),3^4) d1=n-4: W" + std::to_string(d1) + " + path x1x2x3, " +
                      std::to_string((n - 10) / 2) + " rim chords");
      auto w = a.wheel(d1);
      const auto& r = w.rim;  // r[j] = v_(j+2)
      auto x = a.vertices(3);
      a.edge(x[0], x[1]);
      a.edge(x[1], x[2]);
      a.edge(x[0], r[0]);
      a.edge(x[0], r[1]);
      a.edge(x[1], r[2]);
      a.edge(x[2], r[3]);
      a.edge(x[2], r[4]);
      for (int j = 7; j <= n / 2 + 1; ++j) a.edge(r[static_cast<std::size_t>(j - 2)], r[static_cast<std::size_t>(n - j + 2)]);
    } else if (m == 4) {
      const int rest = n - 11;
      std::vector<int> gadget{0, 1, 2, 3, 4, 5};
      std::vector<int> free;
      if (rest == 2) {
        gadget = {0, 1, 2, 3, 4, 6};
        free = {5, 7};
      } else {
        for (int i = 6; i < d1; ++i) free.push_back(i);
      }
      note(depth, "T15 (d1,4^(n-5),3^4) d1=n-5: W" + std::to_string(d1) + " + path x1..x4, " +
                      std::to_string(rest / 2) + " rim chords");
      auto w = a.wheel(d1);
      auto r = [&](int i) { return w.rim[static_cast<std::size_t>(i)]; };
      auto x = a.vertices(4);
      for (int i = 0; i < 3; ++i) a.edge(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i + 1)]);
      a.edge(x[0], r(gadget[0]));
      a.edge(x[0], r(gadget[1]));
      a.edge(x[1], r(gadget[2]));
      a.edge(x[2], r(gadget[3]));
      a.edge(x[3], r(gadget[4]));
      a.edge(x[3], r(gadget[5]));
      const std::size_t half = free.size() / 2;
      for (std::size_t i = 0; i < half; ++i) a.edge(r(free[i]), r(free[i + half]));
    } else {
      note(depth, "T15 (d1,4^(n-5),3^4) d1<=n-6: W" + std::to_string(d1) + " + squared " + std::to_string(m) +
                      "-cycle minus u2u" + std::to_string(m) + ", lift at u1");
      auto w = a.wheel(d1);
      auto v = [&](int j) { return w.rim[static_cast<std::size_t>(j - 1)]; };  // v_1..v_d1
      auto u = a.vertices(m);
      auto uu = [&](int i) { return u[static_cast<std::size_t>(((i - 1) % m + m) % m)]; };  // u_1..u_m
      for (int i = 1; i <= m; ++i) {
        a.edge(uu(i), uu(i + 1));
        if (i != m) a.edge(uu(i), uu(i + 2));  // u_m u_2 is the removed chord
      }
      a.edge(v(1), uu(m));
      a.edge(v(2), uu(2));
      for (int j = 3; j <= d1 / 2 - 1; ++j) a.edge(v(j), v(d1 - j + 3));
      a.lift(uu(1), uu(2), uu(3));
    }
    return a.finish();
  }

  /// (d1, 4^(n-6), 3^5) with odd d1 >= 7 from the (5, 4^(n-6), 3^5) graph.
  Built inverse_lifts(const DegreeSequence& seq, int depth) {
    const int n = seq.size();
    const int d1 = seq.d(1);
    const int count = (d1 - 5) / 2;
    note(depth, "T15 (d1,4^(n-6),3^5): inverse lifts x" + std::to_string(count) + " at the 5-vertex of");
    const Built base_g = l31iii(n, depth + 1);
    const Multigraph& g = base_g.graph;
    const int u = 0;
    if (g.degree(u) != 5) throw ConstructionError("expected the 5-vertex at label 0");
    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    blocked[static_cast<std::size_t>(u)] = 1;
    for (int x : g.neighbors(u)) blocked[static_cast<std::size_t>(x)] = 1;
    std::vector<int> chosen;
    for (int i = 0; i < g.edge_count() && static_cast<int>(chosen.size()) < count; ++i) {
      const auto& e = g.edge(i);
      if (blocked[static_cast<std::size_t>(e.tail)] || blocked[static_cast<std::size_t>(e.head)]) continue;
      chosen.push_back(i);
      blocked[static_cast<std::size_t>(e.tail)] = 1;
      blocked[static_cast<std::size_t>(e.head)] = 1;
    }
    if (static_cast<int>(chosen.size()) < count)
      throw ConstructionError("only " + std::to_string(chosen.size()) + " disjoint edges avoid N[u]; need " +
                              std::to_string(count));
    std::vector<Edge> edges;
    std::vector<LiftHint> lifts;
    for (int i = 0; i < g.edge_count(); ++i)
      if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) edges.push_back(g.edge(i));
    std::ostringstream picked;
    for (int i : chosen) {
      const auto& e = g.edge(i);
      edges.push_back({u, e.tail});
      edges.push_back({u, e.head});
      lifts.push_back({u, e.tail, e.head});
      picked << ' ' << e.tail << '-' << e.head;
    }
    lifts.insert(lifts.end(), base_g.lifts.begin(), base_g.lifts.end());
    note(depth, "  replaced edges" + picked.str());
    return normalize(n, edges, lifts);
  }

  // generic steps -------------------------------------------------------

  /// Realize the residual and attach a new vertex to the decremented entries.
  Built peel(const DegreeSequence& seq, int depth, const std::string& why) {
    const Residual r = residual(seq);
    note(depth, "peel (" + why + "): residual " + to_string(r.sequence()));
    Built sub;
    try {
      sub = build(r.sequence(), depth + 1);
    } catch (const UnsupportedError& e) {
      note(depth, "peel failed: " + std::string(e.what()));
      return search(seq, depth, "peel failed");
    }
    const int n = seq.size();
    std::vector<Edge> edges;
    auto pos = [&](int j) { return r.source[static_cast<std::size_t>(j)]; };
    for (const auto& e : sub.graph.edges()) edges.push_back({pos(e.tail), pos(e.head)});
    for (int p : r.decremented_positions()) edges.push_back({p, n - 1});
    std::vector<LiftHint> lifts;
    for (const auto& l : sub.lifts) lifts.push_back({pos(l.u), pos(l.v), pos(l.w)});
    return normalize(n, edges, lifts);
  }

  /// Region of the cited d_(n-3) >= 4 theorem: no construction given here.
  Built prior(const DegreeSequence& seq, int depth) { return peel(seq, depth, "d_(n-3)>=4, cited region"); }

  Built search(const DegreeSequence& seq, int depth, const std::string& why) {
    const int n = seq.size();
    if (n > opt_.search_n_max)
      throw UnsupportedError("search fallback for " + to_string(seq) + " exceeds n=" + std::to_string(opt_.search_n_max));
    RealizationStream stream(seq, {opt_.search_limit, false});
    while (auto g = stream.next()) {
      const bool ok = n <= opt_.oracle_cap ? is_z3_connected(*g, opt_.oracle_cap) : certify(*g, {}, opt_.certify).has_value();
      if (ok) {
        note(depth, "search (" + why + "): accepted realization #" + std::to_string(stream.generated()));
        return normalize_graph(*g);
      }
    }
    throw UnsupportedError("search for " + to_string(seq) + " found no Z3-connected realization in " +
                           std::to_string(stream.generated()) + " candidates");
  }

 private:
  void note(int depth, const std::string& line) {
    trace.push_back(std::string(static_cast<std::size_t>(2 * depth), ' ') + line);
  }

  Built base(BaseGraphId id, int depth, const std::string& family) {
    note(depth, family + ": base " + to_string(id));
    return normalize_graph(base_graph(id));
  }

  static Built normalize_graph(const Multigraph& g) { return normalize(g.vertex_count(), g.edges(), {}); }

  static void check(const Built& b, const DegreeSequence& seq) {
    if (!b.graph.is_simple()) throw ConstructionError("construction for " + to_string(seq) + " is not simple");
    if (b.graph.vertex_count() != seq.size() || b.graph.degrees() != seq.degrees())
      throw ConstructionError("construction for " + to_string(seq) + " has degree sequence " +
                              to_string(degree_sequence_of(b.graph)));
  }

  RealizeOptions opt_;
};

}  // namespace detail

/// Dispatches on classify. Realized graphs are simple with exactly the
/// requested degrees; the proof is a replayed certificate, else the oracle.
inline RealizationResult realize(const DegreeSequence& seq, const RealizeOptions& opt = {}) {
  RealizationResult res;
  res.classification = classify(seq);
  switch (res.classification.tag) {
    case ClassTag::NotGraphic: res.kind = ResultKind::NotGraphic; return res;
    case ClassTag::ExceptionN3:
    case ClassTag::ExceptionOddK:
    case ClassTag::ExceptionOddKSquare: res.kind = ResultKind::Exception; return res;
    case ClassTag::OutOfCoverage:
      if (!opt.search_out_of_coverage) {
        res.kind = ResultKind::Unsupported;
        res.reason = "outside the covered region";
        return res;
      }
      break;
    case ClassTag::Covered: break;
  }
  detail::Builder b(opt);
  Built built;
  try {
    built = b.build(seq, 0);
  } catch (const detail::UnsupportedError& e) {
    res.kind = ResultKind::Unsupported;
    res.reason = e.what();
    res.trace = std::move(b.trace);
    return res;
  }
  res.trace = std::move(b.trace);
  if (!built.graph.is_simple() || built.graph.degrees() != seq.degrees())
    throw ConstructionError("realization of " + to_string(seq) + " failed validation");
  res.kind = ResultKind::Realized;
  res.graph = std::move(built.graph);
  res.lifts = std::move(built.lifts);
  if (!opt.prove) return res;
  auto cert = certify(res.graph, res.lifts, opt.certify);
  if (cert && replay(res.graph, *cert)) {
    res.proof = ProofKind::Certificate;
    res.certificate = std::move(cert);
  } else if (res.graph.vertex_count() <= opt.oracle_cap) {
    if (!is_z3_connected(res.graph, opt.oracle_cap))
      throw ConstructionError("realization of " + to_string(seq) + " is not Z3-connected");
    res.proof = ProofKind::Oracle;
  } else {
    res.proof = ProofKind::Unverified;
  }
  return res;
}

/// One construction family, without the top-level dispatch or proof.
inline Multigraph realize_family(const DegreeSequence& seq, Route family, const RealizeOptions& opt = {}) {
  const auto c = classify(seq);
  if (c.tag != ClassTag::Covered || c.route != family)
    throw HypothesisError(to_string(seq) + " is not in family " + to_string(family));
  detail::Builder b(opt);
  try {
    return b.by_route(seq, family, 0).graph;
  } catch (const detail::UnsupportedError& e) {
    throw HypothesisError(e.what());
  }
}

}  // namespace z3real
