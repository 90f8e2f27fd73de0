#pragma once

// Replayable Z3-connectivity certificates. Each step either contracts a
// subgraph known to be Z3-connected or lifts a pair of edges at a vertex of
// degree >= 4; a certificate that ends at K1 proves the start graph.
//
// Vertices are named by block representatives: the smallest original label
// among the vertices merged into the current vertex.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "z3real/catalog.hpp"
#include "z3real/graph.hpp"

namespace z3real {

enum class StepKind { ContractTwoCycle, AbsorbVertex, ContractEvenWheel, ContractKnownBase, TriangularRule, Lift, Done };

enum class TriangularWitness { MinDegree4, TwoCycle };

struct Step {
  StepKind kind = StepKind::Done;
  // ContractTwoCycle {u,v}; AbsorbVertex {v,block}; ContractEvenWheel {center, rim...};
  // ContractKnownBase embedding; TriangularRule vertex set; Lift {u,v,w}.
  std::vector<int> args;
  BaseGraphId base = BaseGraphId::K5;
  TriangularWitness witness = TriangularWitness::MinDegree4;
  std::vector<int> pair;  // TwoCycle witness

  friend bool operator==(const Step&, const Step&) = default;
};

inline Step make_step(StepKind kind, std::vector<int> args) {
  Step s;
  s.kind = kind;
  s.args = std::move(args);
  return s;
}

struct Certificate {
  int n = 0;
  int m = 0;
  std::vector<Step> steps;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct LiftHint {
  int u, v, w;
};

namespace detail {

inline void append_ints(std::ostringstream& out, const std::vector<int>& xs) {
  for (int x : xs) out << ' ' << x;
}

}  // namespace detail

inline std::string to_string(const Step& s) {
  std::ostringstream out;
  switch (s.kind) {
    case StepKind::ContractTwoCycle: out << "contract2"; break;
    case StepKind::AbsorbVertex: out << "absorb"; break;
    case StepKind::ContractEvenWheel: out << "wheel"; break;
    case StepKind::ContractKnownBase: out << "base " << to_string(s.base); break;
    case StepKind::TriangularRule:
      out << "triangular ";
      if (s.witness == TriangularWitness::MinDegree4) {
        out << "mindeg4";
      } else {
        out << "twocycle";
        detail::append_ints(out, s.pair);
      }
      out << " :";
      break;
    case StepKind::Lift: out << "lift"; break;
    case StepKind::Done: out << "done"; break;
  }
  detail::append_ints(out, s.args);
  return out.str();
}

inline std::string to_string(const Certificate& c) {
  std::ostringstream out;
  out << "z3cert v1 n=" << c.n << " m=" << c.m << '\n';
  for (const auto& s : c.steps) out << to_string(s) << '\n';
  return out.str();
}

inline Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& why) { throw std::invalid_argument("certificate: " + why); };
  if (!std::getline(in, line)) fail("empty input");
  Certificate c;
  {
    std::istringstream head(line);
    std::string magic, version, nf, mf;
    head >> magic >> version >> nf >> mf;
    if (magic != "z3cert" || version != "v1" || nf.rfind("n=", 0) != 0 || mf.rfind("m=", 0) != 0)
      fail("bad header '" + line + "'");
    c.n = std::stoi(nf.substr(2));
    c.m = std::stoi(mf.substr(2));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    Step s;
    auto read_rest = [&](std::vector<int>& into) {
      std::string tok;
      while (ls >> tok) {
        if (tok == ":") break;
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          fail("bad integer '" + tok + "'");
        }
        if (used != tok.size()) fail("bad integer '" + tok + "'");
        into.push_back(v);
      }
    };
    if (word == "contract2") {
      s.kind = StepKind::ContractTwoCycle;
    } else if (word == "absorb") {
      s.kind = StepKind::AbsorbVertex;
    } else if (word == "wheel") {
      s.kind = StepKind::ContractEvenWheel;
    } else if (word == "base") {
      s.kind = StepKind::ContractKnownBase;
      std::string name;
      ls >> name;
      auto id = base_graph_from_string(name);
      if (!id) fail("unknown base graph '" + name + "'");
      s.base = *id;
    } else if (word == "triangular") {
      s.kind = StepKind::TriangularRule;
      std::string w;
      ls >> w;
      if (w == "mindeg4") {
        s.witness = TriangularWitness::MinDegree4;
        std::string colon;
        ls >> colon;
        if (colon != ":") fail("expected ':'");
      } else if (w == "twocycle") {
        s.witness = TriangularWitness::TwoCycle;
        read_rest(s.pair);
      } else {
        fail("unknown triangular witness '" + w + "'");
      }
    } else if (word == "lift") {
      s.kind = StepKind::Lift;
    } else if (word == "done") {
      s.kind = StepKind::Done;
    } else {
      fail("unknown step '" + word + "'");
    }
    read_rest(s.args);
    c.steps.push_back(std::move(s));
  }
  return c;
}

struct ReplayResult {
  bool ok = false;
  int failed_step = -1;  // index into steps, or steps.size() for a missing terminal
  std::string reason;

  explicit operator bool() const { return ok; }
};

namespace detail {

/// Current graph plus the representative of every current vertex. Contraction
/// keeps representatives sorted, so lookups are binary searches.
struct BlockGraph {
  Multigraph g;
  std::vector<int> rep;
  std::vector<int> block_size;

  explicit BlockGraph(const Multigraph& start) : g(start) {
    for (int v = 0; v < start.vertex_count(); ++v) {
      rep.push_back(v);
      block_size.push_back(1);
    }
  }

  std::optional<int> index_of(int r) const {
    auto it = std::lower_bound(rep.begin(), rep.end(), r);
    if (it == rep.end() || *it != r) return std::nullopt;
    return static_cast<int>(it - rep.begin());
  }

  void merge(const std::vector<int>& idx) {
    auto r = contract(g, idx);
    std::vector<int> new_rep(static_cast<std::size_t>(r.graph.vertex_count()), -1);
    std::vector<int> new_size(static_cast<std::size_t>(r.graph.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto nv = static_cast<std::size_t>(r.map[static_cast<std::size_t>(v)]);
      if (new_rep[nv] < 0 || rep[static_cast<std::size_t>(v)] < new_rep[nv]) new_rep[nv] = rep[static_cast<std::size_t>(v)];
      new_size[nv] += block_size[static_cast<std::size_t>(v)];
    }
    g = std::move(r.graph);
    rep = std::move(new_rep);
    block_size = std::move(new_size);
  }

  std::vector<int> reps_of(const std::vector<int>& idx) const {
    std::vector<int> out;
    for (int i : idx) out.push_back(rep[static_cast<std::size_t>(i)]);
    return out;
  }
};

inline std::vector<std::vector<char>> adjacency(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    a[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] = 1;
    a[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)] = 1;
  }
  return a;
}

struct TriangularBlock {
  std::vector<int> vertices;
  int min_degree = 0;
  std::optional<std::pair<int, int>> parallel;
};

/// Vertex sets and in-class degrees of every triangle class.
inline std::vector<TriangularBlock> triangular_blocks(const Multigraph& g) {
  const auto cls = triangle_classes(g);
  std::vector<int> ids;
  for (int c : cls)
    if (c >= 0) ids.push_back(c);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<TriangularBlock> out;
  const auto mult = g.multiplicity_matrix();
  for (int id : ids) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    TriangularBlock b;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (cls[static_cast<std::size_t>(i)] != id) continue;
      const auto& e = g.edge(i);
      ++deg[static_cast<std::size_t>(e.tail)];
      ++deg[static_cast<std::size_t>(e.head)];
      if (!b.parallel && mult[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] >= 2)
        b.parallel = std::make_pair(std::min(e.tail, e.head), std::max(e.tail, e.head));
    }
    b.min_degree = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (deg[static_cast<std::size_t>(v)] == 0) continue;
      b.vertices.push_back(v);
      if (b.min_degree < 0 || deg[static_cast<std::size_t>(v)] < b.min_degree) b.min_degree = deg[static_cast<std::size_t>(v)];
    }
    out.push_back(std::move(b));
  }
  return out;
}

/// Subgraph monomorphism pattern -> host (pattern simple). Gives up after
/// `budget` search nodes, which only costs completeness.
inline std::optional<std::vector<int>> find_embedding(const Multigraph& pattern, const Multigraph& host,
                                                      long long budget) {
  const int p = pattern.vertex_count();
  const int h = host.vertex_count();
  if (p > h || pattern.edge_count() > host.edge_count()) return std::nullopt;
  const auto pa = adjacency(pattern);
  const auto ha = adjacency(host);
  std::vector<int> pdeg(static_cast<std::size_t>(p)), hdeg(static_cast<std::size_t>(h));
  for (int v = 0; v < p; ++v) pdeg[static_cast<std::size_t>(v)] = static_cast<int>(pattern.neighbors(v).size());
  for (int v = 0; v < h; ++v) hdeg[static_cast<std::size_t>(v)] = static_cast<int>(host.neighbors(v).size());
  {
    std::vector<int> ps = pdeg, hs = hdeg;
    std::sort(ps.rbegin(), ps.rend());
    std::sort(hs.rbegin(), hs.rend());
    for (int i = 0; i < p; ++i)
      if (hs[static_cast<std::size_t>(i)] < ps[static_cast<std::size_t>(i)]) return std::nullopt;
  }
  // order: greedy by connections to already ordered vertices, then degree
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(p), 0);
  for (int step = 0; step < p; ++step) {
    int best = -1, best_conn = -1;
    for (int v = 0; v < p; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int conn = 0;
      for (int u : order) conn += pa[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      if (conn > best_conn || (conn == best_conn && pdeg[static_cast<std::size_t>(v)] > pdeg[static_cast<std::size_t>(best)])) {
        best = v;
        best_conn = conn;
      }
    }
    placed[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  std::vector<int> image(static_cast<std::size_t>(p), -1);
  std::vector<char> used(static_cast<std::size_t>(h), 0);
  long long nodes = 0;
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == p) return true;
    if (++nodes > budget) return false;
    const int v = order[static_cast<std::size_t>(k)];
    for (int x = 0; x < h; ++x) {
      if (used[static_cast<std::size_t>(x)] || hdeg[static_cast<std::size_t>(x)] < pdeg[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int u = order[static_cast<std::size_t>(j)];
        if (pa[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] &&
            !ha[static_cast<std::size_t>(x)][static_cast<std::size_t>(image[static_cast<std::size_t>(u)])])
          ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = x;
      used[static_cast<std::size_t>(x)] = 1;
      if (place(k + 1)) return true;
      used[static_cast<std::size_t>(x)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
      if (nodes > budget) return false;
    }
    return false;
  };
  if (place(0)) return image;
  return std::nullopt;
}

inline bool in_catalog(BaseGraphId id) {
  const auto& ids = z3_catalog();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace detail

/// Re-executes every step; no search.
inline ReplayResult replay(const Multigraph& start, const Certificate& cert) {
  ReplayResult res;
  if (cert.n != start.vertex_count() || cert.m != start.edge_count()) {
    res.failed_step = 0;
    res.reason = "header does not match the graph";
    return res;
  }
  if (start.vertex_count() == 0) {
    res.failed_step = 0;
    res.reason = "empty graph";
    return res;
  }
  detail::BlockGraph bg(start);
  auto fail = [&](int i, std::string why) {
    res.ok = false;
    res.failed_step = i;
    res.reason = std::move(why);
    return res;
  };
  for (int i = 0; i < static_cast<int>(cert.steps.size()); ++i) {
    const Step& s = cert.steps[static_cast<std::size_t>(i)];
    std::vector<int> idx;
    for (int r : s.args) {
      auto v = bg.index_of(r);
      if (!v) return fail(i, "unknown vertex " + std::to_string(r));
      idx.push_back(*v);
    }
    {
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail(i, "repeated vertex");
    }
    const Multigraph& g = bg.g;
    auto edge_between = [&](int a, int b) { return g.multiplicity(a, b) > 0; };
    switch (s.kind) {
      case StepKind::Done:
        if (!s.args.empty()) return fail(i, "done takes no arguments");
        if (g.vertex_count() != 1) return fail(i, "graph is not K1");
        if (i + 1 != static_cast<int>(cert.steps.size())) return fail(i + 1, "steps after done");
        res.ok = true;
        return res;
      case StepKind::ContractTwoCycle:
      case StepKind::AbsorbVertex:
        if (idx.size() != 2) return fail(i, "expected two vertices");
        if (g.multiplicity(idx[0], idx[1]) < 2) return fail(i, "fewer than two edges between the vertices");
        bg.merge(idx);
        break;
      case StepKind::ContractEvenWheel: {
        const int k = static_cast<int>(idx.size()) - 1;
        if (k < 4 || k % 2 != 0) return fail(i, "rim length must be even and at least 4");
        for (int j = 1; j <= k; ++j) {
          if (!edge_between(idx[0], idx[static_cast<std::size_t>(j)])) return fail(i, "missing spoke");
          const int next = j == k ? 1 : j + 1;
          if (!edge_between(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(next)])) return fail(i, "missing rim edge");
        }
        bg.merge(idx);
        break;
      }
      case StepKind::ContractKnownBase: {
        if (!detail::in_catalog(s.base)) return fail(i, "base graph has no connectivity claim");
        const Multigraph b = base_graph(s.base);
        if (static_cast<int>(idx.size()) != b.vertex_count()) return fail(i, "embedding has wrong size");
        for (const auto& e : b.edges())
          if (!edge_between(idx[static_cast<std::size_t>(e.tail)], idx[static_cast<std::size_t>(e.head)]))
            return fail(i, "base edge not present");
        bg.merge(idx);
        break;
      }
      case StepKind::TriangularRule: {
        if (idx.size() < 2) return fail(i, "vertex set too small");
        auto sub = induced_subgraph(g, idx);
        const auto blocks = detail::triangular_blocks(sub.graph);
        std::optional<std::pair<int, int>> want;
        if (s.witness == TriangularWitness::TwoCycle) {
          if (s.pair.size() != 2) return fail(i, "two-cycle witness needs two vertices");
          auto a = bg.index_of(s.pair[0]);
          auto b = bg.index_of(s.pair[1]);
          if (!a || !b) return fail(i, "unknown witness vertex");
          const int ma = sub.map[static_cast<std::size_t>(*a)];
          const int mb = sub.map[static_cast<std::size_t>(*b)];
          if (ma < 0 || mb < 0) return fail(i, "witness outside the vertex set");
          want = std::make_pair(std::min(ma, mb), std::max(ma, mb));
        }
        bool found = false;
        for (const auto& blk : blocks) {
          if (static_cast<int>(blk.vertices.size()) != sub.graph.vertex_count()) continue;
          if (s.witness == TriangularWitness::MinDegree4 && blk.min_degree >= 4) found = true;
          if (s.witness == TriangularWitness::TwoCycle) {
            const auto cls = triangle_classes(sub.graph);
            int ca = -1;
            for (int e = 0; e < sub.graph.edge_count(); ++e) {
              const auto& ed = sub.graph.edge(e);
              if (std::make_pair(std::min(ed.tail, ed.head), std::max(ed.tail, ed.head)) == *want) ca = cls[static_cast<std::size_t>(e)];
            }
            if (sub.graph.multiplicity(want->first, want->second) >= 2 && ca >= 0) {
              std::vector<char> seen(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
              for (int e = 0; e < sub.graph.edge_count(); ++e)
                if (cls[static_cast<std::size_t>(e)] == ca) {
                  seen[static_cast<std::size_t>(sub.graph.edge(e).tail)] = 1;
                  seen[static_cast<std::size_t>(sub.graph.edge(e).head)] = 1;
                }
              found = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
            }
          }
          if (found) break;
        }
        if (!found) return fail(i, "no triangle class with the witness spans the vertex set");
        bg.merge(idx);
        break;
      }
      case StepKind::Lift: {
        if (idx.size() != 3) return fail(i, "expected three vertices");
        if (g.degree(idx[0]) < 4) return fail(i, "lift vertex has degree below 4");
        if (!edge_between(idx[0], idx[1]) || !edge_between(idx[0], idx[2])) return fail(i, "missing lifted edge");
        bg.g = lift(g, idx[0], idx[1], idx[2]);
        break;
      }
    }
  }
  return fail(static_cast<int>(cert.steps.size()), "certificate does not end with done");
}

struct CertifyOptions {
  int max_rim = 64;
  long long embedding_budget = 20000;
};

/// Greedy search; nullopt means Unknown, never "not connected".
/// `lifts` are applied first, in order, on original labels.
inline std::optional<Certificate> certify(const Multigraph& g, const std::vector<LiftHint>& lifts = {},
                                          const CertifyOptions& opt = {}) {
  if (g.vertex_count() == 0) return std::nullopt;
  Certificate cert;
  cert.n = g.vertex_count();
  cert.m = g.edge_count();
  detail::BlockGraph bg(g);
  for (const auto& l : lifts) {
    if (l.u < 0 || l.u >= g.vertex_count() || bg.g.degree(l.u) < 4) return std::nullopt;
    if (bg.g.multiplicity(l.u, l.v) == 0 || bg.g.multiplicity(l.u, l.w) == 0 || l.v == l.w) return std::nullopt;
    bg.g = lift(bg.g, l.u, l.v, l.w);
    cert.steps.push_back(make_step(StepKind::Lift, {l.u, l.v, l.w}));
  }
  while (bg.g.vertex_count() > 1) {
    const Multigraph& h = bg.g;
    const int n = h.vertex_count();
    // two-cycles, lowest pair first
    std::optional<std::pair<int, int>> pair;
    {
      const auto mult = h.multiplicity_matrix();
      for (int a = 0; a < n && !pair; ++a)
        for (int b = a + 1; b < n && !pair; ++b)
          if (mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 2) pair = std::make_pair(a, b);
    }
    if (pair) {
      auto [a, b] = *pair;
      const int sa = bg.block_size[static_cast<std::size_t>(a)];
      const int sb = bg.block_size[static_cast<std::size_t>(b)];
      Step s;
      if ((sa == 1) != (sb == 1)) {
        s.kind = StepKind::AbsorbVertex;
        s.args = sa == 1 ? bg.reps_of({a, b}) : bg.reps_of({b, a});
      } else {
        s.kind = StepKind::ContractTwoCycle;
        s.args = bg.reps_of({a, b});
      }
      cert.steps.push_back(s);
      bg.merge({a, b});
      continue;
    }
    if (auto w = find_even_wheel(h, opt.max_rim)) {
      std::vector<int> idx{w->center};
      idx.insert(idx.end(), w->rim.begin(), w->rim.end());
      cert.steps.push_back(make_step(StepKind::ContractEvenWheel, bg.reps_of(idx)));
      bg.merge(idx);
      continue;
    }
    bool fired = false;
    for (BaseGraphId id : z3_catalog()) {
      auto emb = detail::find_embedding(base_graph(id), h, opt.embedding_budget);
      if (!emb) continue;
      Step s = make_step(StepKind::ContractKnownBase, bg.reps_of(*emb));
      s.base = id;
      cert.steps.push_back(s);
      bg.merge(*emb);
      fired = true;
      break;
    }
    if (fired) continue;
    for (const auto& blk : detail::triangular_blocks(h)) {
      if (blk.vertices.size() < 2 || blk.min_degree < 4) continue;
      Step s = make_step(StepKind::TriangularRule, bg.reps_of(blk.vertices));
      s.witness = TriangularWitness::MinDegree4;
      cert.steps.push_back(s);
      bg.merge(blk.vertices);
      fired = true;
      break;
    }
    if (fired) continue;
    return std::nullopt;
  }
  cert.steps.push_back(make_step(StepKind::Done, {}));
  return cert;
}

}  // namespace z3real
