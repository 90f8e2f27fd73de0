// z3real command-line front end.
// Exit codes: 0 success, 1 negative answer, 2 usage or cap error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "z3real/z3real.hpp"

namespace {

using json = nlohmann::json;
using namespace z3real;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Multigraph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return read_edge_list(in);
}

std::string tag_name(const Classification& c) { return to_string(c.tag); }

int cmd_classify(const std::string& text) {
  const auto seq = parse_sequence(text);
  const auto c = classify(seq);
  json out;
  out["sequence"] = to_string(seq);
  out["graphic"] = c.tag != ClassTag::NotGraphic;
  out["tag"] = tag_name(c);
  out["route"] = c.route ? json(to_string(*c.route)) : json(nullptr);
  std::cout << out.dump() << '\n';
  return c.tag == ClassTag::NotGraphic || c.is_exception() ? kNegative : kOk;
}

int cmd_realize(const std::string& text, const std::string& format, bool with_cert, bool search,
                const RealizeOptions& base) {
  const auto seq = parse_sequence(text);
  RealizeOptions opt = base;
  opt.search_out_of_coverage = search;
  const auto r = realize(seq, opt);
  if (format == "json") {
    json out;
    out["sequence"] = to_string(seq);
    out["tag"] = tag_name(r.classification);
    out["route"] = r.classification.route ? json(to_string(*r.classification.route)) : json(nullptr);
    out["result"] = to_string(r.kind);
    out["trace"] = r.trace;
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (r.realized()) {
      out["proof"] = to_string(r.proof);
      out["n"] = r.graph.vertex_count();
      json edges = json::array();
      for (const auto& e : r.graph.edges()) edges.push_back({e.tail, e.head});
      out["edges"] = edges;
      if (with_cert && r.certificate) out["certificate"] = to_string(*r.certificate);
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << realization_text(seq, r, format == "dot" ? GraphFormat::Dot : GraphFormat::EdgeList, with_cert);
  }
  switch (r.kind) {
    case ResultKind::Realized: return kOk;
    case ResultKind::Exception:
    case ResultKind::NotGraphic: return kNegative;
    case ResultKind::Unsupported: return kUsage;
  }
  return kUsage;
}

int cmd_verify(const std::string& path, int cap) {
  const auto g = load_graph(path);
  const bool z3 = is_z3_connected(g, cap);
  const bool flow = is_3_flowable(g, cap);
  std::cout << "z3_connected=" << (z3 ? "true" : "false") << '\n';
  std::cout << "three_flowable=" << (flow ? "true" : "false") << '\n';
  return z3 ? kOk : kNegative;
}

int cmd_enumerate(const std::string& text, long long limit, bool dedup) {
  const auto seq = parse_sequence(text);
  EnumerateOptions opt;
  if (limit > 0) opt.limit = limit;
  opt.dedup = dedup;
  RealizationStream stream(seq, opt);
  while (auto g = stream.next()) {
    std::cout << "# realization " << stream.emitted() << '\n';
    write_edge_list(std::cout, *g);
  }
  std::cout << "# generated " << stream.generated() << " emitted " << stream.emitted() << '\n';
  return stream.emitted() > 0 ? kOk : kNegative;
}

int cmd_certify(const std::string& path) {
  const auto g = load_graph(path);
  const auto cert = certify(g);
  if (!cert) {
    std::cout << "unknown\n";
    return kNegative;
  }
  std::cout << to_string(*cert);
  return kOk;
}

int cmd_sweep(int n_min, int n_max, const RealizeOptions& opt) {
  if (n_min < 4 || n_max < n_min) throw UsageError("need 4 <= n-min <= n-max");
  if (n_max > opt.oracle_cap) throw CapExceeded(n_max, opt.oracle_cap);
  const auto report = sweep(n_min, n_max, opt);
  std::cout << "n\tgraphic\tcovered\texceptions\tuncovered\tverified\tfailures\n";
  for (const auto& row : report.rows)
    std::cout << row.n << '\t' << row.graphic << '\t' << row.covered << '\t' << row.exceptions << '\t'
              << row.out_of_coverage << '\t' << row.verified << '\t' << row.failures << '\n';
  for (const auto& f : report.failures) std::cout << "FAIL " << to_string(f.sequence) << ": " << f.reason << '\n';
  std::cout << (report.ok() ? "PASS" : "FAIL") << '\n';
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z3-connected realizations of degree sequences"};
  app.require_subcommand(1, 1);
  int cap = kDefaultOracleCap;
  app.add_option("--oracle-cap", cap, "Largest vertex count for the exact oracle")->check(CLI::Range(1, 16));

  std::string seq_text, path, format = "edgelist";
  bool with_cert = false, search = false, dedup = false;
  long long limit = 0;
  int n_min = 6, n_max = 10;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a degree sequence");
  classify_cmd->add_option("sequence", seq_text, "Sequence, e.g. \"(6,5,4^4,3)\"")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Build a Z3-connected realization");
  realize_cmd->add_option("sequence", seq_text)->required();
  realize_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dot", "json"}));
  realize_cmd->add_flag("--certify", with_cert, "Include the certificate");
  realize_cmd->add_flag("--search", search, "Search realizations outside the covered region");

  auto* verify_cmd = app.add_subcommand("verify", "Decide Z3-connectivity of an edge-list file");
  verify_cmd->add_option("file", path, "Edge-list file, - for stdin")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List realizations");
  enum_cmd->add_option("sequence", seq_text)->required();
  enum_cmd->add_option("--limit", limit, "Stop after this many graphs")->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--dedup", dedup, "One graph per isomorphism class");

  auto* cert_cmd = app.add_subcommand("certify", "Search for a contraction certificate");
  cert_cmd->add_option("file", path)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Realize and verify every covered sequence");
  sweep_cmd->add_option("--n-min", n_min);
  sweep_cmd->add_option("--n-max", n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RealizeOptions opt;
  opt.oracle_cap = cap;
  try {
    if (*classify_cmd) return cmd_classify(seq_text);
    if (*realize_cmd) return cmd_realize(seq_text, format, with_cert, search, opt);
    if (*verify_cmd) return cmd_verify(path, cap);
    if (*enum_cmd) return cmd_enumerate(seq_text, limit, dedup);
    if (*cert_cmd) return cmd_certify(path);
    if (*sweep_cmd) return cmd_sweep(n_min, n_max, opt);
  } catch (const ConstructionError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
