#pragma once

// Text rendering of realization results: a comment header (class, trace,
// proof) followed by the graph. The edge-list form re-reads as input.

#include <sstream>
#include <string>

#include "z3real/builder.hpp"

namespace z3real {

enum class GraphFormat { EdgeList, Dot };

inline std::string realization_text(const DegreeSequence& seq, const RealizationResult& r,
                                    GraphFormat format = GraphFormat::EdgeList, bool with_cert = false) {
  const char* prefix = format == GraphFormat::Dot ? "// " : "# ";
  std::ostringstream out;
  out << prefix << "sequence " << to_string(seq) << '\n';
  out << prefix << "class " << to_string(r.classification.tag);
  if (r.classification.route) out << ' ' << to_string(*r.classification.route);
  out << '\n';
  out << prefix << "result " << to_string(r.kind) << '\n';
  for (const auto& line : r.trace) out << prefix << "trace " << line << '\n';
  if (!r.reason.empty()) out << prefix << "reason " << r.reason << '\n';
  if (r.realized()) out << prefix << "proof " << to_string(r.proof) << '\n';
  if (with_cert && r.certificate) {
    std::istringstream lines(to_string(*r.certificate));
    for (std::string line; std::getline(lines, line);) out << prefix << "cert " << line << '\n';
  }
  if (r.realized()) out << (format == GraphFormat::Dot ? to_dot(r.graph) : to_edge_list(r.graph));
  return out.str();
}

}  // namespace z3real
