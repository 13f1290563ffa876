#include <algorithm>
#include <map>
#include <sstream>

#include "zrq/error.hpp"
#include "zrq/json_io.hpp"
#include "zrq/topology.hpp"

namespace zrq {
namespace {

using NodeKey = std::pair<std::size_t, std::string>;  // (rank, compact form)

void extend(const FieldPtr& field, const std::vector<FieldVector>& candidates, std::size_t n,
            std::size_t max_rank, std::vector<FieldVector>& tuple, std::vector<bool>& used,
            std::map<NodeKey, Preorder>& nodes) {
  Preorder p = Preorder::from_rows(field, tuple, n);
  nodes.try_emplace({p.rank(), p.compact()}, p);
  if (tuple.size() == max_rank) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    tuple.push_back(candidates[i]);
    extend(field, candidates, n, max_rank, tuple, used, nodes);
    tuple.pop_back();
    used[i] = false;
  }
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

FragmentGraph enumerate_fragment(const FieldPtr& field, const std::vector<FieldVector>& candidates,
                                 std::size_t n, std::size_t max_rank) {
  if (max_rank > n) fail(ErrorKind::RangeError, "max_rank exceeds n");
  for (const auto& c : candidates) {
    if (!same_field(c.field(), field)) fail(ErrorKind::FieldMismatch, "candidate over a different field");
    if (c.size() != n) fail(ErrorKind::DimensionMismatch, "candidate length differs from n");
  }
  std::map<NodeKey, Preorder> found;
  std::vector<FieldVector> tuple;
  std::vector<bool> used(candidates.size(), false);
  extend(field, candidates, n, max_rank, tuple, used, found);

  FragmentGraph g;
  std::map<NodeKey, std::size_t> index;
  for (auto& [key, p] : found) {
    index.emplace(key, g.nodes.size());
    g.nodes.push_back(p);
  }
  g.root = 0;
  // Coarsenings are exactly truncations, so the cover inside the node set is
  // the longest proper truncation that was enumerated.
  for (std::size_t child = 1; child < g.nodes.size(); ++child) {
    const Preorder& p = g.nodes[child];
    for (std::size_t k = p.rank(); k-- > 0;) {
      const Preorder t = p.truncated(k);
      auto it = index.find({k, t.compact()});
      if (it != index.end()) {
        g.edges.emplace_back(it->second, child);
        break;
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string to_dot(const FragmentGraph& g) {
  std::ostringstream out;
  out << "digraph fragment {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Preorder& p = g.nodes[i];
    std::string type = "(";
    for (std::size_t k = 0; k < p.type().size(); ++k) type += (k ? "," : "") + std::to_string(p.type()[k]);
    type += ")";
    out << "  n" << i << " [label=\"" << escape(p.compact()) << "\\nrank " << p.rank() << ", degree "
        << p.degree() << ", type " << type << "\", tooltip=\"" << escape(json::encode_rows(p).dump())
        << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zrq
