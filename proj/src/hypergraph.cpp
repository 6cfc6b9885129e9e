#include "sparsehg/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace sparsehg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::UndeclaredVertex: return "UndeclaredVertex";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotKSparse: return "NotKSparse";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::NoHomomorphism: return "NoHomomorphism";
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::NoHyperpath: return "NoHyperpath";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ClassOverflow: return "ClassOverflow";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::NotATreeNode: return "NotATreeNode";
    case ErrorCode::NotSparseDistribution: return "NotSparseDistribution";
    case ErrorCode::InvalidFlow: return "InvalidFlow";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Hypergraph ---------------------------------------------------------------

Hypergraph::Hypergraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex();
}

VertexId Hypergraph::add_vertex(std::string label) {
  auto id = static_cast<VertexId>(vertex_labels_.size());
  if (label.empty()) label = std::to_string(id);
  if (!vertex_index_.emplace(label, id).second)
    throw Error(ErrorCode::DuplicateLabel, "duplicate vertex label '" + label + "'");
  vertex_labels_.push_back(std::move(label));
  incidence_.emplace_back();
  return id;
}

EdgeId Hypergraph::add_edge(std::vector<VertexId> vertices, std::string label) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyEdge, "edge without vertices");
  for (VertexId v : vertices)
    if (v >= num_vertices())
      throw Error(ErrorCode::UnknownVertex, "edge references unknown vertex " + std::to_string(v));
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error(ErrorCode::DuplicateVertexInEdge, "vertex repeated within one edge");

  auto id = static_cast<EdgeId>(edges_.size());
  if (label.empty()) label = std::to_string(id);
  if (!edge_index_.emplace(label, id).second)
    throw Error(ErrorCode::DuplicateLabel, "duplicate edge label '" + label + "'");
  for (VertexId v : vertices) incidence_[v].push_back(id);
  rank_ = std::max(rank_, vertices.size());
  edges_.push_back(std::move(vertices));
  edge_labels_.push_back(std::move(label));
  return id;
}

bool Hypergraph::contains(EdgeId e, VertexId v) const {
  const auto& vs = edges_.at(e);
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Hypergraph::find_edge(std::string_view label) const {
  auto it = edge_index_.find(std::string(label));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

// UndirectedGraph ----------------------------------------------------------

UndirectedGraph::UndirectedGraph(Hypergraph h) : h_(std::move(h)) {
  neighbours_.resize(h_.num_vertices());
  neighbour_edges_.resize(h_.num_vertices());
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(h_.num_vertices());
  for (EdgeId e = 0; e < h_.num_edges(); ++e) {
    auto ends = h_.edge(e);
    if (ends.size() != 2)
      throw Error(ErrorCode::NotAGraph, "edge '" + h_.edge_label(e) + "' does not have two vertices");
    adj[ends[0]].emplace_back(ends[1], e);
    adj[ends[1]].emplace_back(ends[0], e);
  }
  for (VertexId v = 0; v < adj.size(); ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    for (std::size_t i = 0; i < adj[v].size(); ++i) {
      if (i > 0 && adj[v][i].first == adj[v][i - 1].first)
        throw Error(ErrorCode::NotAGraph, "parallel edges at vertex '" + h_.vertex_label(v) + "'");
      neighbours_[v].push_back(adj[v][i].first);
      neighbour_edges_[v].push_back(adj[v][i].second);
    }
  }
}

UndirectedGraph UndirectedGraph::from_pairs(
    std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Hypergraph h(n);
  for (auto [u, v] : pairs) h.add_edge({u, v});
  return UndirectedGraph(std::move(h));
}

std::size_t UndirectedGraph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& ns : neighbours_) d = std::max(d, ns.size());
  return d;
}

std::optional<EdgeId> UndirectedGraph::edge_between(VertexId u, VertexId v) const {
  const auto& ns = neighbours_.at(u);
  auto it = std::lower_bound(ns.begin(), ns.end(), v);
  if (it == ns.end() || *it != v) return std::nullopt;
  return neighbour_edges_[u][static_cast<std::size_t>(it - ns.begin())];
}

// DirectedGraph ------------------------------------------------------------

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels)
    : labels_(std::move(labels)), arcs_(std::move(arcs)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "label count does not match vertex count");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  out_.resize(n);
  in_.resize(n);
  for (auto [u, v] : arcs_) {
    if (u >= n || v >= n) throw Error(ErrorCode::UnknownVertex, "arc references unknown vertex");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& ins : in_) std::sort(ins.begin(), ins.end());
}

bool DirectedGraph::has_arc(VertexId u, VertexId v) const {
  const auto& os = out_.at(u);
  return std::binary_search(os.begin(), os.end(), v);
}

std::size_t DirectedGraph::max_indegree() const noexcept {
  std::size_t d = 0;
  for (const auto& ins : in_) d = std::max(d, ins.size());
  return d;
}

bool DirectedGraph::is_antisymmetric() const {
  for (auto [u, v] : arcs_)
    if (u != v && has_arc(v, u)) return false;
  return true;
}

bool DirectedGraph::has_loop() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.first == a.second; });
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view label) const {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

// Orientation --------------------------------------------------------------

Orientation::Orientation(const Hypergraph& h, std::vector<VertexId> heads)
    : num_vertices_(h.num_vertices()), heads_(std::move(heads)) {
  if (heads_.size() != h.num_edges())
    throw Error(ErrorCode::InvalidArgument, "orientation must assign every edge");
  for (EdgeId e = 0; e < heads_.size(); ++e)
    if (!h.contains(e, heads_[e]))
      throw Error(ErrorCode::InvalidArgument,
                  "edge '" + h.edge_label(e) + "' oriented to a non-incident vertex");
}

// Structural operations ----------------------------------------------------

Subhypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& c) {
  std::vector<std::optional<VertexId>> remap(h.num_vertices());
  Subhypergraph sub;
  for (VertexId v : make_vertex_set(c)) {
    if (v >= h.num_vertices())
      throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in hypergraph");
    remap[v] = sub.graph.add_vertex(h.vertex_label(v));
    sub.vertex_origin.push_back(v);
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<VertexId> mapped;
    bool inside = true;
    for (VertexId v : h.edge(e)) {
      if (!remap[v]) {
        inside = false;
        break;
      }
      mapped.push_back(*remap[v]);
    }
    if (!inside) continue;
    sub.graph.add_edge(std::move(mapped), h.edge_label(e));
    sub.edge_origin.push_back(e);
  }
  return sub;
}

std::size_t count_induced_edges(const Hypergraph& h, const VertexSet& x) {
  std::vector<char> in(h.num_vertices(), 0);
  for (VertexId v : x) in[v] = 1;
  std::size_t count = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    if (std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return in[v] != 0; })) ++count;
  }
  return count;
}

namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // smaller id becomes the representative so components come out ordered
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

std::vector<VertexSet> connected_components(const Hypergraph& h) {
  DisjointSets sets(h.num_vertices());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t i = 1; i < vs.size(); ++i) sets.unite(vs[0], vs[i]);
  }
  std::vector<VertexSet> components;
  std::vector<std::size_t> slot(h.num_vertices(), SIZE_MAX);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    VertexId root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(v);
  }
  return components;
}

std::vector<std::size_t> preimage_counts(const Orientation& o) {
  std::vector<std::size_t> counts(o.num_vertices(), 0);
  for (VertexId head : o.heads()) ++counts[head];
  return counts;
}

// Text formats -------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

[[noreturn]] void syntax_error(std::size_t line_no, const std::string& what,
                               ErrorCode code = ErrorCode::Syntax) {
  throw Error(code, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  Hypergraph h;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "v") {
        if (tokens.size() != 2) syntax_error(line_no, "expected `v <label>`");
        h.add_vertex(tokens[1]);
      } else if (tokens[0] == "e") {
        if (tokens.size() < 2) syntax_error(line_no, "expected `e <label> <v1> ...`");
        std::vector<VertexId> vs;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          auto v = h.find_vertex(tokens[i]);
          if (!v)
            syntax_error(line_no, "undeclared vertex '" + tokens[i] + "'",
                         ErrorCode::UndeclaredVertex);
          vs.push_back(*v);
        }
        h.add_edge(std::move(vs), tokens[1]);
      } else {
        syntax_error(line_no, "unknown directive '" + tokens[0] + "'");
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Syntax || err.code() == ErrorCode::UndeclaredVertex) throw;
      syntax_error(line_no, err.what(), err.code());
    }
  }
  return h;
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out;
  for (VertexId v = 0; v < h.num_vertices(); ++v) out += "v " + h.vertex_label(v) + "\n";
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out += "e " + h.edge_label(e);
    for (VertexId v : h.edge(e)) out += " " + h.vertex_label(v);
    out += "\n";
  }
  return out;
}

DirectedGraph parse_digraph(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<DirectedGraph::Arc> arcs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 2) syntax_error(line_no, "expected `v <label>`");
      auto id = static_cast<VertexId>(labels.size());
      if (!index.emplace(tokens[1], id).second)
        syntax_error(line_no, "duplicate vertex label '" + tokens[1] + "'", ErrorCode::DuplicateLabel);
      labels.push_back(tokens[1]);
    } else if (tokens[0] == "a") {
      if (tokens.size() != 3) syntax_error(line_no, "expected `a <from> <to>`");
      auto from = index.find(tokens[1]);
      auto to = index.find(tokens[2]);
      if (from == index.end() || to == index.end())
        syntax_error(line_no, "undeclared vertex in arc", ErrorCode::UndeclaredVertex);
      arcs.emplace_back(from->second, to->second);
    } else {
      syntax_error(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  std::size_t n = labels.size();
  return DirectedGraph(n, std::move(arcs), std::move(labels));
}

DirectedGraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_digraph(in);
}

std::string serialize_digraph(const DirectedGraph& g) {
  std::string out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out += "v " + g.label(v) + "\n";
  for (auto [u, v] : g.arcs()) out += "a " + g.label(u) + " " + g.label(v) + "\n";
  return out;
}

std::string format_orientation(const Hypergraph& h, const Orientation& o) {
  std::string out;
  for (EdgeId e = 0; e < o.num_edges(); ++e)
    out += h.edge_label(e) + " -> " + h.vertex_label(o[e]) + "\n";
  return out;
}

}  // namespace sparsehg
