#include "sparsehg/spanning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace sparsehg {

namespace {

bool meets(std::span<const VertexId> a, std::span<const VertexId> b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::string join_labels(const Hypergraph& h, const VertexSet& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += h.vertex_label(vs[i]);
  }
  return out;
}

std::string join_edges(const Hypergraph& h, const EdgeSet& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i > 0) out += ",";
    out += h.edge_label(es[i]);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

// Orders ---------------------------------------------------------------------

bool VertexOrder::is_total_on(const std::vector<std::uint32_t>& xs) const {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!comparable(xs[i], xs[j])) return false;
  return true;
}

std::vector<std::uint32_t> VertexOrder::sorted(std::vector<std::uint32_t> xs) const {
  std::stable_sort(xs.begin(), xs.end(), [this](auto a, auto b) { return less(a, b); });
  return xs;
}

std::vector<std::string> check_partial_order(const VertexOrder& order) {
  std::vector<std::string> out;
  const auto& c = order.carrier;
  for (auto x : c)
    if (!order.leq(x, x)) out.push_back("NotReflexive " + std::to_string(x));
  for (auto x : c)
    for (auto y : c)
      if (x != y && order.leq(x, y) && order.leq(y, x))
        out.push_back("NotAntisymmetric " + std::to_string(x) + " " + std::to_string(y));
  for (auto x : c)
    for (auto y : c) {
      if (!order.leq(x, y)) continue;
      for (auto z : c)
        if (order.leq(y, z) && !order.leq(x, z))
          out.push_back("NotTransitive " + std::to_string(x) + " " + std::to_string(y) + " " +
                        std::to_string(z));
    }
  return out;
}

std::vector<std::string> check_tree_order(const VertexOrder& order) {
  auto out = check_partial_order(order);
  const auto& c = order.carrier;
  for (auto a : c) {
    std::vector<std::uint32_t> down;
    for (auto x : c)
      if (order.leq(x, a)) down.push_back(x);
    if (!order.is_total_on(down)) out.push_back("DownsetNotChain " + std::to_string(a));
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      std::vector<std::uint32_t> lower;
      for (auto x : c)
        if (order.leq(x, c[i]) && order.leq(x, c[j])) lower.push_back(x);
      if (lower.empty()) continue;
      bool has_max = std::any_of(lower.begin(), lower.end(), [&](auto m) {
        return std::all_of(lower.begin(), lower.end(), [&](auto x) { return order.leq(x, m); });
      });
      if (!has_max) out.push_back("NoInfimum " + std::to_string(c[i]) + " " + std::to_string(c[j]));
    }
  return out;
}

// Hyperpaths -----------------------------------------------------------------

bool is_hyperpath(const Hypergraph& h, const Hyperpath& p) {
  if (p.empty()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= h.num_edges()) return false;
    for (std::size_t k = i + 1; k < p.size(); ++k)
      if (meets(h.edge(p[i]), h.edge(p[k])) != (k - i <= 1)) return false;
  }
  return true;
}

namespace {

// Breadth-first search over edges, sources = edges containing u, scanning
// neighbouring edges in id order. Returns the path to the first dequeued
// edge accepted by `done`.
template <class Done>
std::optional<Hyperpath> edge_bfs(const Hypergraph& h, VertexId u, Done done) {
  if (u >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "unknown vertex");
  const std::size_t none = h.num_edges();
  std::vector<std::size_t> prev(h.num_edges(), none);
  std::vector<char> seen(h.num_edges(), 0);
  std::deque<EdgeId> queue;
  for (EdgeId e : h.incident_edges(u)) {
    seen[e] = 1;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    EdgeId e = queue.front();
    queue.pop_front();
    if (done(e)) {
      Hyperpath path;
      for (std::size_t x = e; x != none; x = prev[x]) path.push_back(static_cast<EdgeId>(x));
      std::reverse(path.begin(), path.end());
      return path;
    }
    std::vector<EdgeId> next;
    for (VertexId x : h.edge(e))
      for (EdgeId f : h.incident_edges(x))
        if (!seen[f]) next.push_back(f);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (EdgeId f : next) {
      seen[f] = 1;
      prev[f] = e;
      queue.push_back(f);
    }
  }
  return std::nullopt;
}

}  // namespace

Hyperpath find_hyperpath(const Hypergraph& h, VertexId u, VertexId v) {
  if (v >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "unknown vertex");
  auto path = edge_bfs(h, u, [&](EdgeId e) { return h.contains(e, v); });
  if (!path)
    throw Error(ErrorCode::NoHyperpath, "no hyperpath connects " + h.vertex_label(u) + " and " +
                                            h.vertex_label(v));
  return *path;
}

Hyperpath find_hyperpath_to_edge(const Hypergraph& h, VertexId u, EdgeId target) {
  if (target >= h.num_edges()) throw Error(ErrorCode::InvalidArgument, "unknown edge");
  auto path = edge_bfs(h, u, [&](EdgeId e) { return e == target; });
  if (!path)
    throw Error(ErrorCode::NoHyperpath,
                "no hyperpath from " + h.vertex_label(u) + " to edge " + h.edge_label(target));
  return *path;
}

// Priority trees -------------------------------------------------------------

std::optional<std::size_t> PriorityTree::edge_class(EdgeId e) const {
  for (std::size_t k = 0; k < edge_classes.size(); ++k)
    if (std::binary_search(edge_classes[k].begin(), edge_classes[k].end(), e)) return k;
  return std::nullopt;
}

std::optional<std::size_t> PriorityTree::vertex_class(VertexId v) const {
  for (std::size_t k = 0; k < vertex_classes.size(); ++k)
    if (std::binary_search(vertex_classes[k].begin(), vertex_classes[k].end(), v)) return k;
  return std::nullopt;
}

namespace {

void insert_sorted(std::vector<std::uint32_t>& xs, std::uint32_t x) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), x), x);
}


struct BranchContext {
  const Hypergraph& h;
  VertexId root;
  std::vector<int> eclass, vclass;

  BranchContext(const Hypergraph& hh, VertexId r) : h(hh), root(r), eclass(hh.num_edges(), -1), vclass(hh.num_vertices(), -1) {}
  BranchContext(const Hypergraph& hh, const PriorityTree& t) : BranchContext(hh, t.root) {
    for (std::size_t k = 0; k < t.edge_classes.size(); ++k) {
      for (EdgeId e : t.edge_classes[k]) eclass[e] = static_cast<int>(k);
      for (VertexId v : t.vertex_classes[k]) vclass[v] = static_cast<int>(k);
    }
  }

  // Can `next` follow `path`, which already is a branch?
  bool extends(const Hyperpath& path, EdgeId next) const {
    const EdgeId last = path.back();
    if (std::find(path.begin(), path.end(), next) != path.end()) return false;
    if (!meets(h.edge(last), h.edge(next))) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
      if (meets(h.edge(path[j]), h.edge(next))) return false;
    if (path.size() == 1 && h.contains(next, root)) return false;
    const int k_last = eclass[last], k_next = eclass[next];
    for (VertexId x : h.edge(next))
      if (!h.contains(last, x) && vclass[x] != k_next) return false;
    if (k_last != k_next) {
      // Least class other than its own that the entering edge meets.
      int least = -1;
      for (VertexId x : h.edge(next))
        if (vclass[x] != k_next && (least < 0 || vclass[x] < least)) least = vclass[x];
      if (least != k_last) return false;
    }
    return true;
  }

  template <class Visit>
  void for_each_branch(const EdgeSet& edges, std::size_t cap, Visit visit) const {
    std::size_t count = 0;
    Hyperpath path;
    auto walk = [&](auto&& self) -> void {
      if (++count > cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " branches");
      visit(path);
      for (EdgeId f : edges)
        if (eclass[f] >= 0 && extends(path, f)) {
          path.push_back(f);
          self(self);
          path.pop_back();
        }
    };
    for (EdgeId e : edges)
      if (eclass[e] >= 0 && h.contains(e, root)) {
        path.assign(1, e);
        walk(walk);
      }
  }
};

}  // namespace

PriorityTree build_priority_tree(const Hypergraph& h, VertexId root, const EdgeSet& l0,
                                 std::size_t m) {
  if (root >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "unknown root");
  if (l0.empty()) throw Error(ErrorCode::InvalidArgument, "leaf edge set is empty");
  EdgeSet leaves0(l0);
  std::sort(leaves0.begin(), leaves0.end());
  leaves0.erase(std::unique(leaves0.begin(), leaves0.end()), leaves0.end());
  for (EdgeId e : leaves0)
    if (e >= h.num_edges()) throw Error(ErrorCode::InvalidArgument, "unknown edge in leaf set");

  PriorityTree t;
  t.root = root;
  t.num_classes = m == 0 ? std::max<std::size_t>(h.rank(), 1) : m;
  t.edge_classes.assign(t.num_classes, {});
  t.vertex_classes.assign(t.num_classes, {});
  std::vector<int> vclass(h.num_vertices(), -1);

  for (EdgeId leaf : leaves0) {
    auto in_tree = [&](VertexId x) { return vclass[x] >= 0; };
    if (!t.edges.empty()) {
      auto ve = h.edge(leaf);
      if (std::all_of(ve.begin(), ve.end(), in_tree)) continue;
    }
    Hyperpath path;
    try {
      path = find_hyperpath_to_edge(h, root, leaf);
    } catch (const Error&) {
      throw Error(ErrorCode::Disconnected,
                  "edge " + h.edge_label(leaf) + " is not reachable from the root");
    }
    std::size_t first = 0;
    std::size_t cls = 0;
    if (!t.edges.empty()) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        auto vs = h.edge(path[i]);
        if (std::any_of(vs.begin(), vs.end(), in_tree)) first = i;
      }
      std::vector<char> used(t.num_classes + 1, 0);
      for (VertexId x : h.edge(path[first]))
        if (vclass[x] >= 0) used[vclass[x]] = 1;
      while (cls < t.num_classes && used[cls]) ++cls;
      if (cls == t.num_classes)
        throw Error(ErrorCode::ClassOverflow, "no free class index below " +
                                                  std::to_string(t.num_classes) + " for edge " +
                                                  h.edge_label(path[first]));
    }
    PriorityStep step;
    step.edges.assign(path.begin() + static_cast<std::ptrdiff_t>(first), path.end());
    step.cls = cls;
    step.leaf = leaf;
    for (EdgeId e : step.edges) {
      insert_sorted(t.edges, e);
      insert_sorted(t.edge_classes[cls], e);
      for (VertexId x : h.edge(e))
        if (vclass[x] < 0) {
          vclass[x] = static_cast<int>(cls);
          step.new_vertices.push_back(x);
          insert_sorted(t.nodes, x);
          insert_sorted(t.vertex_classes[cls], x);
        }
    }
    std::sort(step.new_vertices.begin(), step.new_vertices.end());
    insert_sorted(t.leaves, leaf);
    t.log.push_back(std::move(step));
  }
  return t;
}

std::vector<std::string> validate_priority_tree(const Hypergraph& h, const PriorityTree& t) {
  std::vector<std::string> out;
  const std::size_t m = t.num_classes;
  std::vector<int> vclass(h.num_vertices(), -1);
  PriorityTree replay;
  replay.edge_classes.assign(m, {});
  replay.vertex_classes.assign(m, {});
  for (std::size_t s = 0; s < t.log.size(); ++s) {
    const auto& step = t.log[s];
    const std::string where = "step " + std::to_string(s) + ": ";
    if (!is_hyperpath(h, step.edges)) {
      out.push_back(where + "NotAHyperpath");
      continue;
    }
    if (step.edges.back() != step.leaf) out.push_back(where + "LeafNotLast");
    if (step.cls >= m) {
      out.push_back(where + "ClassOutOfRange");
      continue;
    }
    if (s == 0) {
      bool root_ok = h.contains(step.edges[0], t.root) &&
                     (step.edges.size() == 1 || !h.contains(step.edges[1], t.root));
      if (!root_ok) out.push_back(where + "RootNotInFirstEdge");
      if (step.cls != 0) out.push_back(where + "BaseClassNotZero");
    } else {
      for (std::size_t i = 0; i < step.edges.size(); ++i) {
        auto vs = h.edge(step.edges[i]);
        bool touches = std::any_of(vs.begin(), vs.end(), [&](VertexId x) { return vclass[x] >= 0; });
        if (touches != (i == 0)) out.push_back(where + "SuffixMeetsTree " + h.edge_label(step.edges[i]));
      }
      auto first = h.edge(step.edges[0]);
      if (std::all_of(first.begin(), first.end(), [&](VertexId x) { return vclass[x] >= 0; }))
        out.push_back(where + "FirstEdgeInsideTree");
      std::vector<char> used(m + 1, 0);
      for (VertexId x : first)
        if (vclass[x] >= 0) used[vclass[x]] = 1;
      std::size_t k = 0;
      while (k < m && used[k]) ++k;
      if (k != step.cls) out.push_back(where + "ClassNotMinimal");
    }
    VertexSet fresh;
    for (EdgeId e : step.edges) {
      if (std::binary_search(replay.edges.begin(), replay.edges.end(), e)) {
        out.push_back(where + "EdgeAddedTwice " + h.edge_label(e));
        continue;
      }
      insert_sorted(replay.edges, e);
      insert_sorted(replay.edge_classes[step.cls], e);
      for (VertexId x : h.edge(e))
        if (vclass[x] < 0) {
          vclass[x] = static_cast<int>(step.cls);
          fresh.push_back(x);
          insert_sorted(replay.nodes, x);
          insert_sorted(replay.vertex_classes[step.cls], x);
        }
    }
    std::sort(fresh.begin(), fresh.end());
    if (fresh != step.new_vertices) out.push_back(where + "NewVerticesMismatch");
    insert_sorted(replay.leaves, step.leaf);
  }
  if (replay.nodes != t.nodes || replay.edges != t.edges || replay.leaves != t.leaves ||
      replay.edge_classes != t.edge_classes || replay.vertex_classes != t.vertex_classes)
    out.push_back("ReplayMismatch");
  if (!std::binary_search(t.nodes.begin(), t.nodes.end(), t.root)) out.push_back("RootNotInTree");
  return out;
}


std::vector<Hyperpath> branches(const Hypergraph& h, const PriorityTree& t, std::size_t cap) {
  std::vector<Hyperpath> out;
  BranchContext(h, t).for_each_branch(t.edges, cap, [&](const Hyperpath& b) { out.push_back(b); });
  return out;
}

VertexOrder edge_order(const Hypergraph& h, const PriorityTree& t, std::size_t cap) {
  auto all = branches(h, t, cap);
  const std::size_t words = (all.size() + 63) / 64;
  auto sets = std::make_shared<std::map<EdgeId, std::vector<std::uint64_t>>>();
  for (EdgeId e : t.edges) (*sets)[e].assign(words, 0);
  for (std::size_t b = 0; b < all.size(); ++b)
    for (EdgeId e : all[b]) (*sets)[e][b / 64] |= std::uint64_t{1} << (b % 64);
  VertexOrder order;
  order.carrier = t.edges;
  order.kind = VertexOrder::Kind::Partial;
  order.leq = [sets](std::uint32_t e, std::uint32_t f) {
    if (e == f) return true;
    auto ie = sets->find(e), jf = sets->find(f);
    if (ie == sets->end() || jf == sets->end()) return false;
    for (std::size_t w = 0; w < ie->second.size(); ++w)
      if (jf->second[w] & ~ie->second[w]) return false;
    return true;
  };
  return order;
}

std::vector<EquivClass> vertex_equiv(const Hypergraph& h, const PriorityTree& t) {
  BranchContext ctx(h, t);
  UnionFind uf(h.num_vertices());
  for (EdgeId e : t.edges) {
    std::optional<VertexId> first;
    for (VertexId x : h.edge(e)) {
      if (ctx.vclass[x] != ctx.eclass[e]) continue;
      if (first) uf.unite(*first, x); else first = x;
    }
  }
  std::map<std::size_t, VertexSet> groups;
  for (VertexId v : t.nodes) groups[uf.find(v)].push_back(v);

  std::vector<EquivClass> out;
  for (auto& [rep, members] : groups) {
    EquivClass c;
    c.members = members;
    c.cls = static_cast<std::size_t>(ctx.vclass[members.front()]);
    std::vector<EdgeId> leaves;
    for (EdgeId e : t.leaves) {
      if (ctx.eclass[e] != static_cast<int>(c.cls)) continue;
      auto vs = h.edge(e);
      bool inside = std::any_of(vs.begin(), vs.end(), [&](VertexId x) {
        return std::binary_search(members.begin(), members.end(), x);
      });
      if (inside) leaves.push_back(e);
    }
    if (leaves.size() != 1)
      throw Error(ErrorCode::MalformedTree, "class of " + h.vertex_label(members.front()) + " has " +
                                                std::to_string(leaves.size()) + " leaf edges");
    c.leaf = leaves.front();
    auto step = std::find_if(t.log.begin(), t.log.end(),
                             [&](const PriorityStep& s) { return s.new_vertices == members; });
    if (step == t.log.end())
      throw Error(ErrorCode::MalformedTree,
                  "class of " + h.vertex_label(members.front()) + " matches no construction step");
    c.path = step->edges;
    for (VertexId x : members) {
      std::size_t j = 0;
      for (std::size_t i = 0; i < c.path.size(); ++i)
        if (h.contains(c.path[i], x)) j = i;
      c.eta_start.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

VertexOrder priority_tree_linear_order(const Hypergraph& h, const PriorityTree& t,
                                       const std::vector<EdgeId>& leaf_order) {
  std::map<EdgeId, std::size_t> leaf_rank;
  if (leaf_order.empty()) {
    for (std::size_t i = 0; i < t.leaves.size(); ++i) leaf_rank[t.leaves[i]] = i;
  } else {
    for (std::size_t i = 0; i < leaf_order.size(); ++i) leaf_rank.emplace(leaf_order[i], i);
    for (EdgeId e : t.leaves)
      if (!leaf_rank.count(e))
        throw Error(ErrorCode::InvalidArgument, "leaf order omits edge " + h.edge_label(e));
  }
  using Key = std::tuple<std::size_t, std::size_t, std::ptrdiff_t, VertexId>;
  auto keys = std::make_shared<std::map<VertexId, Key>>();
  for (const auto& c : vertex_equiv(h, t))
    for (std::size_t i = 0; i < c.members.size(); ++i)
      (*keys)[c.members[i]] = Key{c.cls, leaf_rank.at(c.leaf),
                                  -static_cast<std::ptrdiff_t>(c.eta_start[i]), c.members[i]};
  VertexOrder order;
  order.carrier = t.nodes;
  order.kind = VertexOrder::Kind::Linear;
  order.leq = [keys](std::uint32_t x, std::uint32_t y) {
    auto i = keys->find(x), j = keys->find(y);
    if (i == keys->end() || j == keys->end()) return x == y;
    return i->second <= j->second;
  };
  return order;
}

// Depth-first spanning trees -------------------------------------------------

std::string format_node_type(NodeType t) {
  switch (t.kind) {
    case NodeType::Kind::Root: return "root0";
    case NodeType::Kind::Succ: return "succ_" + std::to_string(t.index);
    case NodeType::Kind::Limit: return "limit_" + std::to_string(t.index);
  }
  return "?";
}

DepthFirstSpanningTree::DepthFirstSpanningTree(const Hypergraph& h, std::vector<DfstNode> nodes)
    : node_index_(h.num_vertices(), kNone), owner_(h.num_vertices()) {
  const std::size_t n = h.num_vertices();
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    if (nd.vertex >= n) throw Error(ErrorCode::MalformedTree, "tree node is not a vertex");
    if (node_index_[nd.vertex] != kNone)
      throw Error(ErrorCode::MalformedTree, "vertex " + h.vertex_label(nd.vertex) + " listed twice");
    node_index_[nd.vertex] = i;
    for (EdgeId e : nd.attach)
      if (e >= h.num_edges()) throw Error(ErrorCode::MalformedTree, "attach set names an unknown edge");
    if (!nd.parent) {
      if (root) throw Error(ErrorCode::MalformedTree, "two roots");
      root = i;
    }
  }
  if (!root) throw Error(ErrorCode::MalformedTree, "no root");
  std::vector<std::vector<std::size_t>> children(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].parent) continue;
    VertexId p = *nodes[i].parent;
    if (p >= n || node_index_[p] == kNone)
      throw Error(ErrorCode::MalformedTree, "parent of " + h.vertex_label(nodes[i].vertex) + " is not a node");
    children[node_index_[p]].push_back(i);
  }
  // Preorder walk from the root; parents come first.
  std::vector<std::size_t> order;
  std::vector<std::size_t> depth(nodes.size(), 0), pre(nodes.size(), 0), post(nodes.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{*root, 0}};
  std::size_t clock = 0;
  pre[*root] = clock++;
  order.push_back(*root);
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    if (next == children[i].size()) {
      post[i] = clock++;
      stack.pop_back();
      continue;
    }
    std::size_t c = children[i][next++];
    depth[c] = depth[i] + 1;
    pre[c] = clock++;
    order.push_back(c);
    stack.emplace_back(c, 0);
  }
  if (order.size() != nodes.size()) throw Error(ErrorCode::MalformedTree, "parent links contain a cycle");

  for (std::size_t i : order) {
    nodes_.push_back(nodes[i]);
    depth_.push_back(depth[i]);
    pre_.push_back(pre[i]);
    post_.push_back(post[i]);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) node_index_[nodes_[i].vertex] = i;
  for (auto& nd : nodes_) std::sort(nd.attach.begin(), nd.attach.end());

  std::vector<std::vector<std::size_t>> owners(n);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    VertexSet a{nodes_[i].vertex};
    for (EdgeId e : nodes_[i].attach)
      for (VertexId x : h.edge(e)) {
        bool claimed = std::any_of(owners[x].begin(), owners[x].end(), [&](std::size_t o) {
          return o != i && pre_[o] < pre_[i] && post_[i] < post_[o];
        });
        if (!claimed) a.push_back(x);
      }
    a = make_vertex_set(std::move(a));
    for (VertexId x : a) {
      owners[x].push_back(i);
      if (!owner_[x]) owner_[x] = nodes_[i].vertex;
    }
    aux_.push_back(std::move(a));
  }
}

const DfstNode& DepthFirstSpanningTree::node(VertexId v) const {
  if (!is_node(v)) throw Error(ErrorCode::NotATreeNode, "vertex " + std::to_string(v) + " is not a tree node");
  return nodes_[node_index_[v]];
}

std::size_t DepthFirstSpanningTree::depth(VertexId v) const {
  node(v);
  return depth_[node_index_[v]];
}

bool DepthFirstSpanningTree::tree_leq(VertexId u, VertexId v) const {
  if (!is_node(u) || !is_node(v)) return false;
  std::size_t i = node_index_[u], j = node_index_[v];
  return pre_[i] <= pre_[j] && post_[j] <= post_[i];
}

const VertexSet& DepthFirstSpanningTree::aux(VertexId v) const {
  node(v);
  return aux_[node_index_[v]];
}

std::optional<VertexId> DepthFirstSpanningTree::owner(VertexId x) const {
  return x < owner_.size() ? owner_[x] : std::nullopt;
}

DepthFirstSpanningTree build_dfst(const Hypergraph& h, VertexId root) {
  const std::size_t n = h.num_vertices();
  if (root >= n) throw Error(ErrorCode::UnknownVertex, "unknown root");
  std::vector<DfstNode> nodes{{root, std::nullopt, {}, {}}};
  std::vector<std::size_t> depth{0};
  std::vector<std::optional<std::size_t>> owner(n);  // vertex -> node index
  std::vector<VertexSet> aux{{root}};
  owner[root] = 0;
  std::size_t covered = 1;

  std::vector<std::size_t> parent_index{0};
  auto leq = [&](std::size_t a, std::size_t b) {
    while (depth[b] > depth[a]) b = parent_index[b];
    return a == b;
  };
  auto border = [&](EdgeId e) {
    std::vector<std::size_t> b;
    for (VertexId x : h.edge(e))
      if (owner[x]) b.push_back(*owner[x]);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  };

  while (covered < n) {
    UnionFind uf(n);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      std::optional<VertexId> first;
      for (VertexId x : h.edge(e)) {
        if (owner[x]) continue;
        if (first) uf.unite(*first, x); else first = x;
      }
    }
    VertexId least = 0;
    while (owner[least]) ++least;
    const std::size_t comp = uf.find(least);
    auto in_c = [&](VertexId x) { return !owner[x] && uf.find(x) == comp; };

    // N(C/T) must be a chain; its maximum is the deepest element.
    std::vector<std::size_t> reach;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      auto vs = h.edge(e);
      if (!std::any_of(vs.begin(), vs.end(), in_c)) continue;
      for (std::size_t b : border(e)) reach.push_back(b);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    if (reach.empty())
      throw Error(ErrorCode::Disconnected, "vertex " + h.vertex_label(least) + " is not reachable from the root");
    std::sort(reach.begin(), reach.end(), [&](auto a, auto b) { return depth[a] < depth[b]; });
    for (std::size_t i = 0; i + 1 < reach.size(); ++i)
      if (!leq(reach[i], reach[i + 1])) throw std::logic_error("N(C/T) is not a chain");
    const std::size_t u = reach.back();

    EdgeId chosen = 0;
    bool found = false;
    for (EdgeId e = 0; e < h.num_edges() && !found; ++e) {
      auto vs = h.edge(e);
      bool hits_u = std::any_of(vs.begin(), vs.end(), [&](VertexId x) { return owner[x] == u; });
      if (hits_u && std::any_of(vs.begin(), vs.end(), in_c)) {
        chosen = e;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no edge joins the chain maximum to the component");
    auto vs = h.edge(chosen);
    const VertexId v = *std::find_if(vs.begin(), vs.end(), in_c);

    std::vector<char> used(h.rank() + 1, 0);
    for (std::size_t b : border(chosen))
      if (nodes[b].type.kind == NodeType::Kind::Succ) used[nodes[b].type.index] = 1;
    std::size_t l = 0;
    while (used[l]) ++l;
    if (l + 1 > h.rank()) throw std::logic_error("no free successor type");

    const std::size_t idx = nodes.size();
    nodes.push_back({v, nodes[u].vertex, {NodeType::Kind::Succ, l}, {chosen}});
    depth.push_back(depth[u] + 1);
    parent_index.push_back(u);
    VertexSet a;
    for (VertexId x : vs)
      if (!owner[x]) {
        owner[x] = idx;
        a.push_back(x);
        ++covered;
      }
    aux.push_back(std::move(a));
  }

  DepthFirstSpanningTree t(h, nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (t.aux(nodes[i].vertex) != aux[i]) throw std::logic_error("auxiliary sets disagree with the construction");
  return t;
}

VertexSet auxiliary_nodes(const DepthFirstSpanningTree& t, VertexId v) { return t.aux(v); }

BorderSet b_set(const DepthFirstSpanningTree& t, const VertexSet& x) {
  BorderSet out;
  for (const auto& nd : t.nodes()) {
    const auto& a = t.aux(nd.vertex);
    if (std::any_of(x.begin(), x.end(), [&](VertexId y) { return std::binary_search(a.begin(), a.end(), y); }))
      out.nodes.push_back(nd.vertex);
  }
  std::sort(out.nodes.begin(), out.nodes.end());
  if (out.nodes.empty()) return out;
  VertexId top = out.nodes.front();
  for (VertexId v : out.nodes) {
    if (!t.tree_leq(top, v) && !t.tree_leq(v, top)) return out;
    if (t.tree_leq(top, v)) top = v;
  }
  for (VertexId v : out.nodes)
    for (VertexId w : out.nodes)
      if (!t.tree_leq(v, w) && !t.tree_leq(w, v)) return out;
  out.beta = top;
  return out;
}

std::vector<std::string> validate_dfst(const Hypergraph& h, const DepthFirstSpanningTree& t) {
  std::vector<std::string> out;
  const auto& nodes = t.nodes();
  auto label = [&](VertexId v) { return h.vertex_label(v); };

  std::vector<std::vector<VertexId>> holders(h.num_vertices());
  for (const auto& nd : nodes)
    for (VertexId x : t.aux(nd.vertex)) holders[x].push_back(nd.vertex);
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    if (holders[x].empty()) out.push_back("Uncovered " + label(x));
    for (std::size_t i = 1; i < holders[x].size(); ++i)
      out.push_back("AuxOverlap " + label(holders[x][0]) + " " + label(holders[x][i]) + " at " + label(x));
  }
  for (const auto& nd : nodes)
    for (VertexId x : t.aux(nd.vertex))
      if (x != nd.vertex && t.is_node(x)) out.push_back("AuxContainsNode " + label(nd.vertex) + " " + label(x));

  std::map<EdgeId, VertexId> attached_to;
  for (const auto& nd : nodes)
    for (EdgeId e : nd.attach) {
      auto [it, fresh] = attached_to.emplace(e, nd.vertex);
      if (!fresh) out.push_back("AttachOverlap " + label(it->second) + " " + label(nd.vertex) + " at " + h.edge_label(e));
    }

  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    auto b = b_set(t, VertexSet(vs.begin(), vs.end()));
    if (b.nodes.empty()) out.push_back("EmptyBorder " + h.edge_label(e));
    else if (!b.beta) out.push_back("BorderNotChain " + h.edge_label(e));
  }

  const std::size_t m = h.rank();
  for (const auto& nd : nodes) {
    const std::string v = label(nd.vertex);
    switch (nd.type.kind) {
      case NodeType::Kind::Root:
        if (nd.parent) out.push_back("RootType " + v + ": not the root");
        if (!nd.attach.empty()) out.push_back("RootType " + v + ": attach set not empty");
        break;
      case NodeType::Kind::Succ: {
        if (!nd.parent) {
          out.push_back("SuccType " + v + ": no predecessor");
          break;
        }
        if (nd.type.index >= m) out.push_back("SuccType " + v + ": index out of range");
        if (nd.attach.size() != 1) {
          out.push_back("SuccType " + v + ": attach set is not a single edge");
          break;
        }
        const EdgeId e = nd.attach.front();
        if (!h.contains(e, nd.vertex)) out.push_back("SuccType " + v + ": not in its edge");
        auto vs = h.edge(e);
        auto border = b_set(t, VertexSet(vs.begin(), vs.end()));
        for (VertexId w : border.nodes)
          if (w != nd.vertex && t.node(w).type == nd.type)
            out.push_back("SuccType " + v + ": shares type with " + label(w));
        const auto& a = t.aux(nd.vertex);
        VertexSet rest;
        for (VertexId x : vs)
          if (!std::binary_search(a.begin(), a.end(), x)) rest.push_back(x);
        auto below = b_set(t, rest);
        if (!below.beta || *below.beta != *nd.parent)
          out.push_back("SuccType " + v + ": edge does not reach back to the parent");
        break;
      }
      case NodeType::Kind::Limit:
        out.push_back("LimitType " + v + ": has an immediate predecessor in a finite tree");
        break;
    }
  }
  if (nodes.empty() || nodes.front().type.kind != NodeType::Kind::Root) out.push_back("RootType: root is not of type 0");
  return out;
}

VertexOrder aux_preorder(const DepthFirstSpanningTree& t, const Hypergraph& h) {
  VertexOrder order;
  for (VertexId x = 0; x < h.num_vertices(); ++x)
    if (t.owner(x)) order.carrier.push_back(x);
  order.kind = VertexOrder::Kind::Preorder;
  order.leq = [&t](std::uint32_t x, std::uint32_t y) {
    if (x == y) return true;
    auto ox = t.owner(x), oy = t.owner(y);
    return ox && oy && t.tree_leq(*ox, *oy);
  };
  return order;
}

VertexOrder aux_order(const DepthFirstSpanningTree& t, const Hypergraph& h) {
  VertexOrder order = aux_preorder(t, h);
  order.kind = VertexOrder::Kind::Partial;
  order.leq = [&t](std::uint32_t x, std::uint32_t y) {
    if (x == y) return true;
    auto ox = t.owner(x), oy = t.owner(y);
    if (!ox || !oy) return false;
    if (*ox == *oy) return x < y;
    return t.tree_leq(*ox, *oy);
  };
  return order;
}

namespace {

// Per vertex a key whose order restricted to any edge is ⊑: depth of the
// owning tree node, then vertex id.
std::vector<std::pair<std::size_t, VertexId>> dfst_keys(const Hypergraph& h) {
  std::vector<std::pair<std::size_t, VertexId>> key(h.num_vertices());
  for (const auto& comp : connected_components(h)) {
    auto sub = induced_subhypergraph(h, comp);
    auto t = build_dfst(sub.graph, 0);
    for (VertexId x = 0; x < sub.graph.num_vertices(); ++x)
      key[sub.vertex_origin[x]] = {t.depth(*t.owner(x)), sub.vertex_origin[x]};
  }
  return key;
}

}  // namespace

Orientation dfst_orientation(const Hypergraph& h) {
  auto key = dfst_keys(h);
  std::vector<VertexId> heads;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    heads.push_back(*std::min_element(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return key[a] < key[b]; }));
  }
  return Orientation(h, std::move(heads));
}

std::vector<std::vector<VertexId>> edge_ordering(const Hypergraph& h) {
  auto key = dfst_keys(h);
  std::vector<std::vector<VertexId>> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    std::vector<VertexId> order(vs.begin(), vs.end());
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return key[a] < key[b]; });
    out.push_back(std::move(order));
  }
  return out;
}

std::vector<std::vector<VertexId>> neighbourhood_ordering(const DirectedGraph& g) {
  Hypergraph h;
  for (VertexId v = 0; v < g.num_vertices(); ++v) h.add_vertex(g.label(v));
  std::vector<std::optional<EdgeId>> edge_of(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto in = g.in_neighbours(v);
    if (in.empty()) continue;
    edge_of[v] = h.add_edge(std::vector<VertexId>(in.begin(), in.end()), "I(" + g.label(v) + ")");
  }
  auto orders = edge_ordering(h);
  std::vector<std::vector<VertexId>> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (edge_of[v]) out[v] = orders[*edge_of[v]];
  return out;
}

// Text formats ---------------------------------------------------------------

std::string format_dfst(const Hypergraph& h, const DepthFirstSpanningTree& t) {
  std::string out;
  for (const auto& nd : t.nodes()) {
    out += h.vertex_label(nd.vertex) + " parent=" + (nd.parent ? h.vertex_label(*nd.parent) : "-") +
           " type=" + format_node_type(nd.type) + " F=" + join_edges(h, nd.attach) +
           " A=" + join_labels(h, t.aux(nd.vertex)) + "\n";
  }
  return out;
}

std::string format_priority_tree(const Hypergraph& h, const PriorityTree& t) {
  std::string out;
  for (const auto& step : t.log)
    out += "class " + std::to_string(step.cls) + " leaf=" + h.edge_label(step.leaf) +
           " F=" + join_edges(h, step.edges) + " P=" + join_labels(h, step.new_vertices) + "\n";
  auto order = priority_tree_linear_order(h, t);
  out += "order";
  for (auto v : order.sorted(t.nodes)) out += " " + h.vertex_label(v);
  out += "\n";
  return out;
}

}  // namespace sparsehg
