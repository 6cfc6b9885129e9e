// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage or
// parse error. Errors print `ERROR <code>` as the first line on stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sparsehg/encoding.hpp"
#include "sparsehg/flows.hpp"
#include "sparsehg/sparsity.hpp"
#include "sparsehg/spanning.hpp"
#include "sparsehg/suite.hpp"

namespace {

using namespace sparsehg;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load_hypergraph(const std::string& path) { return parse_hypergraph(read_file(path)); }

UndirectedGraph load_graph(const std::string& path) { return UndirectedGraph(load_hypergraph(path)); }

VertexId vertex_by_label(const Hypergraph& h, const std::string& label) {
  auto v = h.find_vertex(label);
  if (!v) throw UsageError("unknown vertex '" + label + "'");
  return *v;
}

bool is_parse_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::Syntax:
    case ErrorCode::DuplicateVertexInEdge:
    case ErrorCode::UndeclaredVertex:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::EmptyEdge:
    case ErrorCode::DuplicateSet:
      return true;
    default:
      return false;
  }
}

std::string labels(const Hypergraph& h, const std::vector<VertexId>& vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + h.vertex_label(vs[i]);
  return out;
}

struct Options {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t cap = kDefaultBruteForceCap;
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
  bool oracle = false;
  std::string root;
  std::string leaves;
  std::string input;
  std::string target;
  std::string dist;
  std::string flow;
  std::string sets;
  std::string output;
  std::string suite;
};

std::string sparsity_check(const Options& o) {
  auto h = load_hypergraph(o.input);
  SparsityReport r = o.oracle ? is_k_sparse_bruteforce(h, o.k, o.cap) : is_k_sparse(h, o.k);
  if (!r.is_sparse)
    throw Error(ErrorCode::NotKSparse, "witness " + labels(h, *r.witness), *r.witness);
  return "SPARSE k=" + std::to_string(o.k) + "\n";
}

std::string orient_hom(const Options& o) {
  auto g = load_graph(o.input);
  auto target = parse_digraph(read_file(o.target));
  auto orientation = bounded_orientation(g.hypergraph(), o.k);
  auto ho = make_h_orientation(g, orientation, target);
  std::string out = format_orientation(g.hypergraph(), ho.orientation);
  for (VertexId t = 0; t < ho.classes.size(); ++t) {
    out += "class " + target.label(t);
    if (!ho.classes[t].empty()) out += " " + labels(g.hypergraph(), ho.classes[t], ",");
    out += "\n";
  }
  return out;
}

std::string tree_priority(const Options& o) {
  auto h = load_hypergraph(o.input);
  EdgeSet l0;
  std::istringstream ss(o.leaves);
  for (std::string tok; std::getline(ss, tok, ',');) {
    auto e = h.find_edge(tok);
    if (!e) throw UsageError("unknown edge '" + tok + "'");
    l0.push_back(*e);
  }
  auto t = build_priority_tree(h, vertex_by_label(h, o.root), l0, o.m);
  return format_priority_tree(h, t);
}

std::string order_edges(const Options& o) {
  auto h = load_hypergraph(o.input);
  auto orders = edge_ordering(h);
  std::string out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) out += h.edge_label(e) + ": " + labels(h, orders[e]) + "\n";
  return out;
}

std::string order_neighbourhoods(const Options& o) {
  auto g = parse_digraph(read_file(o.input));
  auto orders = neighbourhood_ordering(g);
  std::string out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out += g.label(v) + ":";
    for (VertexId u : orders[v]) out += " " + g.label(u);
    out += "\n";
  }
  return out;
}

// δ-flow from --flow when given, computed with --k otherwise.
Flow obtain_flow(const Options& o, const UndirectedGraph& g, const Distribution& d) {
  if (!o.flow.empty()) return parse_flow(g, read_file(o.flow));
  if (o.k == 0) throw UsageError("either --flow or a positive --k is required");
  return compute_delta_flow(g, d, o.k);
}

std::string flow_paths(const Options& o) {
  auto g = load_graph(o.input);
  auto d = parse_distribution(g.hypergraph(), read_file(o.dist));
  auto f = cancel_cycles(obtain_flow(o, g, d));
  return format_path_family(g.hypergraph(), decompose_flow_paths(g, f, d));
}

std::string flow_check(const Options& o) {
  auto g = load_graph(o.input);
  auto d = parse_distribution(g.hypergraph(), read_file(o.dist));
  auto f = obtain_flow(o, g, d);
  if (!f.supported_by(g)) throw Error(ErrorCode::InvalidFlow, "flow is not supported by the graph");
  if (!check_delta_flow(f, d)) throw Error(ErrorCode::InvalidFlow, "flow is not a delta-flow");
  auto b = bounds(f);
  std::string out = "delta-flow yes\n";
  out += std::string("acyclic ") + (is_acyclic(f) ? "yes" : "no") + "\n";
  out += "edge-bound " + std::to_string(b.edge_bound) + "\n";
  out += "vertex-bound " + std::to_string(b.vertex_bound) + "\n";
  if (o.m > 0) {
    auto paths = decompose_flow_paths(g, cancel_cycles(f), d);
    out += std::string("paths-within-m ") + (validate_path_family(g, paths, o.m) ? "yes" : "no") + "\n";
  }
  return out;
}

std::string encode_refine(const Options& o) {
  auto g = load_graph(o.input);
  auto h = parse_set_function(g.hypergraph(), read_file(o.sets));
  try {
    return format_refinement(g.hypergraph(), refine_to_injective(g, h, o.k));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSparseDistribution) throw;
    throw Error(e.code(), "witness " + labels(g.hypergraph(), e.witness()), e.witness());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse hypergraphs: orientations, spanning trees, flows and set encodings"};
  app.require_subcommand(1);
  Options o;
  std::function<std::string()> action;

  auto input = [&](CLI::App* c, const char* what = "input file") {
    c->add_option("input", o.input, what)->required();
  };
  auto k_flag = [&](CLI::App* c, bool required) {
    auto opt = c->add_option("--k", o.k, "sparsity parameter")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };
  auto output = [&](CLI::App* c) { c->add_option("--output", o.output, "write the result to this file"); };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
    auto c = parent->add_subcommand(name, help);
    output(c);
    return c;
  };

  auto sparsity = app.add_subcommand("sparsity", "k-sparsity of hypergraphs")->require_subcommand(1);
  auto check = leaf(sparsity, "check", "decide k-sparsity; prints a violating set otherwise");
  input(check, "hypergraph file");
  k_flag(check, true);
  check->add_flag("--oracle", o.oracle, "use the brute-force subset enumeration");
  check->add_option("--cap", o.cap, "vertex limit for --oracle");
  check->callback([&] { action = [&] { return sparsity_check(o); }; });

  auto orient = app.add_subcommand("orient", "orientations")->require_subcommand(1);
  auto bounded = leaf(orient, "bounded", "orientation with preimages of size <= k");
  input(bounded, "hypergraph file");
  k_flag(bounded, true);
  bounded->callback([&] {
    action = [&] {
      auto h = load_hypergraph(o.input);
      return format_orientation(h, bounded_orientation(h, o.k));
    };
  });
  auto antisym = leaf(orient, "antisym", "bounded orientation without opposite quotient arcs");
  input(antisym, "hypergraph file");
  k_flag(antisym, true);
  antisym->callback([&] {
    action = [&] {
      auto h = load_hypergraph(o.input);
      return format_orientation(h, antisymmetric_orientation(h, o.k));
    };
  });
  auto hom = leaf(orient, "hom", "bounded orientation with a homomorphism into a target digraph");
  input(hom, "graph file");
  k_flag(hom, true);
  hom->add_option("--target", o.target, "target digraph file")->required();
  hom->callback([&] { action = [&] { return orient_hom(o); }; });

  auto tree = app.add_subcommand("tree", "spanning structures")->require_subcommand(1);
  auto dfst = leaf(tree, "dfst", "depth-first spanning tree");
  input(dfst, "hypergraph file");
  dfst->add_option("--root", o.root, "root vertex label")->required();
  dfst->callback([&] {
    action = [&] {
      auto h = load_hypergraph(o.input);
      return format_dfst(h, build_dfst(h, vertex_by_label(h, o.root)));
    };
  });
  auto priority = leaf(tree, "priority", "priority tree reaching the given leaf edges");
  input(priority, "hypergraph file");
  priority->add_option("--root", o.root, "root vertex label")->required();
  priority->add_option("--leaves", o.leaves, "comma-separated edge labels")->required();
  priority->add_option("--m", o.m, "number of classes (default: rank)");
  priority->callback([&] { action = [&] { return tree_priority(o); }; });

  auto order = app.add_subcommand("order", "derived linear orders")->require_subcommand(1);
  auto edges = leaf(order, "edges", "linear order on the vertices of every edge");
  input(edges, "hypergraph file");
  edges->callback([&] { action = [&] { return order_edges(o); }; });
  auto nbhd = leaf(order, "neighbourhoods", "linear order on every in-neighbourhood");
  input(nbhd, "digraph file");
  nbhd->callback([&] { action = [&] { return order_neighbourhoods(o); }; });

  auto flow = app.add_subcommand("flow", "delta-flows")->require_subcommand(1);
  auto delta = leaf(flow, "delta", "delta-flow with edge bound k");
  input(delta, "graph file");
  k_flag(delta, true);
  delta->add_option("--dist", o.dist, "distribution file")->required();
  delta->callback([&] {
    action = [&] {
      auto g = load_graph(o.input);
      auto d = parse_distribution(g.hypergraph(), read_file(o.dist));
      return format_flow(g.hypergraph(), compute_delta_flow(g, d, o.k));
    };
  });
  auto paths = leaf(flow, "paths", "path family realising a delta-flow");
  input(paths, "graph file");
  k_flag(paths, false);
  paths->add_option("--dist", o.dist, "distribution file")->required();
  paths->add_option("--flow", o.flow, "flow file (default: computed with --k)");
  paths->callback([&] { action = [&] { return flow_paths(o); }; });
  auto fcheck = leaf(flow, "check", "validate a delta-flow and report its bounds");
  input(fcheck, "graph file");
  k_flag(fcheck, false);
  fcheck->add_option("--dist", o.dist, "distribution file")->required();
  fcheck->add_option("--flow", o.flow, "flow file (default: computed with --k)");
  fcheck->add_option("--m", o.m, "also check that its paths load vertices and edges at most m times");
  fcheck->callback([&] { action = [&] { return flow_check(o); }; });

  auto encode = app.add_subcommand("encode", "set encodings")->require_subcommand(1);
  auto refine = leaf(encode, "refine", "injective refinement of a set-to-vertex map");
  input(refine, "graph file");
  k_flag(refine, true);
  refine->add_option("--sets", o.sets, "set-function file")->required();
  refine->callback([&] { action = [&] { return encode_refine(o); }; });

  auto suite = app.add_subcommand("suite", "seeded property suites");
  suite->add_option("name", o.suite, "oracle, lemmas or pipeline")
      ->required()
      ->check(CLI::IsMember({"oracle", "lemmas", "pipeline"}));
  suite->add_option("--seed", o.seed, "random seed");
  suite->add_option("--n", o.cases, "instances per property");
  output(suite);
  suite->callback([&] { action = [&] { return format_report(run_suite(o.suite, o.seed, o.cases)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string result = action();
    if (o.output.empty()) {
      std::cout << result;
    } else {
      std::ofstream out(o.output);
      if (!out) throw UsageError("cannot write '" + o.output + "'");
      out << result;
    }
    return 0;
  } catch (const Error& e) {
    std::cout << "ERROR " << e.code_name() << "\n" << e.what() << "\n";
    return is_parse_error(e.code()) ? 2 : 1;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }
}
