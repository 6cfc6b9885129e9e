#include "sparsehg/set_function.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace sparsehg {

FiniteSetFunction::FiniteSetFunction(std::size_t num_vertices, std::vector<Entry> entries)
    : num_vertices_(num_vertices), entries_(std::move(entries)) {
  std::set<VertexSet> seen;
  for (auto& [x, image] : entries_) {
    x = make_vertex_set(std::move(x));
    if (image >= num_vertices_ || (!x.empty() && x.back() >= num_vertices_))
      throw Error(ErrorCode::UnknownVertex, "set function refers to an unknown vertex");
    if (!seen.insert(x).second) throw Error(ErrorCode::DuplicateSet, "set listed twice");
  }
}

std::size_t FiniteSetFunction::find(const VertexSet& x) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].first == x) return i;
  return entries_.size();
}

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

VertexId resolve(const Hypergraph& h, const std::string& label, std::size_t line_no) {
  auto v = h.find_vertex(label);
  if (!v)
    throw Error(ErrorCode::UndeclaredVertex,
                "line " + std::to_string(line_no) + ": undeclared vertex '" + label + "'");
  return *v;
}

}  // namespace

FiniteSetFunction parse_set_function(const Hypergraph& h, std::istream& in) {
  std::vector<FiniteSetFunction::Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    auto arrow = body.find("->");
    if (arrow == std::string::npos)
      throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": expected `<set> -> <vertex>`");
    std::string lhs = trim(std::string_view(body).substr(0, arrow));
    std::string rhs = trim(std::string_view(body).substr(arrow + 2));
    if (rhs.empty() || rhs.find_first_of(" \t,") != std::string::npos)
      throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": expected one image vertex");
    VertexSet x;
    if (!lhs.empty()) {
      std::istringstream members(lhs);
      for (std::string tok; std::getline(members, tok, ',');) {
        tok = trim(tok);
        if (tok.empty())
          throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": empty set member");
        x.push_back(resolve(h, tok, line_no));
      }
    }
    entries.emplace_back(std::move(x), resolve(h, rhs, line_no));
  }
  try {
    return FiniteSetFunction(h.num_vertices(), std::move(entries));
  } catch (const Error& err) {
    throw Error(err.code(), std::string("set function: ") + err.what());
  }
}

FiniteSetFunction parse_set_function(const Hypergraph& h, std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_set_function(h, in);
}

std::string format_set_function(const Hypergraph& h, const FiniteSetFunction& fn) {
  std::string out;
  for (const auto& [x, image] : fn.entries()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) out += ",";
      out += h.vertex_label(x[i]);
    }
    out += (x.empty() ? "-> " : " -> ") + h.vertex_label(image) + "\n";
  }
  return out;
}

}  // namespace sparsehg
