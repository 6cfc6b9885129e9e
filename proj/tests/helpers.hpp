#pragma once

#include <doctest.h>

#include <string>

#include "sparsehg/error.hpp"
#include "sparsehg/hypergraph.hpp"

namespace test {

inline sparsehg::Hypergraph hg(const std::string& text) { return sparsehg::parse_hypergraph(text); }

inline sparsehg::UndirectedGraph graph(const std::string& text) {
  return sparsehg::UndirectedGraph(sparsehg::parse_hypergraph(text));
}

inline sparsehg::VertexId vid(const sparsehg::Hypergraph& h, const std::string& label) {
  return h.find_vertex(label).value();
}

inline sparsehg::EdgeId eid(const sparsehg::Hypergraph& h, const std::string& label) {
  return h.find_edge(label).value();
}

inline const char* triangle = "v a\nv b\nv c\ne ab a b\ne bc b c\ne ca c a\n";
inline const char* k4 =
    "v a\nv b\nv c\nv d\ne ab a b\ne ac a c\ne ad a d\ne bc b c\ne bd b d\ne cd c d\n";
inline const char* path3 = "v a\nv b\nv c\ne ab a b\ne bc b c\n";
inline const char* k2 = "v a\nv b\ne ab a b\n";

}  // namespace test

#define CHECK_ERROR_CODE(expr, expected)                      \
  do {                                                        \
    bool thrown_ = false;                                     \
    try {                                                     \
      (void)(expr);                                           \
    } catch (const sparsehg::Error& e_) {                     \
      thrown_ = true;                                         \
      CHECK_EQ(std::string(e_.code_name()),                   \
               std::string(sparsehg::error_code_name(expected))); \
    }                                                         \
    CHECK_MESSAGE(thrown_, "expected " #expected);            \
  } while (0)
