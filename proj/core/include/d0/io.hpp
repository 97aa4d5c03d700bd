#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "d0/axioms.hpp"
#include "d0/d0graph.hpp"

namespace d0 {

struct TypedEdge {
  int color = 0;
  EdgeType type = EdgeType::Knuth;
  int v = 0;  // 1-based, v < w
  int w = 0;

  friend bool operator==(const TypedEdge&, const TypedEdge&) = default;
};

// On-disk graph: vertexset.txt, involutions.txt, types.txt and an optional
// provenance.txt of "key = value" lines.
struct GraphBundle {
  std::vector<Word> vertices;
  std::map<int, std::vector<int>> involutions;  // color -> 1-based neighbours, 0 for none
  std::vector<TypedEdge> types;
  std::map<std::string, std::string> provenance;

  int degree() const { return vertices.empty() ? 0 : vertices.front().size(); }
  // Throws std::invalid_argument on out-of-range indices, non-involutions,
  // or type lines that disagree with the involutions.
  void validate() const;

  friend bool operator==(const GraphBundle&, const GraphBundle&) = default;
};

GraphBundle bundle_of(const PartialD0Graph& g);
GraphBundle bundle_of(const SignedColoredGraph& g);  // needs labels

SignedColoredGraph to_signed(const GraphBundle& b);
// Rebuilds the types of every KR square from the edges; squares meeting the
// vertex set in four words without an edge stay undetermined.
PartialD0Graph to_partial(const GraphBundle& b, int N = 0);

// Vertex lists: one word per line with space separated letters, or the
// bracketed list of lists "[[1,2,...],[...]]".
std::vector<Word> parse_vertex_list(std::istream& in);
std::vector<Word> read_vertex_list(const std::filesystem::path& path);
void write_vertex_list(std::ostream& out, const std::vector<Word>& words);

void write_bundle(const GraphBundle& b, const std::filesystem::path& dir);
GraphBundle read_bundle(const std::filesystem::path& dir);

// Full check of a graph; `ok` is false when a verification fails.
struct CheckReport {
  bool ok = true;
  bool computational_failure = false;  // generating function not symmetric
  std::vector<std::string> lines;
  std::string str() const;
};

CheckReport check_report(const GraphBundle& b);

std::string schur_str(const SchurResult& r);

}  // namespace d0
