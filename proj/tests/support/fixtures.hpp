#pragma once

#include <string>
#include <utility>
#include <vector>

#include "d0/bijectivizations.hpp"
#include "d0/io.hpp"

namespace d0::testdata {

struct FixtureEdge {
  int u;
  int v;
  int color;
  bool rotation;
};

// Neighbourhood of a flat 4-chain in the published D graph on a subset of S_8:
// every 3- and 5-neighbour of the chain and the 2-3 strings joining its links.
// Vertex ids are 1-based and fixed; edges refer to them.
inline const std::vector<std::pair<int, std::string>>& chain_vertices() {
  static const std::vector<std::pair<int, std::string>> v = {
      {2, "18652743"},  {3, "15876243"},  {4, "18576243"},  {5, "18657243"},  {8, "81652743"},
      {11, "81657243"}, {12, "81576243"}, {14, "86157243"}, {15, "81675243"}, {18, "81756243"},
      {19, "67815243"}, {21, "75816243"}, {23, "81762543"}, {24, "78156243"}, {25, "68175243"},
      {29, "78516243"}, {30, "87156243"}, {34, "75861243"}, {35, "68715243"}, {36, "86715243"},
      {37, "78561243"}, {38, "68751243"}, {40, "86175243"}};
  return v;
}

inline const std::vector<FixtureEdge>& chain_edges() {
  static const std::vector<FixtureEdge> e = {
      {2, 8, 2, false},   {2, 5, 5, false},   {2, 5, 6, false},   {3, 4, 3, false},   {4, 5, 4, true},
      {4, 12, 2, false},  {5, 11, 2, false},  {8, 11, 5, false},  {8, 11, 6, false},  {11, 14, 3, false},
      {11, 15, 4, false}, {12, 18, 4, false}, {15, 25, 2, true},  {18, 24, 2, true},  {18, 30, 3, false},
      {18, 23, 5, true},  {19, 25, 3, true},  {21, 29, 2, false}, {21, 24, 3, true},  {25, 35, 4, false},
      {29, 37, 4, false}, {29, 37, 5, false}, {34, 37, 2, false}, {34, 37, 3, false}, {35, 38, 5, false},
      {35, 36, 2, false}, {36, 40, 4, false}};
  return e;
}

// Chain order as x^1 .. x^10.
inline std::vector<std::string> flat_chain_words() {
  return {"68715243", "68175243", "81675243", "81657243", "18657243",
          "18576243", "81576243", "81756243", "78516243", "78561243"};
}

inline GraphBundle chain_bundle() {
  GraphBundle b;
  std::vector<int> ids;
  for (const auto& [id, w] : chain_vertices()) {
    ids.push_back(id);
    b.vertices.push_back(Word::parse(w));
  }
  auto index = [&](int id) {
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (ids[k] == id) return static_cast<int>(k) + 1;
    return 0;
  };
  const int V = static_cast<int>(ids.size());
  for (int c = 2; c <= 7; ++c) b.involutions[c].assign(V, 0);
  for (const FixtureEdge& e : chain_edges()) {
    int u = index(e.u), v = index(e.v);
    if (u > v) std::swap(u, v);
    b.involutions[e.color][u - 1] = v;
    b.involutions[e.color][v - 1] = u;
    b.types.push_back({e.color, e.rotation ? EdgeType::Rotation : EdgeType::Knuth, u, v});
  }
  b.provenance["source"] = "hand-encoded flat 4-chain neighbourhood";
  return b;
}

// The 2-3-shaped LLT example with k = 3: components of the Assaf graph by
// inv_3, each listed as (vertices, edges as "u v color type").
struct LltComponent {
  int inv;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, int, bool>> edges;
};

inline std::vector<LltComponent> llt_components() {
  return {
      {2,
       {"23451", "23415", "24135", "41235"},
       {{"23451", "23415", 4, false}, {"23415", "24135", 3, true}, {"24135", "41235", 2, true}}},
      {3,
       {"23541", "24351", "32451", "24513", "24153", "41253", "24315", "32415", "34125", "41325", "42135"},
       {{"23541", "24351", 3, true},
        {"24351", "32451", 2, true},
        {"24351", "24315", 4, false},
        {"32451", "32415", 4, false},
        {"24513", "24153", 3, false},
        {"24513", "24153", 4, false},
        {"24153", "41253", 2, true},
        {"41253", "41325", 4, true},
        {"24315", "32415", 2, true},
        {"32415", "34125", 3, true},
        {"34125", "41325", 2, true},
        {"41325", "42135", 3, true}}},
      {4,
       {"24531", "25341", "32541", "34251", "42351", "25413", "42513", "42153", "34215", "42315", "43125"},
       {{"24531", "25341", 3, true},
        {"25341", "32541", 2, true},
        {"25341", "25413", 4, true},
        {"32541", "34251", 3, true},
        {"34251", "34215", 4, false},
        {"34251", "42351", 2, true},
        {"42351", "42315", 4, false},
        {"25413", "42513", 2, true},
        {"42513", "42153", 3, false},
        {"42513", "42153", 4, false},
        {"34215", "42315", 2, true},
        {"42315", "43125", 3, true}}},
      {5,
       {"25431", "42531", "43251", "43215"},
       {{"25431", "42531", 2, true}, {"42531", "43251", 3, true}, {"43251", "43215", 4, false}}},
  };
}

}  // namespace d0::testdata
