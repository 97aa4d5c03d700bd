#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "d0/axioms.hpp"
#include "d0/d0graph.hpp"

namespace d0 {

// Hypercubes of a vertex set with their square ids, shared by every partial
// graph on that vertex set.
class HypercubeIndex {
 public:
  explicit HypercubeIndex(const PartialD0Graph& g);

  int size() const { return static_cast<int>(cubes_.size()); }
  const Hypercube& cube(int h) const { return cubes_[h]; }
  const std::array<int, 8>& ids(int h) const { return ids_[h]; }  // -1 for squares missing W
  const std::vector<int>& through(int s) const { return through_[s]; }
  HypercubePattern pattern(const PartialD0Graph& g, int h) const;

 private:
  std::vector<Hypercube> cubes_;
  std::vector<std::array<int, 8>> ids_;
  std::vector<std::vector<int>> through_;
};

struct ForceResult {
  bool ok = true;
  std::string failure;  // conflicting squares and types
  int determined = 0;   // squares typed by the propagation
};

using Trace = std::function<void(const std::string&)>;

// Fixpoint of ForceAxiom5Step, in place. When `seeds` is given only the
// constraints around those squares are revisited, which is exact when g was
// a fixpoint before they were assigned.
ForceResult force_axiom5(PartialD0Graph& g, const std::vector<int>* seeds = nullptr, const Trace& trace = {});

// Fixpoint of AdvancedForceAxiom5Step, in place; same seeding rule.
ForceResult advanced_force_axiom5(PartialD0Graph& g, const HypercubeIndex& index,
                                  const std::vector<int>* seeds = nullptr, const Trace& trace = {});
ForceResult advanced_force_axiom5(PartialD0Graph& g);

// One round of the cover rule on a bare pattern; nullopt when no valid
// pattern covers t.
std::optional<HypercubePattern> advanced_force_pattern(const HypercubePattern& t);

// Repeatedly declares the smallest undetermined square Knuth and forces.
struct GrowD5Result {
  bool ok = false;
  PartialD0Graph graph;
  std::string failure;
  int choices = 0;
};

GrowD5Result grow_d5(PartialD0Graph g, const Trace& trace = {});

// Undetermined squares, joined when they share a hypercube.
struct QGraph {
  std::vector<int> squares;                    // sorted
  std::vector<std::vector<int>> components;    // increasing size, then least square
};

QGraph q_graph(const PartialD0Graph& g, const HypercubeIndex& index);
// Components of the subgraph of Q(g) induced on `squares`.
std::vector<std::vector<int>> q_components(const PartialD0Graph& g, const HypercubeIndex& index,
                                           const std::vector<int>& squares);

// B_i(g) for one i in 4..n-2.
std::vector<int> b_set(const SignedColoredGraph& g, int i);
// Sum of |B_i| over 4 <= i <= n-2, or nullopt (infinity) when 4'b fails.
std::optional<std::int64_t> stat_b(const SignedColoredGraph& g);
std::optional<std::int64_t> stat_b(const PartialD0Graph& g);

enum class GrowStatus { Finished, Failure, Aborted };
const char* grow_status_str(GrowStatus s);

struct GrowOptions {
  int small = 10;                  // components of Q up to this size try both types
  std::uint64_t budget = 0;        // choices allowed; 0 for no limit
  Trace trace;
};

struct GrowOutcome {
  PartialD0Graph graph;
  GrowStatus status = GrowStatus::Failure;
  std::optional<std::int64_t> stat;  // nullopt is infinity
  std::uint64_t choices = 0;
};

GrowOutcome grow_d_graph(const PartialD0Graph& g, const GrowOptions& opt = {});
GrowOutcome grow_d_graph(const PartialD0Graph& g, const std::vector<int>& q_squares, const GrowOptions& opt);

// Vertex set of the largest component after typing every undetermined square
// Knuth, ties to the component with the least vertex.
std::vector<Word> largest_component_after_all_knuth(const std::vector<Word>& W);

// Fully typed D0 graph on the repetition-free words of length n over [N],
// restricted to a random union of components keeping each with probability p.
PartialD0Graph random_d0_graph(int n, int N, std::mt19937_64& rng, double p = 1.0);

}  // namespace d0
