// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "d0/axioms.hpp"
#include "d0/bijectivizations.hpp"
#include "d0/growth.hpp"
#include "d0/ideal.hpp"
#include "d0/io.hpp"
#include "d0/lp.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace d0;

namespace {

// Tolerances and sizes; every comparison below is exact.
constexpr int kRandomD0Graphs = 1000;
constexpr int kRandomS6Graphs = 1000;
constexpr int kSolverTrials = 200;
constexpr int kMaxSolverVertices = 24;
constexpr std::uint64_t kGrowBudget = 20000;  // choices for the 6026-vertex seed

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << "FAILED " << what;
      ok = false;
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Check& c, double secs) {
  std::printf("criterion %d: %s  %s  (%.1f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title.c_str(), secs,
              c.detail.str().empty() ? "" : "  ", c.detail.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared by criteria 2, 3 and 7.
struct Pipeline {
  LinearProgram lp;
  PackingInstance inst;
  Counterexample cx;
};

const Pipeline& pipeline() {
  static const Pipeline p = [] {
    Pipeline q;
    q.lp = build_lp(8, Partition{2, 2, 2, 2}, standard_specs());
    q.inst = prune(q.lp);
    q.cx = extract_counterexample(q.inst, q.lp, reference_selection(q.inst));
    return q;
  }();
  return p;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  c.expect(enumerate_syt(Partition{2, 2, 2, 2}).size() == 14, "|SYT(2,2,2,2)| = 14");
  for (int n = 4; n <= 8; ++n) {
    std::size_t got = kr_squares_of(all_permutations(n)).size();
    c.expect(got == (n - 2) * factorial(n) / 6, "KR squares of S_" + std::to_string(n) + " = " + std::to_string(got));
  }
  c.expect(kr_squares_of(all_permutations(6)).size() == 480, "480 squares on S_6");
  c.expect(build_lp(8, Partition{2, 2, 2, 2}, {Bijectivization::plactic()}).M == 14, "M = 14");
  c.detail << (c.ok ? "SYT 14, squares (n-2)n!/6 for n=4..8, M=14" : "");
  report(1, "counting and identities", c, seconds_since(t0));
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  const Pipeline& p = pipeline();
  std::size_t plactic = 0, lam3 = 0, lam7 = 0;
  for (int i : reference_selection(p.inst)) {
    const PackingRow& r = p.inst.rows[i];
    const std::string& name = p.inst.block_names[r.block];
    if (name == "plactic") plactic += r.support.size();
    if (name == "lam3") lam3 = r.support.size();
    if (name == "lam7") lam7 = r.support.size();
  }
  // Independent check of the designated classes through the keys alone.
  auto by_key = [](int k, const char* w) {
    LamKey key = lam_key(Word::parse(w), k);
    std::size_t n = 0;
    for (const Word& x : all_permutations(8)) n += lam_key(x, k) == key;
    return n;
  };
  c.expect(plactic == 182, "plactic classes total " + std::to_string(plactic));
  c.expect(lam3 == 126 && by_key(3, "78634521") == 126, "lam3 class of 78634521 size " + std::to_string(lam3));
  c.expect(lam7 == 316 && by_key(7, "75183642") == 316, "lam7 class of 75183642 size " + std::to_string(lam7));
  c.expect(inv_k(Word::parse("78634521"), 3) == 9 && inv_k(Word::parse("75183642"), 7) == 18, "inv values 9 and 18");
  c.expect(p.cx.W_bar.size() == 39696, "|W bar| = " + std::to_string(p.cx.W_bar.size()));
  if (c.ok) c.detail << "182 + 126 + 316 = " << p.cx.W.size() << ", |W bar| = " << p.cx.W_bar.size();
  report(2, "class structure", c, seconds_since(t0));
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  const Pipeline& p = pipeline();
  const std::vector<std::vector<std::int64_t>> expected = {
      std::vector<std::int64_t>(14, 1), std::vector<std::int64_t>(14, 1), std::vector<std::int64_t>(14, 1),
      std::vector<std::int64_t>(14, 1), std::vector<std::int64_t>(14, 1),
      {1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2},
      {1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2}, std::vector<std::int64_t>(14, 1)};
  c.expect(p.inst.block_names.size() == 9, "nine blocks");
  for (std::size_t b = 0; b < expected.size() && b < p.inst.block_names.size(); ++b) {
    std::vector<std::int64_t> got = p.inst.block_weights(static_cast<int>(b)), want = expected[b];
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    c.expect(got == want, "b' of " + p.inst.block_names[b]);
  }
  ConflictGraph cg = conflict_graph(p.inst);
  c.expect(cg.num_vertices() == 126, "conflict graph has " + std::to_string(cg.num_vertices()) + " vertices");
  Packing pk = max_weight_packing(p.inst);
  IndependentSet unit = max_weight_independent_set(cg.graph);
  c.expect(pk.value == 15, "weighted row optimum " + std::to_string(pk.value));
  c.expect(unit.value == 15, "unit conflict graph optimum " + std::to_string(unit.value));
  Counterexample own = extract_counterexample(p.inst, p.lp, pk.rows);
  c.expect(own.certificate == -1 && own.certificate_direct == -1, "certificate of the solver's selection");
  c.expect(p.cx.certificate == -1, "M - b'y = " + std::to_string(p.cx.certificate));
  c.expect(p.cx.certificate_direct == -1, "pair_J(2222, W bar) = " + std::to_string(p.cx.certificate_direct));
  DeltaSchur ds = delta_schur(p.cx.W_bar);
  const Partition l{2, 2, 2, 2};
  c.expect(ds.symmetric() && ds.expansion().coeff(l) == -1, "F-basis coefficient of s2222");
  c.expect(ds.pairing.coeff(l) == -1, "pairing coefficient of s2222");
  c.expect(ds.paths_agree(), "both Schur paths agree");
  if (c.ok) c.detail << "126 vertices, optimum 15 (" << pk.nodes << " nodes), certificate -1, s2222 coefficient -1 twice";
  report(3, "LP pipeline", c, seconds_since(t0));
}

void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  SkewTuple beta = SkewTuple::parse("2/1; 22/11; 2");
  LLTResult r = llt(beta);
  c.expect(r.str() == "q^2 s41 + q^3 (s32 + s311) + q^4 (s311 + s221) + q^5 s2111", "expansion " + r.str());
  std::vector<std::size_t> sizes;
  for (const testdata::LltComponent& comp : testdata::llt_components()) {
    std::vector<Word> want;
    for (const std::string& w : comp.vertices) want.push_back(Word::parse(w));
    std::sort(want.begin(), want.end());
    auto it = r.groups.find(comp.inv);
    c.expect(it != r.groups.end() && it->second == want, "vertex set at inv " + std::to_string(comp.inv));
    PartialD0Graph g = assaf_graph(3, want);
    sizes.push_back(g.components().size() == 1 ? want.size() : 0);
    std::set<std::tuple<std::string, std::string, int, bool>> got, exp;
    for (const Edge& e : g.edges()) {
      std::string a = g.vertex(e.u).str(), b = g.vertex(e.v).str();
      got.insert({std::min(a, b), std::max(a, b), e.color, e.type == EdgeType::Rotation});
    }
    for (auto [a, b, col, rot] : comp.edges) exp.insert({std::min(a, b), std::max(a, b), col, rot});
    c.expect(got == exp, "edge colours and types at inv " + std::to_string(comp.inv));
  }
  c.expect(sizes == std::vector<std::size_t>{4, 11, 11, 4}, "component sizes 4/11/11/4");
  if (c.ok) c.detail << r.str();
  report(4, "LLT", c, seconds_since(t0));
}

void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  const std::vector<int> a22{2, 2};
  auto w = [](std::initializer_list<const char*> ws) {
    WordVector f(4);
    for (const char* s : ws) f.add(Word::parse(s), 1);
    return f;
  };
  c.expect(irkst_membership(flagged_J(a22, {1, 4}), 4), "J_22^(1,4) = 0");
  c.expect(irkst_membership(flagged_J(a22, {2, 4}) - w({"2143"}), 4), "J_22^(2,4) = 2143");
  c.expect(irkst_membership(flagged_J(a22, {3, 4}) - w({"2143", "3412"}), 4), "J_22^(3,4) = 2143 + 3412");
  c.expect(irkst_membership(flagged_J(a22, {4, 4}) - w({"2143", "3412"}), 4), "J_22^(4,4) = 2143 + 3412");
  int commutators = 0;
  for (int N = 1; N <= 4; ++N)
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; i + j <= 6; ++j) {
        WordVector x = elementary(i, N) * elementary(j, N) - elementary(j, N) * elementary(i, N);
        c.expect(irkst_membership(x, N), "[e_" + std::to_string(i) + ", e_" + std::to_string(j) + "] N=" + std::to_string(N));
        ++commutators;
      }
  int rev = 0;
  for (int d = 1; d <= 4; ++d)
    for (const Partition& lam : partitions_of(d)) {
      c.expect(irkst_membership(rev_map(schur_J(lam, 4)) - schur_J(lam.conjugate(), 4), 4), "rev " + lam.str());
      ++rev;
    }
  int identities = 0;
  for (int N = 1; N <= 5; ++N)
    for (int d = 1; d <= 5; ++d)
      for (const Partition& lam : partitions_of(d)) {
        bool hook = lam.is_hook(), two = lam.length() == 2 && lam.part(1) == 2;
        if (!hook && !two) continue;
        std::vector<int> n(lam.length(), 0);
        std::function<void(int, int)> rec = [&](int i, int lo) {
          if (i == lam.length()) {
            WordVector rhs(d);
            for (const Tableau& T : enumerate_ssyt_flagged(lam.conjugate(), n))
              rhs.add(hook || T.at(0, 1) > T.at(1, 0) ? T.column_reading_word() : T.reading_word(), 1);
            c.expect(irkst_membership(flagged_J(lam.parts(), n) - rhs, N), "identity for " + lam.str());
            ++identities;
            return;
          }
          for (int v = lo; v <= N; ++v) {
            n[i] = v;
            rec(i + 1, v);
          }
        };
        rec(0, 0);
      }
  if (c.ok)
    c.detail << "4 two-row congruences, " << commutators << " commutators, " << rev << " reversals, " << identities
             << " hook and (a,2) identities";
  report(5, "noncommutative identities", c, seconds_since(t0));
}

void criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  std::mt19937_64 rng(20240601);
  int bad_local = 0, bad_shape = 0;
  for (int t = 0; t < kRandomD0Graphs; ++t) {
    int n = 3 + t % 3;
    int N = n + static_cast<int>(rng() % (9 - n));
    double p = 0.2 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    SignedColoredGraph g = random_d0_graph(n, N, rng, p).to_signed();
    bool ok = check_axiom1(g) && check_axiom2(g) && check_axiom3(g) && check_axiom4a(g) && check_lsp(g, 4) &&
              check_lsp(g, 5);
    bad_local += !ok;
    bad_shape += !check_restriction_shapes(g).pass;
  }
  c.expect(bad_local == 0, std::to_string(bad_local) + " graphs fail axioms 1,2,3,4'a or LSP");
  c.expect(bad_shape == 0, std::to_string(bad_shape) + " graphs fail the restriction shapes");
  int disagree = 0, violating = 0;
  for (int t = 0; t < kRandomS6Graphs; ++t) {
    double p = t % 4 == 0 ? 1.0 : 0.5;
    PartialD0Graph g = random_d0_graph(6, 6, rng, p);
    bool iii = axiom5_by_squares(g).pass;
    bool iv = axiom5_by_forbidden(g).pass;
    bool v = axiom5_by_valid(g).pass;
    bool edge = check_axiom5(g.to_signed()).pass;
    disagree += !(iii == iv && iv == v && v == edge);
    violating += !iii;
  }
  c.expect(disagree == 0, std::to_string(disagree) + " S_6 graphs where the axiom 5 forms disagree");
  std::set<HypercubePattern> realizable = oracles::realizable_patterns();
  int mismatch = 0, full_valid = 0;
  for (const HypercubePattern& t : realizable) {
    mismatch += covered_by_valid(t) != avoids_forbidden(t);
    full_valid += std::find(valid_patterns().begin(), valid_patterns().end(), t) != valid_patterns().end();
  }
  c.expect(forbidden_partial_patterns().size() == 64, "64 forbidden patterns");
  c.expect(full_valid == 12, "12 fully occupied valid patterns realizable");
  c.expect(mismatch == 0, std::to_string(mismatch) + " patterns where (iv) and (v) disagree");
  if (c.ok)
    c.detail << kRandomD0Graphs << " random D0 graphs pass; " << kRandomS6Graphs << " S_6 graphs agree (" << violating
             << " violate axiom 5); " << realizable.size() << " realizable patterns agree";
  report(6, "axiom engine", c, seconds_since(t0));
}

void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  const Pipeline& p = pipeline();
  GrowD5Result r = grow_d5(PartialD0Graph::minimal(p.cx.W_bar, 8));
  c.expect(r.ok, "grow_d5 FAILURE " + r.failure);
  std::size_t largest = 0;
  if (r.ok) {
    c.expect(r.graph.is_d0(), "result has undetermined squares");
    c.expect(axiom5_by_squares(r.graph).pass, "axiom 5 by squares");
    c.expect(check_axiom5(r.graph.to_signed()).pass, "axiom 5 by edges");
    std::vector<std::vector<int>> comps = r.graph.components();
    std::size_t best = 0;
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (comps[k].size() > comps[best].size()) best = k;
    largest = comps[best].size();
    c.expect(largest == 5322, "largest component " + std::to_string(largest));
    DeltaSchur ds = r.graph.induced(comps[best]).generating_function();
    c.expect(ds.symmetric(), "largest component generating function symmetric");
    c.expect(ds.paths_agree(), "both Schur paths agree on the largest component");
    if (ds.symmetric()) {
      std::int64_t co = ds.expansion().coeff(Partition{2, 2, 2, 2});
      c.expect(co < 0, "s2222 coefficient " + std::to_string(co));
      if (c.ok) c.detail << "choices " << r.choices << ", largest 5322 with s2222 coefficient " << co;
    }
  }
  std::size_t allk = largest_component_after_all_knuth(p.cx.W_bar).size();
  c.expect(allk == 6026, "all-Knuth largest component " + std::to_string(allk));
  if (c.ok) c.detail << ", all-Knuth largest 6026";
  report(7, "growth algorithms", c, seconds_since(t0));
}

void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  // (a) conditional on the search finishing with finite stat.
  std::vector<Word> seed = largest_component_after_all_knuth(pipeline().cx.W_bar);
  GrowOptions opt;
  opt.budget = kGrowBudget;
  GrowOutcome out = grow_d_graph(PartialD0Graph::minimal(seed, 8), opt);
  std::string part_a;
  if (out.status == GrowStatus::Finished && out.stat) {
    c.expect(is_d_graph(out.graph), "(a) is_d_graph");
    c.expect(check_axiom4bb(out.graph.to_signed()).pass, "(a) axiom 4''b");
    bool found = false;
    for (const std::vector<int>& comp : out.graph.components()) {
      DeltaSchur ds = out.graph.induced(comp).generating_function();
      if (!ds.symmetric() || ds.expansion().is_positive()) continue;
      std::int64_t co = ds.expansion().coeff(Partition{2, 2, 2, 2});
      c.expect(co < 0, "(a) s2222 coefficient " + std::to_string(co));
      found = true;
      break;
    }
    c.expect(found, "(a) some component is not Schur positive");
    part_a = "(a) finished, stat " + std::to_string(*out.stat);
  } else {
    part_a = std::string("(a) vacuous: grow_d_graph ") + grow_status_str(out.status) + " after " +
             std::to_string(out.choices) + " choices with " + std::to_string(out.graph.num_undetermined()) +
             " undetermined squares";
  }
  // (b) the hand-encoded chain neighbourhood.
  GraphBundle b = testdata::chain_bundle();
  b.validate();
  bool edges_ok = true;
  for (const TypedEdge& e : b.types)
    edges_ok = edges_ok && is_kr_edge(b.vertices[e.v - 1], b.vertices[e.w - 1], e.color, e.type);
  c.expect(edges_ok, "(b) every fixture edge is a KR edge of its type");
  SignedColoredGraph g = to_signed(b);
  std::vector<Word> want;
  for (const std::string& w : testdata::flat_chain_words()) want.push_back(Word::parse(w));
  bool found = false;
  for (const Chain& ch : flat_chains(g, 4)) {
    std::vector<Word> got;
    for (int v : ch.vertices) got.push_back(g.label(v));
    if (got != want) continue;
    found = true;
    std::vector<std::string> w5;
    for (int v : ch.vertices)
      if (itype_W(g, v, 5)) w5.push_back(g.label(v).str());
    c.expect(w5 == std::vector<std::string>{"78516243", "78561243"}, "(b) 5-type W vertices on the chain");
    c.expect(chain_window_check(g, ch).pass, "(b) window check");
  }
  c.expect(found, "(b) flat 4-chain of length 10");
  c.detail << part_a;
  if (c.ok) c.detail << "; (b) flat 4-chain of length 10 passes, 5-type W only at 78516243 and 78561243";
  report(8, "substituted D graph checks", c, seconds_since(t0));
}

void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  std::mt19937_64 rng(9);
  int bad = 0;
  for (int t = 0; t < kSolverTrials; ++t) {
    int n = 1 + static_cast<int>(rng() % kMaxSolverVertices);
    double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    WeightedGraph g = oracles::random_graph(rng, n, p, t % 2 ? 1 : 5);
    IndependentSet s = max_weight_independent_set(g);
    std::int64_t oracle = n <= 16 ? oracles::mis_subsets(g) : oracles::mis_bron_kerbosch(g);
    bad += s.value != oracle || !oracles::independent(g, s.vertices) || oracles::weight_of(g, s.vertices) != s.value;
  }
  c.expect(bad == 0, std::to_string(bad) + " graphs where branch and bound differs from brute force");
  int bad_theta = 0;
  for (int t = 0; t < kSolverTrials; ++t) {
    PackingInstance inst = oracles::random_instance(rng, 2 + t % 3, 10);
    ConflictGraph cg = conflict_graph(inst);
    const int rows = inst.num_rows();
    std::int64_t best = 0;
    bool ok = cg.num_vertices() == inst.total_weight();
    for (std::uint32_t y = 0; y < (1U << rows) && ok; ++y) {
      std::vector<int> sel;
      std::int64_t w = 0;
      for (int i = 0; i < rows; ++i)
        if ((y >> i) & 1U) {
          sel.push_back(i);
          w += inst.rows[i].weight;
        }
      std::vector<int> img = theta(cg, sel);
      bool packing = oracles::disjoint_rows(inst, sel);
      ok = static_cast<std::int64_t>(img.size()) == w && packing == oracles::independent(cg.graph, img);
      if (packing) best = std::max(best, w);
    }
    ok = ok && max_weight_independent_set(cg.graph).value == best && max_weight_packing(inst).value == best;
    bad_theta += !ok;
  }
  c.expect(bad_theta == 0, std::to_string(bad_theta) + " instances where Theta fails");
  if (c.ok) c.detail << kSolverTrials << " graphs up to " << kMaxSolverVertices << " vertices, " << kSolverTrials << " packing instances";
  report(9, "solver soundness", c, seconds_since(t0));
}

}  // namespace

int main() {
  const std::map<int, void (*)()> all = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                                         {4, criterion4}, {5, criterion5}, {6, criterion6},
                                         {7, criterion7}, {8, criterion8}, {9, criterion9}};
  for (const auto& [id, fn] : all) {
    try {
      fn();
    } catch (const std::exception& e) {
      std::printf("criterion %d: FAIL  exception: %s\n", id, e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, all.size());
  return failures == 0 ? 0 : 1;
}
