#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "d0/bijectivizations.hpp"
#include "d0/growth.hpp"
#include "d0/io.hpp"
#include "d0/lp.hpp"

using namespace d0;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;   // the graph or set is invalid
constexpr int kComputationFailed = 2;    // NotSymmetric, FAILURE, aborted search
constexpr int kBadInput = 3;

std::vector<Bijectivization> parse_specs(const std::vector<std::string>& names) {
  if (names.empty()) return standard_specs();
  std::vector<Bijectivization> out;
  for (const std::string& s : names) out.push_back(Bijectivization::parse(s));
  return out;
}

std::vector<Word> counterexample_set() {
  LinearProgram lp = build_lp(8, Partition::parse("2222"), standard_specs());
  PackingInstance inst = prune(lp);
  return extract_counterexample(inst, lp, reference_selection(inst)).W_bar;
}

std::vector<Word> load_vertices(const std::string& path, bool counterexample) {
  if (counterexample) return counterexample_set();
  if (path.empty()) throw std::invalid_argument("give --vertices FILE or --counterexample");
  return read_vertex_list(path);
}

void write_graph(const PartialD0Graph& g, const std::string& dir, std::map<std::string, std::string> prov) {
  if (dir.empty()) return;
  GraphBundle b = bundle_of(g);
  b.provenance = std::move(prov);
  write_bundle(b, dir);
  std::cout << "wrote " << dir << "\n";
}

int largest_component_report(const PartialD0Graph& g) {
  std::vector<std::vector<int>> comps = g.components();
  std::size_t best = 0;
  for (std::size_t c = 1; c < comps.size(); ++c)
    if (comps[c].size() > comps[best].size()) best = c;
  std::cout << "components " << comps.size() << ", largest " << (comps.empty() ? 0 : comps[best].size()) << "\n";
  if (comps.empty()) return kOk;
  PartialD0Graph big = g.induced(comps[best]);
  DeltaSchur ds = big.generating_function();
  std::cout << "largest component generating function: " << schur_str(ds.f_basis) << "\n";
  return ds.symmetric() && ds.paths_agree() ? kOk : kComputationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D0 graphs, LLT polynomials and the Schur positivity counterexample"};
  app.require_subcommand(1);

  // llt
  std::string beta_text;
  auto* llt_cmd = app.add_subcommand("llt", "q-graded Schur expansion of a tuple of skew shapes");
  llt_cmd->add_option("beta", beta_text, "e.g. \"2/1; 22/11; 2\" or \"(2,32,33)/(1,11,21)\"")->required();

  // classes
  int cls_d = 0;
  std::string cls_spec, cls_lambda;
  auto* cls_cmd = app.add_subcommand("classes", "equivalence classes of S_d and their b-vector");
  cls_cmd->add_option("-d,--degree", cls_d, "word length")->required();
  cls_cmd->add_option("-s,--spec", cls_spec, "plactic, lamK or assafK")->required();
  cls_cmd->add_option("-l,--lambda", cls_lambda, "partition for the b-vector");

  // lp
  int lp_d = 8;
  std::string lp_lambda = "2222", lp_out;
  std::vector<std::string> lp_specs;
  bool lp_reference = false;
  auto* lp_cmd = app.add_subcommand("lp", "build, prune and solve the packing program");
  lp_cmd->add_option("-d,--degree", lp_d, "word length")->capture_default_str();
  lp_cmd->add_option("-l,--lambda", lp_lambda, "partition")->capture_default_str();
  lp_cmd->add_option("-s,--specs", lp_specs, "bijectivizations (default lam1..lam8 plactic)");
  lp_cmd->add_flag("--reference", lp_reference, "extract from the designated 15-class selection instead of the solver's");
  lp_cmd->add_option("-o,--out", lp_out, "write the complement set here");

  // grow-d5
  std::string g5_vertices, g5_out;
  bool g5_cx = false;
  auto* g5_cmd = app.add_subcommand("grow-d5", "GrowD5Graph from the minimal partial graph");
  g5_cmd->add_option("-v,--vertices", g5_vertices, "vertex list file");
  g5_cmd->add_flag("--counterexample", g5_cx, "use the complement set from the packing program");
  g5_cmd->add_option("-o,--out", g5_out, "bundle directory");

  // grow-d
  std::string gd_vertices, gd_out;
  bool gd_cx = false, gd_allk = false;
  GrowOptions gd_opt;
  gd_opt.budget = 20000;
  auto* gd_cmd = app.add_subcommand("grow-d", "GrowDGraph from the minimal partial graph");
  gd_cmd->add_option("-v,--vertices", gd_vertices, "vertex list file");
  gd_cmd->add_flag("--counterexample", gd_cx, "use the complement set from the packing program");
  gd_cmd->add_flag("--all-knuth-seed", gd_allk, "restrict to the largest component after typing all squares Knuth");
  gd_cmd->add_option("--small", gd_opt.small, "components up to this size try both types")->capture_default_str();
  gd_cmd->add_option("--budget", gd_opt.budget, "choices before giving up; 0 for none")->capture_default_str();
  gd_cmd->add_option("-o,--out", gd_out, "bundle directory");

  // check
  std::string chk_dir;
  auto* chk_cmd = app.add_subcommand("check", "axiom, LSP and positivity report for a graph bundle");
  chk_cmd->add_option("dir", chk_dir, "bundle directory")->required();

  // genfun
  std::string gf_vertices;
  bool gf_cx = false;
  auto* gf_cmd = app.add_subcommand("genfun", "Schur expansion of a vertex set");
  gf_cmd->add_option("-v,--vertices", gf_vertices, "vertex list file");
  gf_cmd->add_flag("--counterexample", gf_cx, "use the complement set from the packing program");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*llt_cmd) {
      SkewTuple beta = SkewTuple::parse(beta_text);
      beta.validate();
      std::cout << "k = " << beta.k() << ", w(beta) = " << wbeta(beta).str() << "\n";
      LLTResult r = llt(beta);
      for (const auto& [t, words] : r.groups)
        std::cout << "inv = " << t << ": " << words.size() << " words, " << r.expansion.at(t).str() << "\n";
      std::cout << r.str() << "\n";
      return kOk;
    }

    if (*cls_cmd) {
      ClassMatrix cm = class_matrix(Bijectivization::parse(cls_spec), cls_d);
      std::cout << cm.spec.name() << " on S_" << cls_d << ": " << cm.num_rows() << " classes\n";
      std::optional<Partition> lambda;
      if (!cls_lambda.empty()) lambda = Partition::parse(cls_lambda);
      for (int r = 0; r < cm.num_rows(); ++r) {
        std::cout << cm.labels[r] << "\t" << cm.rows[r].size();
        if (lambda) std::cout << "\t" << pair_J(*lambda, cm.words(r));
        std::cout << "\n";
      }
      return kOk;
    }

    if (*lp_cmd) {
      LinearProgram lp = build_lp(lp_d, Partition::parse(lp_lambda), parse_specs(lp_specs));
      PackingInstance inst = prune(lp);
      std::cout << instance_report(inst);
      ConflictGraph cg = conflict_graph(inst);
      std::cout << "conflict graph: " << cg.num_vertices() << " vertices, " << cg.graph.num_edges() << " edges\n";
      Packing p = max_weight_packing(inst);
      std::cout << "optimal integer value " << p.value << " (" << p.nodes << " nodes)\n";
      std::cout << "selected rows:";
      for (int i : p.rows) std::cout << " " << i + 1;
      std::cout << "\n";
      PackingBoundReport rep = check_packing_bound(inst, lp);
      std::cout << rep.str();
      if (p.value <= inst.M) {
        std::cout << "no counterexample: optimum does not exceed M\n";
        return kOk;
      }
      std::vector<int> sel = lp_reference ? reference_selection(inst) : p.rows;
      Counterexample cx = extract_counterexample(inst, lp, sel);
      std::cout << "|W| = " << cx.W.size() << ", |W bar| = " << cx.W_bar.size() << "\n";
      std::cout << "W is a KR set: " << (cx.W_is_kr ? "yes" : "no") << ", W bar is a KR set: "
                << (cx.W_bar_is_kr ? "yes" : "no") << "\n";
      std::cout << "pairing certificate " << cx.certificate << " (direct " << cx.certificate_direct << ")\n";
      DeltaSchur ds = delta_schur(cx.W_bar);
      if (!ds.symmetric()) {
        std::cout << "generating function of W bar: " << schur_str(ds.f_basis) << "\n";
        return kComputationFailed;
      }
      std::cout << "coefficient of s" << inst.lambda.str() << " = " << ds.expansion().coeff(inst.lambda)
                << " (pairing path " << ds.pairing.coeff(inst.lambda) << ")\n";
      if (!lp_out.empty()) {
        std::ofstream out(lp_out);
        write_vertex_list(out, cx.W_bar);
        std::cout << "wrote " << lp_out << "\n";
      }
      bool ok = cx.W_is_kr && cx.W_bar_is_kr && cx.certificate == cx.certificate_direct && ds.paths_agree();
      return ok ? kOk : kVerificationFailed;
    }

    if (*g5_cmd) {
      std::vector<Word> W = load_vertices(g5_vertices, g5_cx);
      GrowD5Result r = grow_d5(PartialD0Graph::minimal(W));
      std::cout << "choices " << r.choices << "\n";
      if (!r.ok) {
        std::cout << "FAILURE: " << r.failure << "\n";
        return kComputationFailed;
      }
      AxiomResult a5 = axiom5_by_squares(r.graph);
      std::cout << "axiom 5: " << (a5.pass ? "pass" : "FAIL " + a5.witness) << "\n";
      std::cout << "D0 graph: " << (r.graph.is_d0() ? "yes" : "no") << "\n";
      int code = largest_component_report(r.graph);
      write_graph(r.graph, g5_out, {{"algorithm", "grow-d5"}, {"vertices", std::to_string(W.size())}});
      if (!a5.pass || !r.graph.is_d0()) return kVerificationFailed;
      return code;
    }

    if (*gd_cmd) {
      std::vector<Word> W = load_vertices(gd_vertices, gd_cx);
      if (gd_allk) W = largest_component_after_all_knuth(W);
      PartialD0Graph H = PartialD0Graph::minimal(W);
      std::cout << "seed: " << H.num_vertices() << " vertices, " << H.num_undetermined() << " undetermined squares\n";
      auto t0 = std::chrono::steady_clock::now();
      GrowOutcome out = grow_d_graph(H, gd_opt);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << "status " << grow_status_str(out.status) << ", choices " << out.choices << ", stat "
                << (out.stat ? std::to_string(*out.stat) : std::string("infinity")) << ", undetermined "
                << out.graph.num_undetermined() << ", " << secs << " s\n";
      write_graph(out.graph, gd_out, {{"algorithm", "grow-d"}, {"status", grow_status_str(out.status)}});
      if (out.status != GrowStatus::Finished) return kComputationFailed;
      bool dg = is_d_graph(out.graph);
      std::cout << "D graph: " << (dg ? "yes" : "no") << "\n";
      int code = largest_component_report(out.graph);
      return dg ? code : kVerificationFailed;
    }

    if (*chk_cmd) {
      CheckReport rep = check_report(read_bundle(chk_dir));
      std::cout << rep.str();
      if (rep.computational_failure) return kComputationFailed;
      return rep.ok ? kOk : kVerificationFailed;
    }

    if (*gf_cmd) {
      std::vector<Word> W = load_vertices(gf_vertices, gf_cx);
      DeltaSchur ds = delta_schur(W);
      std::cout << schur_str(ds.f_basis) << "\n";
      if (!ds.symmetric()) return kComputationFailed;
      if (!ds.paths_agree()) {
        std::cout << "pairing path disagrees: " << ds.pairing.str() << "\n";
        return kComputationFailed;
      }
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationFailed;
  }
  return kOk;
}
