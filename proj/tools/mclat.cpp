// Command-line front end: exact state polynomials, reconstruction,
// Tutte polynomials, weight enumerators, theta series and the
// matroid -> code -> lattice pipeline.
//
// Exit codes: 0 success, 1 validation error, 2 feasibility cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mclat/codes.hpp"
#include "mclat/errors.hpp"
#include "mclat/json_io.hpp"
#include "mclat/lattices.hpp"
#include "mclat/matroids.hpp"
#include "mclat/pipeline.hpp"
#include "mclat/statepoly.hpp"

using namespace mclat;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

std::string symbolic_to_string(const SymbolicStatePoly& z) {
  int n = z.n;
  std::vector<std::pair<int, int>> pair_of(n * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) pair_of[pair_var_index(n, i, j)] = {i, j};
  return z.poly.to_string([&](int k) {
    auto [i, j] = pair_of[k];
    return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  });
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return nlohmann::json::parse(in);
}

struct PrimeFlags {
  std::string cap = "400000000";
  std::string cache_file;
  bool no_cache = false;
  PrimeCache extra;

  PrimeOptions options() {
    PrimeOptions o;
    o.cap = Int(cap);
    o.use_cache = !no_cache;
    if (!cache_file.empty()) {
      extra.load_file(cache_file);
      o.extra_cache = &extra;
    }
    return o;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--prime-cap", cap, "feasibility cap on prime indices");
    cmd->add_option("--prime-cache", cache_file, "extra '<index> <prime>' cache file");
    cmd->add_flag("--no-cache", no_cache, "ignore the built-in prime cache");
  }
};

WeightMatrix make_matrix(const std::string& kind, int n, long m, PrimeFlags& pf,
                         const Multigraph* g) {
  if (kind == "paper") {
    if (n <= 0) throw std::invalid_argument("--n is required for the paper matrix");
    return paper_weight_matrix(n, pf.options());
  }
  if (kind == "admissible") {
    long budget = m >= 0 ? m : (g ? g->num_edges() : -1);
    if (budget < 0) throw std::invalid_argument("--m is required for an admissible matrix");
    int states = n > 0 ? n : int(3 * budget);
    if (states < 1) states = 1;
    return admissible_matrix(budget, states).first;
  }
  throw std::invalid_argument("--matrix must be 'paper' or 'admissible'");
}

int run(int argc, char** argv) {
  CLI::App app{"exact graph invariants, codes and lattice theta series"};
  app.require_subcommand(1);

  // ---- nstate ----------------------------------------------------------
  auto* nstate = app.add_subcommand("nstate", "symbolic n-state polynomial of a graph");
  std::string ns_graph, ns_out;
  int ns_n = 2;
  bool ns_symbolic = false, ns_negami = false, ns_json = false;
  nstate->add_option("--graph", ns_graph, "graph file")->required();
  nstate->add_option("--n", ns_n, "number of states")->required();
  nstate->add_flag("--symbolic", ns_symbolic, "full symbolic output (default)");
  nstate->add_flag("--negami", ns_negami, "specialize x_ii -> x+y, x_ij -> y");
  nstate->add_flag("--json", ns_json, "JSON output");
  nstate->add_option("--out", ns_out, "output path (default stdout)");
  nstate->callback([&] {
    SymbolicStatePoly z = z_state_symbolic(load_graph_file(ns_graph).graph, ns_n);
    if (ns_negami) {
      ExactPoly p = negami_specialize(z);
      emit(ns_json ? poly_to_json(p).dump(2) : p.to_string(), ns_out);
    } else {
      emit(ns_json ? poly_to_json(z.poly).dump(2) : symbolic_to_string(z), ns_out);
    }
  });

  // ---- pseudo ----------------------------------------------------------
  auto* pseudo = app.add_subcommand("pseudo", "pseudo n-state polynomial of a graph");
  std::string ps_graph, ps_kind = "paper", ps_out, ps_out_matrix;
  int ps_n = 0;
  long ps_m = -1;
  bool ps_json = false;
  PrimeFlags ps_pf;
  pseudo->add_option("--graph", ps_graph, "graph file")->required();
  pseudo->add_option("--matrix", ps_kind, "paper|admissible")->required();
  pseudo->add_option("--n", ps_n, "state count (paper: required; admissible: default 3m)");
  pseudo->add_option("--m", ps_m, "edge budget for the admissible matrix (default |E|)");
  pseudo->add_flag("--json", ps_json, "JSON output");
  pseudo->add_option("--out", ps_out, "output path");
  pseudo->add_option("--out-matrix", ps_out_matrix, "also write the weight matrix as JSON");
  ps_pf.attach(pseudo);
  pseudo->callback([&] {
    Multigraph g = load_graph_file(ps_graph).graph;
    WeightMatrix w = make_matrix(ps_kind, ps_n, ps_m, ps_pf, &g);
    PseudoStatePoly z = z_state_weighted(g, w);
    if (!ps_out_matrix.empty()) emit(weight_matrix_to_json(w).dump(2), ps_out_matrix);
    emit(ps_json ? poly_to_json(z.poly).dump(2) : z.poly.to_string(), ps_out);
  });

  // ---- reconstruct -----------------------------------------------------
  auto* rec = app.add_subcommand("reconstruct", "invert a pseudo polynomial");
  std::string rc_poly, rc_matrix, rc_out;
  rec->add_option("--poly", rc_poly, "polynomial JSON file")->required();
  rec->add_option("--matrix-file", rc_matrix, "weight matrix JSON file")->required();
  rec->add_option("--out", rc_out, "output graph file");
  rec->callback([&] {
    ExactPoly z = poly_from_json(load_json_file(rc_poly), 1);
    WeightMatrix w = weight_matrix_from_json(load_json_file(rc_matrix));
    Multigraph g = reconstruct_pseudo(z, w);
    emit(g.to_text(), rc_out);
  });

  // ---- tutte -----------------------------------------------------------
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a graph or binary matrix");
  std::string tu_graph, tu_matrix, tu_algo = "delcon", tu_out;
  bool tu_json = false;
  tutte->add_option("--graph", tu_graph, "graph file");
  tutte->add_option("--matrix", tu_matrix, "0/1 matrix file (vector matroid)");
  tutte->add_option("--algo", tu_algo, "delcon|subset|both (default delcon)");
  tutte->add_flag("--json", tu_json, "JSON output");
  tutte->add_option("--out", tu_out, "output path");
  tutte->callback([&] {
    if (tu_graph.empty() == tu_matrix.empty())
      throw std::invalid_argument("tutte: exactly one of --graph / --matrix required");
    Matroid m = tu_graph.empty() ? Matroid::vector_f2(load_matrix_file(tu_matrix))
                                 : Matroid::graphic(load_graph_file(tu_graph).graph);
    ExactPoly t(2);
    if (tu_algo == "delcon") {
      t = tutte_deletion_contraction(m);
    } else if (tu_algo == "subset") {
      t = tutte_subset_expansion(m);
    } else if (tu_algo == "both") {
      t = tutte_deletion_contraction(m);
      if (t != tutte_subset_expansion(m))
        throw std::runtime_error("tutte: algorithms disagree (internal error)");
    } else {
      throw std::invalid_argument("tutte: unknown --algo " + tu_algo);
    }
    emit(tu_json ? poly_to_json(t).dump(2) : t.to_string(), tu_out);
  });

  // ---- wenum -----------------------------------------------------------
  auto* wenum = app.add_subcommand("wenum", "weight enumerator of a binary code");
  std::string we_matrix, we_via = "enum", we_out;
  bool we_json = false;
  wenum->add_option("--matrix", we_matrix, "generator matrix file")->required();
  wenum->add_option("--via", we_via, "enum|greene");
  wenum->add_flag("--json", we_json, "JSON output");
  wenum->add_option("--out", we_out, "output path");
  wenum->callback([&] {
    F2Matrix gen = load_matrix_file(we_matrix);
    ExactPoly w(2);
    if (we_via == "enum")
      w = weight_enumerator_enum(BinaryCode::from_generator(gen));
    else if (we_via == "greene")
      w = weight_enumerator_greene(Matroid::vector_f2(gen));
    else
      throw std::invalid_argument("wenum: unknown --via " + we_via);
    emit(we_json ? poly_to_json(w).dump(2) : w.to_string(), we_out);
  });

  // ---- replicate4 ------------------------------------------------------
  auto* rep4 = app.add_subcommand("replicate4", "replicate each coordinate four times");
  std::string r4_matrix, r4_out;
  rep4->add_option("--matrix", r4_matrix, "generator matrix file")->required();
  rep4->add_option("--out", r4_out, "output path");
  rep4->callback([&] {
    BinaryCode c = BinaryCode::from_generator(load_matrix_file(r4_matrix)).replicate4();
    emit(c.generator().to_text(), r4_out);
  });

  // ---- theta -----------------------------------------------------------
  auto* theta = app.add_subcommand("theta", "theta series of a Construction A lattice");
  std::string th_matrix, th_out;
  long th_prec = 40;
  bool th_direct = false, th_json = false;
  theta->add_option("--matrix", th_matrix, "generator matrix file")->required();
  theta->add_option("--prec", th_prec, "precision in quarter exponents")->required();
  theta->add_flag("--direct", th_direct, "enumerate lattice vectors instead of substituting");
  theta->add_flag("--json", th_json, "JSON output");
  theta->add_option("--out", th_out, "output path");
  theta->callback([&] {
    BinaryCode c = BinaryCode::from_generator(load_matrix_file(th_matrix));
    QSeries s = th_direct ? theta_direct(c, th_prec) : theta_from_code(c, th_prec);
    emit(th_json ? qseries_to_json(s).dump(2) : s.to_string(), th_out);
  });

  // ---- pipeline --------------------------------------------------------
  auto* pipe = app.add_subcommand("pipeline", "run the matroid -> code -> lattice chain");
  std::string pl_g1, pl_g2, pl_out;
  int pl_m = -1, pl_n = -1, pl_iso_cap = 10;
  long pl_prec = 40;
  pipe->add_option("--g1", pl_g1, "first graph file")->required();
  pipe->add_option("--g2", pl_g2, "second graph file")->required();
  pipe->add_option("--m", pl_m, "subdivision count (family mode)");
  pipe->add_option("--n", pl_n, "path length (family mode)");
  pipe->add_option("--prec", pl_prec, "theta precision in quarter exponents");
  pipe->add_option("--iso-cap", pl_iso_cap, "vertex cap for the brute-force isomorphism stage");
  pipe->add_option("--out", pl_out, "report path (default stdout)");
  pipe->callback([&] {
    ParsedGraph a = load_graph_file(pl_g1);
    ParsedGraph b = load_graph_file(pl_g2);
    Multigraph g1 = a.graph, g2 = b.graph;
    if (pl_m >= 0 || pl_n >= 0) {
      auto fam = bpr_family(a, b, std::max(pl_m, 0), std::max(pl_n, 0));
      g1 = fam.first;
      g2 = fam.second;
    }
    PipelineOptions opts;
    opts.theta_precision_quarters = pl_prec;
    opts.iso_cap = pl_iso_cap;
    PipelineReport rep = run_pipeline(g1, g2, opts);
    emit(report_to_json(rep).dump(2), pl_out);
  });

  // ---- search ----------------------------------------------------------
  auto* search = app.add_subcommand("search", "find non-isomorphic T-equivalent graph pairs");
  std::string se_out;
  int se_maxv = 5, se_maxe = 6;
  bool se_parallel = false;
  search->add_option("--max-v", se_maxv, "vertex cap (<= 7)")->required();
  search->add_option("--max-e", se_maxe, "edge cap (<= 12)")->required();
  search->add_flag("--parallel-edges", se_parallel, "include multigraphs (vertex cap 5)");
  search->add_option("--out", se_out, "directory for pair fixture files");
  search->callback([&] {
    auto pairs = search_tequivalent(se_maxv, se_maxe, {se_parallel});
    if (se_out.empty()) {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::cout << "# pair " << i << "\n"
                  << pairs[i].first.to_text() << "--\n"
                  << pairs[i].second.to_text();
      }
      std::cout << "# " << pairs.size() << " T-equivalent non-isomorphic pairs\n";
      return;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof(name), "/pair_%04zu", i);
      emit(pairs[i].first.to_text(), se_out + name + "_a.graph");
      emit(pairs[i].second.to_text(), se_out + name + "_b.graph");
    }
    std::cout << pairs.size() << " pairs written to " << se_out << "\n";
  });

  // ---- primes ----------------------------------------------------------
  auto* primes = app.add_subcommand("primes", "prime services and weight matrices");
  std::string pr_nth, pr_kind, pr_out;
  int pr_n = 0;
  long pr_m = -1;
  bool pr_json = false;
  PrimeFlags pr_pf;
  primes->add_option("--nth", pr_nth, "print the ell-th prime");
  primes->add_option("--matrix", pr_kind, "emit a weight matrix: paper|admissible");
  primes->add_option("--n", pr_n, "state count");
  primes->add_option("--m", pr_m, "edge budget (admissible matrix)");
  primes->add_flag("--json", pr_json, "JSON output");
  primes->add_option("--out", pr_out, "output path");
  pr_pf.attach(primes);
  primes->callback([&] {
    if (!pr_nth.empty()) {
      emit(nth_prime(Int(pr_nth), pr_pf.options()).get_str(), pr_out);
      return;
    }
    if (!pr_kind.empty()) {
      WeightMatrix w = make_matrix(pr_kind, pr_n, pr_m, pr_pf, nullptr);
      emit(pr_json ? weight_matrix_to_json(w).dump(2) : w.to_string(), pr_out);
      return;
    }
    throw std::invalid_argument("primes: one of --nth / --matrix required");
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
