#include "pairwalk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "pairwalk/families.hpp"
#include "pairwalk/io.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk::cli {

namespace {

using io::Json;

struct Sink {
  std::string path;  // empty or "-" means the output stream
  std::ostream* out;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      *out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open output file '" + path + "'");
    file << text;
  }
};

Graph read_graph(const std::string& source, std::istream& in) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(source, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open graph file '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return io::parse_graph(text);
}

int verdict_code(bool ok) { return ok ? kExitOk : kExitVerdictFalse; }

int all_verdicts(const std::vector<TransferCertificate>& certs) {
  return verdict_code(std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.verdict; }));
}

Json instance_json(const Graph& g, const std::vector<TransferCertificate>& certs) {
  Json list = Json::array();
  for (const auto& c : certs) list.push_back(io::certificate_to_json(c));
  Json j;
  j["graph"] = io::graph_to_json(g);
  j["certificates"] = std::move(list);
  return j;
}

void add_graph_input(CLI::App* cmd, std::string& graph) {
  cmd->add_option("graph", graph, "Graph JSON file, or - for standard input")->required();
}

void add_output(CLI::App* cmd, std::string& output) {
  cmd->add_option("-o,--output", output, "Output file (default: standard output)");
}

void add_search_options(CLI::App* cmd, SearchConfig& cfg) {
  cmd->add_option("--horizon", cfg.horizon, "Largest time searched")->capture_default_str();
  cmd->add_option("--grid", cfg.grid_points, "Uniform grid points over [0, horizon]")->capture_default_str();
  cmd->add_option("--refine", cfg.refine_iterations, "Golden-section iterations per peak")->capture_default_str();
  cmd->add_option("--eps", cfg.epsilon, "Target gap: success when fidelity >= 1 - eps")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian pair state transfer on weighted graphs", "pairwalk"};
  app.require_subcommand(1);

  std::string graph_path, output, src, dst, pair, time = "0";
  double tol = kLpstTolerance;
  double alpha = 0.0;
  SearchConfig search_cfg;

  auto* twins = app.add_subcommand("twins", "List all twin vertex pairs");
  add_graph_input(twins, graph_path);
  add_output(twins, output);

  auto* check = app.add_subcommand("check-pst", "Check pair state transfer (or periodicity) at a time");
  add_graph_input(check, graph_path);
  check->add_option("--src", src, "Source pair a,b")->required();
  check->add_option("--dst", dst, "Target pair c,d")->required();
  check->add_option("--time", time, "Time: decimal or pi, pi/2, 3*pi/4, ...")->required();
  check->add_option("--tol", tol, "Verdict tolerance on 1 - fidelity")->capture_default_str();
  add_output(check, output);

  auto* search = app.add_subcommand("search", "Search [0, horizon] for pretty good pair state transfer");
  add_graph_input(search, graph_path);
  search->add_option("--src", src, "Source pair a,b")->required();
  search->add_option("--dst", dst, "Target pair c,d")->required();
  add_search_options(search, search_cfg);
  add_output(search, output);

  auto* perturb_cmd = app.add_subcommand("perturb", "Add alpha to the weight of the edge {a,b}");
  add_graph_input(perturb_cmd, graph_path);
  perturb_cmd->add_option("--pair", pair, "Vertex pair a,b")->required();
  perturb_cmd->add_option("--alpha", alpha, "Weight increment")->required();
  add_output(perturb_cmd, output);

  std::string family_tag_text;
  std::vector<std::string> family_params;
  auto* family = app.add_subcommand("family", "Generate a graph family");
  family->add_option("tag", family_tag_text,
                     "complete | complete-bipartite | cycle | path | circulant | kn-minus-matching")
      ->required();
  family->add_option("params", family_params,
                     "Sizes; circulant takes 'n s1,s2,...'; kn-minus-matching takes 'n u,v;u,v;...'");
  add_output(family, output);

  std::string t0 = "0", t1 = "pi";
  int steps = 101;
  auto* scan = app.add_subcommand("scan", "Sample fidelity over a time range as CSV");
  add_graph_input(scan, graph_path);
  scan->add_option("--src", src, "Source pair a,b")->required();
  scan->add_option("--dst", dst, "Target pair c,d")->required();
  scan->add_option("--t0", t0, "Start time")->capture_default_str();
  scan->add_option("--t1", t1, "End time")->capture_default_str();
  scan->add_option("--steps", steps, "Number of samples, endpoints included")->capture_default_str();
  add_output(scan, output);

  auto* lemma = app.add_subcommand("verify-lemma1", "Check the twin perturbation factorization of U(t)");
  add_graph_input(lemma, graph_path);
  lemma->add_option("--pair", pair, "Twin pair a,b")->required();
  lemma->add_option("--alpha", alpha, "Weight increment")->required();
  lemma->add_option("--time", time, "Time")->required();
  lemma->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  add_output(lemma, output);

  auto* construct = app.add_subcommand("construct", "Build a perturbed graph with verified certificates");
  construct->require_subcommand(1);

  auto* thm2b = construct->add_subcommand("thm2b", "Carry a known transfer across a twin perturbation");
  add_graph_input(thm2b, graph_path);
  thm2b->add_option("--pair", pair, "Twin pair a,b")->required();
  thm2b->add_option("--alpha", alpha, "Weight increment")->required();
  thm2b->add_option("--src", src, "Known transfer source")->required();
  thm2b->add_option("--dst", dst, "Known transfer target")->required();
  thm2b->add_option("--time", time, "Known transfer time")->required();
  thm2b->add_option("--tol", tol, "Verdict tolerance")->capture_default_str();
  add_output(thm2b, output);

  std::string q_list;
  auto* thm3b = construct->add_subcommand("thm3b", "Turn periodicity into transfer across a twin perturbation");
  add_graph_input(thm3b, graph_path);
  thm3b->add_option("--pair", pair, "Twin pair a,b")->required();
  thm3b->add_option("--alpha", alpha, "Weight increment")->required();
  thm3b->add_option("--time", time, "Time")->required();
  thm3b->add_option("--q", q_list, "Comma-separated q values (default: every vertex outside {a,b})");
  thm3b->add_option("--tol", tol, "Verdict tolerance")->capture_default_str();
  add_output(thm3b, output);

  std::size_t n = 0;
  auto* cor1 = construct->add_subcommand("cor1", "K_n minus one edge");
  cor1->add_option("--n", n, "Number of vertices")->required();
  cor1->add_option("--pair", pair, "Deleted edge a,b")->required();
  add_output(cor1, output);

  std::string matching, target;
  auto* cor2 = construct->add_subcommand("cor2", "K_n minus a matching");
  cor2->add_option("--n", n, "Number of vertices")->required();
  cor2->add_option("--matching", matching, "Matching edges u,v;u,v;...")->required();
  cor2->add_option("--target", target, "Target edge a,b of the matching")->required();
  add_output(cor2, output);

  auto* thm4 = construct->add_subcommand("thm4", "Pretty good transfer across a twin perturbation");
  add_graph_input(thm4, graph_path);
  thm4->add_option("--pair", pair, "Twin pair a,b")->required();
  thm4->add_option("--alpha", alpha, "Weight increment")->required();
  thm4->add_option("--src", src, "Source pair")->required();
  thm4->add_option("--dst", dst, "Target pair")->required();
  add_search_options(thm4, search_cfg);
  add_output(thm4, output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Sink sink{output, &out};
  try {
    if (*twins) {
      Json list = Json::array();
      for (const auto& p : all_twin_pairs(read_graph(graph_path, in))) list.push_back(Json::array({p.a(), p.b()}));
      sink.write(list.dump() + "\n");
      return kExitOk;
    }
    if (*check) {
      const auto cert = check_pair_lpst(read_graph(graph_path, in), io::parse_pair(src), io::parse_pair(dst),
                                        io::parse_time(time), tol);
      sink.write(io::certificate_to_json(cert).dump() + "\n");
      return verdict_code(cert.verdict);
    }
    if (*search) {
      const auto cert = search_pgst(read_graph(graph_path, in), io::parse_pair(src), io::parse_pair(dst), search_cfg);
      sink.write(io::certificate_to_json(cert).dump() + "\n");
      return verdict_code(cert.verdict);
    }
    if (*perturb_cmd) {
      const auto g = perturb(read_graph(graph_path, in), {io::parse_pair(pair), alpha});
      sink.write(io::dump_graph(g) + "\n");
      return kExitOk;
    }
    if (*family) {
      FamilySpec spec{family_from_tag(family_tag_text), {}, {}};
      for (std::size_t i = 0; i < family_params.size(); ++i) {
        const auto& p = family_params[i];
        if (spec.family == Family::Circulant && i == 1) {
          spec.connection_set = io::parse_int_list(p);
        } else if (spec.family == Family::KnMinusMatching && i >= 1) {
          for (const auto& e : io::parse_pair_list(p)) {
            spec.parameters.push_back(static_cast<long long>(e.a()));
            spec.parameters.push_back(static_cast<long long>(e.b()));
          }
        } else {
          const auto values = io::parse_int_list(p);
          spec.parameters.insert(spec.parameters.end(), values.begin(), values.end());
        }
      }
      sink.write(io::dump_graph(build_family(spec)) + "\n");
      return kExitOk;
    }
    if (*scan) {
      const auto samples = scan_fidelity(read_graph(graph_path, in), io::parse_pair(src), io::parse_pair(dst),
                                         io::parse_time(t0), io::parse_time(t1), steps);
      std::string csv = "t,fidelity\n";
      for (const auto& s : samples) csv += io::format_number(s.time) + "," + io::format_number(s.fidelity) + "\n";
      sink.write(csv);
      return kExitOk;
    }
    if (*lemma) {
      const Perturbation p{io::parse_pair(pair), alpha};
      const double t = io::parse_time(time);
      const auto check_result = verify_lemma1(read_graph(graph_path, in), p, t, tol);
      Json j;
      j["pair"] = Json::array({p.pair.a(), p.pair.b()});
      j["alpha"] = io::round_significant(alpha);
      j["time"] = io::round_significant(t);
      j["residual"] = io::round_significant(check_result.residual);
      j["tolerance"] = io::round_significant(tol);
      j["pass"] = check_result.pass;
      sink.write(j.dump() + "\n");
      return verdict_code(check_result.pass);
    }
    if (*thm2b) {
      const auto g = read_graph(graph_path, in);
      const auto known = check_pair_lpst(g, io::parse_pair(src), io::parse_pair(dst), io::parse_time(time), tol);
      const auto [perturbed, cert] = apply_lpst_preservation(g, {io::parse_pair(pair), alpha}, known);
      sink.write(instance_json(perturbed, {cert}).dump() + "\n");
      return verdict_code(cert.verdict);
    }
    if (*thm3b) {
      const auto g = read_graph(graph_path, in);
      const auto twin = io::parse_pair(pair);
      std::vector<PairState> periodic;
      if (q_list.empty()) {
        for (Vertex q = 0; q < g.order(); ++q)
          if (!twin.contains(q)) periodic.emplace_back(twin.a(), q);
      } else {
        for (auto q : io::parse_int_list(q_list)) {
          if (q < 0) throw InvalidArgument("q must be a non-negative vertex index");
          periodic.emplace_back(twin.a(), static_cast<Vertex>(q));
        }
      }
      const auto result = apply_periodicity_to_lpst(g, {twin, alpha}, periodic, io::parse_time(time), tol);
      sink.write(instance_json(result.graph, result.certificates).dump() + "\n");
      return all_verdicts(result.certificates);
    }
    if (*cor1) {
      const auto edge = io::parse_pair(pair);
      const auto result = construct_kn_minus_edge(n, edge.a(), edge.b());
      sink.write(instance_json(result.graph, result.certificates).dump() + "\n");
      return all_verdicts(result.certificates);
    }
    if (*cor2) {
      const auto edges = io::parse_pair_list(matching);
      const auto result = construct_kn_minus_matching(n, edges, io::parse_pair(target));
      sink.write(instance_json(result.graph, result.certificates).dump() + "\n");
      return all_verdicts(result.certificates);
    }
    if (*thm4) {
      const auto [perturbed, cert] = apply_pgst_preservation(read_graph(graph_path, in), {io::parse_pair(pair), alpha},
                                                             io::parse_pair(src), io::parse_pair(dst), search_cfg);
      sink.write(instance_json(perturbed, {cert}).dump() + "\n");
      return verdict_code(cert.verdict);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pairwalk::cli
