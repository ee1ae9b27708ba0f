#include "spex/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spex/constructions.hpp"
#include "spex/cycles.hpp"
#include "spex/error.hpp"
#include "spex/family.hpp"
#include "spex/graph6.hpp"
#include "spex/report.hpp"
#include "spex/spectral.hpp"
#include "spex/verify.hpp"

namespace spex::cli {

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw argument_error("bad part list '" + text + "'");
    }
    if (used != item.size()) throw argument_error("bad part list '" + text + "'");
    parts.push_back(v);
  }
  return parts;
}

struct Common {
  double tol = kDefaultTol;
  std::string format = "json";
  std::string csv_path;
  bool force = false;
};

void add_tol(CLI::App* cmd, Common& c) {
  cmd->add_option("--tol", c.tol, "Residual tolerance for the power iteration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_report_flags(CLI::App* cmd, Common& c) {
  add_tol(cmd, c);
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  cmd->add_option("--csv", c.csv_path, "Also write the margin table to this CSV file");
}

class Emitter {
 public:
  Emitter(std::ostream& out, const Common& c) : out_(out), format_(c.format) {
    if (!c.csv_path.empty()) {
      csv_.open(c.csv_path);
      if (!csv_) throw argument_error("cannot open " + c.csv_path);
      csv_ << kMarginCsvHeader << '\n';
    }
    if (format_ == "csv") out_ << kMarginCsvHeader << '\n';
  }

  void emit(const VerificationReport& r, const nlohmann::ordered_json* extra = nullptr) {
    violated_ = violated_ || r.holds == Certainty::violated;
    if (csv_.is_open()) write_margin_rows(csv_, r);
    if (format_ == "csv") {
      write_margin_rows(out_, r);
    } else if (format_ == "text") {
      out_ << r.check_id << ' ' << r.params.dump() << ": " << to_string(r.holds) << '\n';
      for (const auto& m : r.margins) out_ << "  " << m.name << " = " << m.value << '\n';
    } else {
      nlohmann::ordered_json j = to_json(r);
      if (extra) j.update(*extra);
      out_ << j.dump() << '\n';
    }
  }

  int exit_code() const { return violated_ ? kExitViolated : kExitOk; }

 private:
  std::ostream& out_;
  std::string format_;
  std::ofstream csv_;
  bool violated_ = false;
};

Graph load_graph(const std::string& arg, std::istream& in, bool dominating_edge) {
  if (arg.empty() || arg == "-") return read_graph(in);
  return parse_graph_argument(arg, dominating_edge);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral-extremal planar graph toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  SpectralOptions spectral;

  // build
  std::string build_what;
  int n = 0;
  int k = 0;
  int a = 0;
  std::string parts_text;
  std::string out_format = "g6";
  bool no_edge = false;
  auto* build = app.add_subcommand("build", "Construct a graph (or a whole family L(n,a)) and print it");
  build->add_option("what", build_what, "extremal | join | lna | a family expression such as k2+[4,1,1]")->required();
  build->add_option("--n", n, "Order");
  build->add_option("--k", k, "Deficiency k (extremal)");
  build->add_option("--a", a, "Deficiency a (lna)");
  build->add_option("--parts", parts_text, "Comma-separated path orders (join)");
  build->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"g6", "edges"}))->capture_default_str();
  build->add_flag("--no-dominating-edge", no_edge, "Leave the two join vertices non-adjacent");

  // rho
  std::string graph_arg;
  std::string vector_path;
  auto* rho = app.add_subcommand("rho", "Spectral radius and Perron vector");
  rho->add_option("graph", graph_arg, "graph6 string or family expression; stdin when omitted");
  add_tol(rho, common);
  rho->add_option("--emit-vector", vector_path, "Write the Perron vector as CSV to this path ('-' for stdout)");
  rho->add_flag("--no-dominating-edge", no_edge, "k2+[...] without the u'u'' edge");

  // spectrum
  int ell_max = 0;
  long budget = kDefaultCycleBudget;
  bool no_fast_path = false;
  auto* spectrum = app.add_subcommand("spectrum", "Cycle lengths present in a graph, with certificates");
  spectrum->add_option("graph", graph_arg, "graph6 string or family expression; stdin when omitted");
  spectrum->add_option("--max", ell_max, "Largest length to test (default n)");
  spectrum->add_option("--budget", budget, "Search-node budget per length")->check(CLI::PositiveNumber);
  spectrum->add_flag("--no-fast-path", no_fast_path, "Always run the exact search");
  spectrum->add_flag("--no-dominating-edge", no_edge, "k2+[...] without the u'u'' edge");

  // member
  auto* member = app.add_subcommand("member", "Membership in G(n,k) with the smallest missing cycle length");
  member->add_option("graph", graph_arg, "graph6 string or family expression; stdin when omitted");
  member->add_option("--k", k, "Deficiency k")->required();
  member->add_option("--budget", budget, "Search-node budget per length")->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Certify one instance of a spectral inequality");
  verify->require_subcommand(1);
  int a1 = 0;
  int a2 = 0;
  std::string l1_text;
  std::string l2_text;
  int n1 = 0;
  int n2 = 0;
  std::string rest_text;
  auto* v_l1 = verify->add_subcommand("lemma1", "rho(K2 v L2) > rho(K2 v L1) for fewer paths in L2");
  v_l1->add_option("--n", n, "Order")->required();
  v_l1->add_option("--a1", a1, "Deficiency of L1")->required();
  v_l1->add_option("--a2", a2, "Deficiency of L2")->required();
  v_l1->add_option("--L1", l1_text, "Path orders of L1")->required();
  v_l1->add_option("--L2", l2_text, "Path orders of L2")->required();
  add_report_flags(v_l1, common);
  auto add_merge = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Order")->required();
    cmd->add_option("--k", k, "Deficiency k")->required();
    cmd->add_option("--n1", n1, "Longer path order")->required();
    cmd->add_option("--n2", n2, "Shorter path order")->required();
    cmd->add_option("--L", rest_text, "Remaining path orders (may be empty)");
    cmd->add_flag("--force", common.force, "Run below n >= 2^(k+8)+3; reports are flagged");
    add_report_flags(cmd, common);
  };
  auto* v_l2 = verify->add_subcommand("lemma2", "Merging two long paths raises the spectral radius");
  add_merge(v_l2);
  auto* v_c33 = verify->add_subcommand("claim33", "Perron-entry interval witnesses along two paths");
  add_merge(v_c33);
  auto* v_eb = verify->add_subcommand("entry-bounds", "Forest entries of K2 v L lie in [2/rho, 2/rho + 8/rho^2]");
  v_eb->add_option("--n", n, "Order")->required();
  v_eb->add_option("--L", l1_text, "Path orders")->required();
  add_report_flags(v_eb, common);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Parameter sweeps (parallel, deterministic output order)");
  sweep->require_subcommand(1);
  int max_parts = 3;
  int pair_sum = -1;
  int samples = 200;
  std::uint64_t seed = 1;
  int n_min = 20;
  int n_max = 100;
  auto* s_arg = sweep->add_subcommand("argmax", "Maximise rho(K2 v L) over the C_ell-free forests");
  s_arg->add_option("--n", n, "Order")->required();
  s_arg->add_option("--k", k, "Deficiency k")->required();
  s_arg->add_option("--parts", max_parts, "Largest number of paths")->capture_default_str();
  s_arg->add_flag("--force", common.force, "Run below n >= 2^(k+8)+3");
  add_report_flags(s_arg, common);
  auto* s_l1 = sweep->add_subcommand("lemma1", "Every admissible (a1, a2, L1, L2) at one order");
  s_l1->add_option("--n", n, "Order")->required();
  add_report_flags(s_l1, common);
  auto* s_l2 = sweep->add_subcommand("lemma2", "Every n1 >= n2 >= k+2 with a fixed n1 + n2");
  s_l2->add_option("--n", n, "Order")->required();
  s_l2->add_option("--k", k, "Deficiency k")->required();
  s_l2->add_option("--sum", pair_sum, "n1 + n2 (default n-2)");
  s_l2->add_flag("--force", common.force, "Run below n >= 2^(k+8)+3");
  add_report_flags(s_l2, common);
  auto* s_eb = sweep->add_subcommand("entry-bounds", "Random (n, L) samples of the entry bounds");
  s_eb->add_option("--samples", samples, "Number of samples")->capture_default_str();
  s_eb->add_option("--seed", seed, "RNG seed")->capture_default_str();
  s_eb->add_option("--nmin", n_min, "Smallest order")->capture_default_str();
  s_eb->add_option("--nmax", n_max, "Largest order")->capture_default_str();
  add_report_flags(s_eb, common);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in table of exact small checks");

  std::vector<std::string> argv_store{"spex"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    spectral.tol = common.tol;
    VerifyOptions vopts;
    vopts.spectral = spectral;
    vopts.force = common.force;

    if (*build) {
      std::vector<Graph> graphs;
      if (build_what == "extremal") {
        graphs.push_back(extremal_graph(n, k));
      } else if (build_what == "join") {
        graphs.push_back(k2_join(LinearForest(parse_parts(parts_text)), !no_edge));
      } else if (build_what == "lna") {
        for (const auto& f : enumerate_lna(n, a)) graphs.push_back(k2_join(f, !no_edge));
      } else if (auto g = parse_family(build_what, !no_edge)) {
        graphs.push_back(std::move(*g));
      } else {
        throw argument_error("unknown build target '" + build_what + "'");
      }
      for (const auto& g : graphs) out << (out_format == "g6" ? to_graph6(g) + "\n" : to_edge_list(g));
      return kExitOk;
    }
    if (*rho) {
      const Graph g = load_graph(graph_arg, in, !no_edge);
      const SpectralResult r = spectral_radius(g, spectral);
      auto write_vector = [&](std::ostream& os) {
        os << "vertex,x\n";
        for (std::size_t v = 0; v < r.x.size(); ++v) {
          char buf[64];
          auto res = std::to_chars(buf, buf + sizeof buf, r.x[v]);
          os << v << ',' << std::string(buf, res.ptr) << '\n';
        }
      };
      if (vector_path == "-") {
        write_vector(out);
        return kExitOk;
      }
      out << to_json(r).dump() << '\n';
      if (!vector_path.empty()) {
        std::ofstream f(vector_path);
        if (!f) throw argument_error("cannot open " + vector_path);
        write_vector(f);
      }
      return kExitOk;
    }
    if (*spectrum) {
      const Graph g = load_graph(graph_arg, in, !no_edge);
      SpectrumOptions so;
      so.budget = budget;
      so.use_fast_path = !no_fast_path;
      const CycleSpectrum sp = cycle_spectrum(g, ell_max > 0 ? ell_max : g.order(), so);
      out << to_json(sp).dump() << '\n';
      return kExitOk;
    }
    if (*member) {
      const Graph g = load_graph(graph_arg, in, true);
      SpectrumOptions so;
      so.budget = budget;
      const Membership m = in_gnk(g, k, so);
      nlohmann::ordered_json j;
      if (m.status == MembershipStatus::undetermined) {
        j["member"] = nullptr;
      } else {
        j["member"] = m.member();
      }
      j["witness"] = m.witness ? nlohmann::ordered_json(*m.witness) : nlohmann::ordered_json(nullptr);
      out << j.dump() << '\n';
      return m.status == MembershipStatus::undetermined ? kExitViolated : kExitOk;
    }
    if (*verify) {
      Emitter em(out, common);
      if (*v_l1) {
        em.emit(verify_lemma1(n, a1, a2, LinearForest(parse_parts(l1_text)), LinearForest(parse_parts(l2_text)), vopts));
      } else if (*v_l2 || *v_c33) {
        const PathMergeParams p{n, k, n1, n2, parse_parts(rest_text)};
        if (*v_l2) {
          em.emit(verify_lemma2(p, vopts));
        } else {
          const Claim33Result c = verify_claim33(p, vopts);
          nlohmann::ordered_json extra;
          extra["witnesses"] = nlohmann::ordered_json::array();
          for (const auto& w : c.witnesses) extra["witnesses"].push_back(to_json(w));
          em.emit(c.report, &extra);
        }
      } else if (*v_eb) {
        const auto parts = parse_parts(l1_text);
        em.emit(verify_entry_bounds(n, LinearForest(parts), vopts));
      }
      return em.exit_code();
    }
    if (*sweep) {
      Emitter em(out, common);
      if (*s_arg) {
        const ArgmaxResult r = argmax_sweep(n, k, max_parts, vopts);
        nlohmann::ordered_json extra;
        extra["ties"] = nlohmann::ordered_json::array();
        for (const auto& f : r.ties) extra["ties"].push_back(f.parts());
        em.emit(r.report, &extra);
      } else if (*s_l1) {
        em.emit(lemma1_sweep(n, vopts));
      } else if (*s_l2) {
        const PathMergeSweep r = lemma2_sweep(n, k, pair_sum < 0 ? n - 2 : pair_sum, vopts);
        for (const auto& p : r.points) em.emit(p);
        em.emit(r.summary);
      } else if (*s_eb) {
        const EntryBoundsSweep r = entry_bounds_sweep(samples, seed, n_min, n_max, vopts);
        for (const auto& p : r.points) em.emit(p);
        em.emit(r.summary);
      }
      return em.exit_code();
    }
    if (*selftest) return run_selftest(out) == 0 ? kExitOk : kExitViolated;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const construction_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolated;
  }
  return kExitOk;
}

}  // namespace spex::cli
