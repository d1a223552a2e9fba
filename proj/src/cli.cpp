#include "modcert/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "modcert/edgelist.hpp"
#include "modcert/errors.hpp"
#include "modcert/generators.hpp"
#include "modcert/spectral.hpp"

namespace modcert {

namespace {

struct CommonOptions {
  std::string input;
  std::string out_path;
  bool json = false;
  double tol = 1e-8;
  int oracle_cap = 20;
  bool force_oracle = false;
  bool no_timestamp = false;
  bool allow_disconnected = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool needs_input = true) {
  if (needs_input)
    cmd->add_option("-i,--input", opts.input, "edge-list file")->required();
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
  cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
  cmd->add_option("--tol", opts.tol, "verification tolerance (default 1e-8)");
  cmd->add_option("--oracle-cap", opts.oracle_cap,
                  "max n for automatic exhaustive verification (default 20)");
  cmd->add_flag("--force-oracle", opts.force_oracle, "run the oracle regardless of the cap");
  cmd->add_flag("--no-timestamp", opts.no_timestamp, "omit the timestamp field");
  cmd->add_flag("--allow-disconnected", opts.allow_disconnected,
                "analyze disconnected graphs as well");
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(errc::parse_error, "cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

AnalyzeOptions to_analyze_options(const CommonOptions& opts, int eigenvector_index = 0) {
  AnalyzeOptions a;
  a.tolerance = opts.tol;
  a.oracle_cap = opts.oracle_cap;
  a.force_oracle = opts.force_oracle;
  a.with_timestamp = !opts.no_timestamp;
  a.allow_disconnected = opts.allow_disconnected;
  a.eigenvector_index = eigenvector_index;
  return a;
}

std::string format_set(const std::vector<int>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  os << '}';
  return os.str();
}

void render_certificates(const std::vector<ReportCertificate>& certs, std::ostream& out) {
  out << "certificates:\n";
  for (const auto& c : certs) {
    out << "  " << std::left << std::setw(21) << c.name << ' ' << std::setw(17) << c.verdict;
    if (c.lower.has_value() && c.upper.has_value())
      out << " bounds [" << *c.lower << ", " << *c.upper << "]";
    else if (c.lower.has_value())
      out << " lower bound " << *c.lower;
    if (c.domain.has_value()) out << " S=" << format_set(*c.domain);
    if (c.verified_against_oracle.has_value())
      out << (*c.verified_against_oracle ? " [oracle ok]" : " [ORACLE VIOLATION]");
    out << '\n';
  }
}

void render_oracle(const ReportOracle& o, std::ostream& out) {
  auto rat = [](const ReportRational& r) {
    std::ostringstream os;
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os.str();
  };
  out << "oracle (exhaustive, exact):\n";
  out << "  q_cut  = " << rat(o.q_cut.value) << " at " << format_set(o.q_cut.arg) << '\n';
  out << "  q_rcut = " << rat(o.q_rcut.value) << " at " << format_set(o.q_rcut.arg) << '\n';
  out << "  q_ncut = " << rat(o.q_ncut.value) << " at " << format_set(o.q_ncut.arg) << '\n';
  out << "  h_G    = " << rat(o.conductance.value) << " at " << format_set(o.conductance.arg)
      << '\n';
  if (o.multiway.has_value()) {
    out << "  best partition q = " << rat(o.multiway->best_q) << ", parts:";
    for (const auto& p : o.multiway->parts) out << ' ' << format_set(p);
    if (o.multiway->module_count.has_value())
      out << " (all modules, k = " << *o.multiway->module_count << ')';
    out << '\n';
  }
}

}  // namespace

void render_text_report(const AnalysisReport& r, std::ostream& out) {
  out << "graph: n=" << r.graph.n << " |E|=" << r.graph.edges << " vol=" << r.graph.volume
      << " connected=" << (r.graph.connected ? "yes" : "no")
      << " bipartite=" << (r.graph.bipartite ? "yes" : "no")
      << " classification=" << r.graph.classification << '\n';
  out << std::setprecision(12);
  auto spectrum_line = [&](const ReportSpectrum& s) {
    out << "spectrum " << s.matrix << " (descending):";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      out << ' ' << s.eigenvalues[i];
      if (static_cast<int>(i) == s.kernel_index) out << "(kernel)";
    }
    out << "  max residual " << s.max_residual << '\n';
  };
  spectrum_line(r.modularity_spectrum);
  spectrum_line(r.normalized_spectrum);
  out << "algebraic: m_G=" << r.m_g << (r.m_g_simple ? " (simple)" : "")
      << " mu_G=" << r.mu_g << (r.mu_g_simple ? " (simple)" : "") << " mu_1=" << r.mu_1
      << " lambda_2=" << r.lambda_2 << '\n';
  out << "nodal domain S = " << format_set(r.nodal_domain.vertices);
  if (!r.nodal_domain.ambiguous.empty())
    out << " (sign-ambiguous: " << format_set(r.nodal_domain.ambiguous) << ')';
  out << '\n';
  if (r.nodal_domain.cut.has_value()) {
    const auto& c = *r.nodal_domain.cut;
    out << "  Q(S) = " << c.q.num << '/' << c.q.den << ", q_rel = " << c.q_rel
        << ", q_norm = " << c.q_norm << ", h = " << c.conductance << ", e_in = " << c.e_in
        << ", e_out = " << c.e_out << '\n';
  }
  render_certificates(r.certificates, out);
  if (r.oracle.has_value()) render_oracle(*r.oracle, out);
  if (r.verification.has_value())
    out << "verification: "
        << (r.verification->all_ok ? "all certificates consistent with the oracle"
                                   : "ORACLE VIOLATION, see certificate lines")
        << '\n';
}

int exit_code_for_verification(const AnalysisReport& report) {
  return report.verification.has_value() && !report.verification->all_ok ? 3 : 0;
}

namespace {

int cmd_analyze_or_certify(const CommonOptions& opts, int eigenvector_index,
                           bool certificates_only, std::ostream& out_stream) {
  Graph g = load_edge_list_file(opts.input);
  AnalysisReport report = build_analysis_report(g, to_analyze_options(opts, eigenvector_index));
  OutputTarget target(opts.out_path, out_stream);
  if (opts.json) {
    nlohmann::json j;
    if (certificates_only) {
      j["schema"] = report.schema;
      j["certificates"] = report.certificates;
      if (report.verification.has_value()) j["verification"] = *report.verification;
    } else {
      j = report;
    }
    target.get() << j.dump(2) << '\n';
  } else {
    if (certificates_only) {
      render_certificates(report.certificates, target.get());
      if (report.verification.has_value())
        target.get() << "verification: "
                     << (report.verification->all_ok ? "consistent" : "VIOLATION") << '\n';
    } else {
      render_text_report(report, target.get());
    }
  }
  return exit_code_for_verification(report);
}

int cmd_oracle(const CommonOptions& opts, std::ostream& out_stream) {
  Graph g = load_edge_list_file(opts.input);
  OracleResult oracle = brute_force_cuts(g);
  ReportOracle report = make_report_oracle(oracle);
  OutputTarget target(opts.out_path, out_stream);
  if (opts.json) {
    nlohmann::json j = report;
    target.get() << j.dump(2) << '\n';
  } else {
    render_oracle(report, target.get());
  }
  return 0;
}

int cmd_spectrum(const CommonOptions& opts, const std::string& which, std::ostream& out_stream) {
  Graph g = load_edge_list_file(opts.input);
  SymMatrix m(1);
  int n = g.vertex_count();
  std::vector<double> kernel_dir;
  auto ones = std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> delta(n);
  for (int v = 0; v < n; ++v)
    delta[v] = std::sqrt(static_cast<double>(g.degree(v)) / g.volume());
  if (which == "M") {
    m = modularity_matrix(g);
    kernel_dir = ones;
  } else if (which == "Mnorm") {
    m = normalized_modularity_matrix(g);
    kernel_dir = delta;
  } else if (which == "L") {
    m = combinatorial_laplacian(g);
    kernel_dir = ones;
  } else if (which == "Lnorm") {
    m = normalized_laplacian(g);
    kernel_dir = delta;
  } else if (which == "A") {
    m = adjacency_matrix(g);
  } else if (which == "Anorm") {
    m = normalized_adjacency_matrix(g);
  } else {
    fail(errc::parse_error, "unknown matrix '" + which + "'");
  }
  auto spec = eig_sym(m);
  int kernel = -1;
  if (!kernel_dir.empty()) {
    double best = 0.0;
    for (std::size_t k = 0; k < spec.vectors.size(); ++k) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += spec.vectors[k][i] * kernel_dir[i];
      if (std::abs(dot) > best) {
        best = std::abs(dot);
        kernel = static_cast<int>(k);
      }
    }
  }
  OutputTarget target(opts.out_path, out_stream);
  if (opts.json) {
    ReportSpectrum report{which, spec.values, spec.max_residual(), kernel};
    nlohmann::json j = report;
    target.get() << j.dump(2) << '\n';
  } else {
    target.get() << "eigenvalues of " << which << " (descending):\n" << std::setprecision(12);
    for (std::size_t k = 0; k < spec.values.size(); ++k) {
      target.get() << "  " << spec.values[k];
      if (static_cast<int>(k) == kernel)
        target.get() << "   (kernel: " << (which == "M" || which == "L" ? "ones" : "delta") << ')';
      target.get() << '\n';
    }
    target.get() << "max residual " << spec.max_residual() << '\n';
  }
  return 0;
}

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) fail(errc::parse_error, "empty size in '" + text + "'");
    sizes.push_back(std::stoi(tok));
  }
  if (sizes.empty()) fail(errc::parse_error, "no sizes in '" + text + "'");
  return sizes;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 std::uint64_t seed, const std::string& out_path, std::ostream& out_stream) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      fail(errc::parse_error, family + " expects " + std::to_string(k) + " parameter(s)");
  };
  Graph g = [&]() {
    if (family == "complete") {
      need(1);
      return make_complete(std::stoi(params[0]));
    }
    if (family == "star") {
      need(1);
      return make_star(std::stoi(params[0]));
    }
    if (family == "cycle") {
      need(1);
      return make_cycle(std::stoi(params[0]));
    }
    if (family == "path") {
      need(1);
      return make_path(std::stoi(params[0]));
    }
    if (family == "complete_multipartite") {
      need(1);
      auto sizes = parse_size_list(params[0]);
      return make_complete_multipartite(sizes);
    }
    if (family == "planted_partition") {
      need(3);
      auto sizes = parse_size_list(params[0]);
      return make_planted_partition(sizes, std::stod(params[1]), std::stod(params[2]), seed);
    }
    fail(errc::parse_error, "unknown family '" + family + "'");
  }();
  OutputTarget target(out_path, out_stream);
  target.get() << write_edge_list(g);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modularity matrices, spectra, and certified bounds for graph cuts"};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "full spectral and certificate report");
  add_common_flags(analyze, analyze_opts);

  CommonOptions certify_opts;
  int eigenvector_index = 0;
  auto* certify = app.add_subcommand("certify", "bound certificates for one eigenpair");
  add_common_flags(certify, certify_opts);
  certify->add_option("--eigenvector-index", eigenvector_index,
                      "0-based index into the deflated spectrum (default 0 = leading)");

  CommonOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "exhaustive exact cut optima");
  add_common_flags(oracle, oracle_opts);

  CommonOptions spectrum_opts;
  std::string matrix_choice = "Mnorm";
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table of a graph matrix");
  add_common_flags(spectrum, spectrum_opts);
  spectrum->add_option("--matrix", matrix_choice, "M|Mnorm|L|Lnorm|A|Anorm (default Mnorm)")
      ->check(CLI::IsMember({"M", "Mnorm", "L", "Lnorm", "A", "Anorm"}));

  std::string family;
  std::vector<std::string> family_params;
  std::uint64_t seed = 0;
  std::string generate_out;
  auto* generate = app.add_subcommand("generate", "write an edge-list file for a graph family");
  generate->add_option("family", family,
                       "complete|star|cycle|path|complete_multipartite|planted_partition")
      ->required();
  generate->add_option("params", family_params, "family parameters");
  generate->add_option("--seed", seed, "random seed (planted_partition)");
  generate->add_option("--out", generate_out, "output file (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("modcert");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze_or_certify(analyze_opts, 0, false, out);
    if (certify->parsed())
      return cmd_analyze_or_certify(certify_opts, eigenvector_index, true, out);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, out);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts, matrix_choice, out);
    if (generate->parsed()) return cmd_generate(family, family_params, seed, generate_out, out);
  } catch (const Error& e) {
    bool json_requested = analyze_opts.json || certify_opts.json || oracle_opts.json ||
                          spectrum_opts.json;
    if (json_requested) {
      nlohmann::json j{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
      out << j.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace modcert
