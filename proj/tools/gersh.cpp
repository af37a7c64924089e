// gersh: eigenvalue localization in reduced Gershgorin disks and rank
// certificates from shifted diagonal dominance.
//
// Exit codes: 0 success (certificate true where one is computed), 1
// certificate false, 2 input parse error, 3 precondition violation.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gersh/gersh.hpp"
#include "gersh/io.hpp"
#include "gersh/svg.hpp"

namespace {

using namespace gersh;
using gersh::io::json;

constexpr int kExitCertificateFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

Complex parse_complex_flag(const std::string& text) {
  auto parse_part = [](const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw parse_error("cannot parse number '" + s + "'");
    return v;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return Complex{parse_part(text), 0.0};
  return Complex{parse_part(text.substr(0, comma)), parse_part(text.substr(comma + 1))};
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path)
    io::write_file_atomic(*out_path, content);
  else
    std::cout << content;
}

struct DisksArgs {
  std::string input;
  std::string variant = "classical";
  std::optional<std::string> lambda_text;
  std::optional<std::string> out;
  std::optional<std::string> svg_out;
  bool plot_eigenvalues = false;
};

int run_disks(const DisksArgs& args) {
  const DenseMatrix a = io::read_matrix(args.input);
  DiskUnion disks;
  json report;
  report["variant"] = args.variant;
  if (args.variant == "classical") {
    disks = classical_disks(a);
  } else if (args.variant == "thm12") {
    disks = reduced_disks_thm12(a);
  } else if (args.variant == "cor14") {
    disks = reduced_disks_cor14(a);
  } else if (args.variant == "shifted") {
    const std::size_t n = a.rows();
    require_square(a, "disks");
    if (n < 2) throw precondition_error("disks --variant shifted: n >= 2 required");
    ShiftVector shifts = ShiftVector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Complex> pts;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) pts.push_back(a.at(i, j));
      shifts.row_shifts[i] = geometric_median(pts).minimizer;
    }
    disks = localization_union(a, shifts);
    report["shifts"] = io::shifts_to_json(shifts);
  } else {
    throw precondition_error("unknown disk variant: " + args.variant);
  }
  report["disks"] = io::disk_union_to_json(disks);
  if (args.lambda_text) {
    const Complex lambda = parse_complex_flag(*args.lambda_text);
    report["lambda"] = io::complex_to_json(lambda);
    report["contains_lambda"] = disks.contains(lambda, 0.0);
  }
  emit(args.out, io::dump_report(report));
  if (args.svg_out) {
    std::vector<Complex> markers;
    if (args.plot_eigenvalues) markers = oracle::eigenvalues(a).eigenvalues;
    io::write_file_atomic(*args.svg_out, svg::disks_svg(disks, markers));
  }
  return 0;
}

struct CertifyArgs {
  std::string input;
  std::string lambda_text = "0";
  bool two_sided = false;
  int rounds = 8;
  std::optional<std::string> out;
};

int run_certify(const CertifyArgs& args) {
  const DenseMatrix a = io::read_matrix(args.input);
  const Complex lambda = parse_complex_flag(args.lambda_text);
  const Certificate plain = is_diagonally_dominant(subtract_scaled_identity(a, lambda));
  Certificate cert;
  if (plain.verdict) {
    // Zero shifts already dominate: report the strongest tier.
    cert = plain;
    cert.lambda = lambda;
  } else {
    cert = args.two_sided ? search_two_sided(a, lambda, args.rounds)
                          : check_condition3(a, lambda);
  }
  emit(args.out, io::dump_report(io::certificate_to_json(cert)));
  return cert.verdict ? 0 : kExitCertificateFalse;
}

struct PairArgs {
  std::string input;
  std::string mode = "normal";
  std::string lambda_text;
  std::string mu_text;
  std::optional<std::string> out;
};

int run_pairdisks(const PairArgs& args) {
  const DenseMatrix a = io::read_matrix(args.input);
  const Complex lambda = parse_complex_flag(args.lambda_text);
  const Complex mu = parse_complex_flag(args.mu_text);
  PairDiskReport report;
  if (args.mode == "normal")
    report = normal_pair_disks(a, lambda, mu);
  else if (args.mode == "almost-symmetric")
    report = almost_symmetric_pair_disks(a, lambda, mu);
  else
    throw precondition_error("unknown pairdisks mode: " + args.mode);
  json j = io::pair_report_to_json(report);
  j["mode"] = args.mode;
  emit(args.out, io::dump_report(j));
  return 0;
}

struct OctaArgs {
  std::optional<std::string> input;
  std::optional<std::string> gram;
  double epsilon = 0.0;
  bool relaxed = false;
  std::optional<std::string> out;
};

int run_octa(const OctaArgs& args) {
  FeasibilityVerdict verdict;
  if (args.gram) {
    const DenseMatrix m = io::read_matrix(*args.gram);
    require_square(m, "octa --gram");
    if (m.rows() < 3) throw precondition_error("octa --gram: matrix too small");
    verdict = octahedron_verdict_gram(m, m.rows() - 2, args.epsilon, args.relaxed);
  } else if (args.input) {
    verdict = octahedron_verdict(io::read_point_set(*args.input), args.relaxed);
  } else {
    throw parse_error("octa: either --input or --gram is required");
  }
  emit(args.out, io::dump_report(io::feasibility_to_json(verdict)));
  return 0;
}

struct OctaGenArgs {
  std::size_t order = 8;
  std::optional<std::string> out;
};

int run_octa_gen(const OctaGenArgs& args) {
  const PointPairSet s = hadamard_octahedron(args.order);
  emit(args.out, io::dump_report(io::point_set_to_json(s)));
  return 0;
}

struct EigsArgs {
  std::string input;
  double cluster_tol = -1.0;
  std::optional<std::string> out;
};

int run_eigs(const EigsArgs& args) {
  const DenseMatrix a = io::read_matrix(args.input);
  const oracle::EigenSolution sol = oracle::eigenvalues(a, args.cluster_tol);
  emit(args.out, io::dump_report(io::eigen_solution_to_json(sol)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Gershgorin disks and shifted-dominance rank certificates"};
  app.require_subcommand(1);

  // Reserved for generator subcommands that draw random instances; the
  // current generators are deterministic.
  if (const char* seed = std::getenv("GERSH_SEED")) (void)seed;

  DisksArgs disks_args;
  auto* disks = app.add_subcommand("disks", "Disk families for a matrix");
  disks->add_option("--input", disks_args.input, "matrix file (.json or .csv)")->required();
  disks->add_option("--variant", disks_args.variant,
                    "classical | thm12 | cor14 | shifted");
  std::string disks_lambda, disks_out, disks_svg;
  disks->add_option("--lambda", disks_lambda, "point to test, RE or RE,IM");
  disks->add_option("--out", disks_out, "write JSON report here");
  disks->add_option("--svg", disks_svg, "write an SVG plot here");
  disks->add_flag("--plot-eigenvalues", disks_args.plot_eigenvalues,
                  "mark oracle eigenvalues in the SVG");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Rank lower-bound certificate");
  certify->add_option("--input", certify_args.input, "matrix file")->required();
  certify->add_option("--lambda", certify_args.lambda_text, "shift, RE or RE,IM");
  certify->add_flag("--two-sided", certify_args.two_sided, "search row and column shifts");
  certify->add_option("--rounds", certify_args.rounds, "alternating search rounds");
  std::string certify_out;
  certify->add_option("--out", certify_out, "write JSON certificate here");

  PairArgs pair_args;
  auto* pair = app.add_subcommand("pairdisks", "Enlarged disks for an eigenvalue pair");
  pair->add_option("--input", pair_args.input, "matrix file")->required();
  pair->add_option("--mode", pair_args.mode, "normal | almost-symmetric");
  pair->add_option("--lambda", pair_args.lambda_text, "first eigenvalue")->required();
  pair->add_option("--mu", pair_args.mu_text, "second eigenvalue")->required();
  std::string pair_out;
  pair->add_option("--out", pair_out, "write JSON report here");

  OctaArgs octa_args;
  auto* octa = app.add_subcommand("octa", "Approximate cross-polytope feasibility");
  std::string octa_input, octa_gram, octa_out;
  octa->add_option("--input", octa_input, "point-pair set file");
  octa->add_option("--gram", octa_gram, "Gram-level matrix file (synthetic route)");
  octa->add_option("--epsilon", octa_args.epsilon, "epsilon for --gram mode");
  octa->add_flag("--relaxed", octa_args.relaxed, "relaxed antipodal constraint");
  octa->add_option("--out", octa_out, "write JSON verdict here");

  OctaGenArgs gen_args;
  auto* gen = octa->add_subcommand("gen", "Generate a Hadamard near-extremal set");
  gen->add_option("--order", gen_args.order, "Hadamard order (power of two >= 4)")->required();
  std::string gen_out;
  gen->add_option("--out", gen_out, "write point-pair set here");

  EigsArgs eigs_args;
  auto* eigs = app.add_subcommand("eigs", "Oracle spectrum with multiplicity clusters");
  eigs->add_option("--input", eigs_args.input, "matrix file")->required();
  eigs->add_option("--cluster-tol", eigs_args.cluster_tol, "cluster linkage threshold");
  std::string eigs_out;
  eigs->add_option("--out", eigs_out, "write JSON spectrum here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*disks) {
      if (!disks_lambda.empty()) disks_args.lambda_text = disks_lambda;
      if (!disks_out.empty()) disks_args.out = disks_out;
      if (!disks_svg.empty()) disks_args.svg_out = disks_svg;
      return run_disks(disks_args);
    }
    if (*certify) {
      if (!certify_out.empty()) certify_args.out = certify_out;
      return run_certify(certify_args);
    }
    if (*pair) {
      if (!pair_out.empty()) pair_args.out = pair_out;
      return run_pairdisks(pair_args);
    }
    if (*octa) {
      if (*gen) {
        if (!gen_out.empty()) gen_args.out = gen_out;
        return run_octa_gen(gen_args);
      }
      if (!octa_input.empty()) octa_args.input = octa_input;
      if (!octa_gram.empty()) octa_args.gram = octa_gram;
      if (!octa_out.empty()) octa_args.out = octa_out;
      return run_octa(octa_args);
    }
    if (*eigs) {
      if (!eigs_out.empty()) eigs_args.out = eigs_out;
      return run_eigs(eigs_args);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
