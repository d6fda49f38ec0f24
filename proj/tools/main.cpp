#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "csgreens/catalogue.hpp"
#include "csgreens/errors.hpp"

namespace {

struct OutputSink {
  std::ofstream file;
  std::ostream& stream(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw csg::cli::ValidationError("output: cannot open '" + path + "'");
    return file;
  }
};

void add_eval_flags(CLI::App* cmd, csg::cli::EvalOptions& opt, std::string& output) {
  cmd->add_option("--source", opt.source, "source type: force or couple")
      ->capture_default_str();
  cmd->add_option("--quantities", opt.quantities,
                  "comma list drawn from U,Omega,Sigma,Mu,T,M")
      ->required();
  cmd->add_option("--normal", opt.normal,
                  "unit normal for tractions, comma separated")
      ->delimiter(',');
  cmd->add_option("--mu", opt.mu, "shear modulus")->capture_default_str();
  cmd->add_option("--nu", opt.nu, "Poisson ratio")->capture_default_str();
  cmd->add_option("--length-scale", opt.length_scale,
                  "characteristic material length l, in the same units as "
                  "the coordinates")
      ->capture_default_str();
  cmd->add_option("--grid", opt.grid, "lattice spec min:max:count per axis");
  cmd->add_option("--points", opt.points_file,
                  "file of field points, one per line");
  cmd->add_option("--exclusion-radius", opt.exclusion_radius,
                  "skip points closer to the source than this (default 1e-9 l)");
  cmd->add_option("--format", opt.format, "output format: csv or records")
      ->capture_default_str();
  cmd->add_option("--output", output, "write to a file instead of stdout");
  cmd->set_config("--config", "", "plain-text key=value option file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental solutions of isotropic determinate couple stress "
               "elasticity: evaluate influence tensors, verify them, or print "
               "the kernel catalogue"};
  app.require_subcommand(1);

  csg::cli::EvalOptions opt3;
  opt3.dimension = 3;
  std::string out3;
  auto* eval3d = app.add_subcommand(
      "eval3d", "evaluate 3D point-source kernels on a grid of field points");
  add_eval_flags(eval3d, opt3, out3);

  csg::cli::EvalOptions opt2;
  opt2.dimension = 2;
  std::string out2;
  auto* eval2d = app.add_subcommand(
      "eval2d", "evaluate plane-strain line-source kernels on a grid");
  add_eval_flags(eval2d, opt2, out2);

  double vmu = 1.0, vnu = 0.3, vl = 0.1;
  std::uint64_t seed = 42;
  std::string outv;
  auto* verify = app.add_subcommand(
      "verify", "run the full kernel verification suite at seeded points");
  verify->add_option("--mu", vmu, "shear modulus")->capture_default_str();
  verify->add_option("--nu", vnu, "Poisson ratio")->capture_default_str();
  verify->add_option("--length-scale", vl, "characteristic material length")
      ->capture_default_str();
  verify->add_option("--seed", seed, "sample-point seed")->capture_default_str();
  verify->add_option("--output", outv, "write the report to a file");
  verify->set_config("--config", "", "plain-text key=value option file");

  std::string outc;
  auto* catalogue = app.add_subcommand(
      "catalogue", "print the implemented kernels and the errata list");
  catalogue->add_option("--output", outc, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    OutputSink sink;
    if (*eval3d) {
      csg::cli::run_eval(opt3, sink.stream(out3), std::cerr);
      return 0;
    }
    if (*eval2d) {
      csg::cli::run_eval(opt2, sink.stream(out2), std::cerr);
      return 0;
    }
    if (*verify) return csg::cli::run_verify(vmu, vnu, vl, seed, sink.stream(outv));
    if (*catalogue) {
      csg::print_catalogue(sink.stream(outc));
      return 0;
    }
  } catch (const csg::cli::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
