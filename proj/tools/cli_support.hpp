#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "csgreens/material.hpp"

namespace csg::cli {

/// Validation failure in a request; the message names the offending
/// field. Mapped to exit code 1.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Source { Force, Couple };
enum class Format { Csv, Records };

struct QuantitySet {
  bool u = false, omega = false, sigma = false, mu = false, t = false, m = false;
  bool wants_traction() const { return t || m; }
  bool empty() const { return !(u || omega || sigma || mu || t || m); }
};

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

/// Evaluation request as assembled from flags and/or a config file.
struct EvalOptions {
  int dimension = 3;
  std::string source = "force";
  std::string quantities;
  std::vector<double> normal;  // empty when not given
  double mu = 1.0;
  double nu = 0.3;
  double length_scale = 0.1;
  std::string grid;         // "min:max:count[,...]", one spec per axis
  std::string points_file;  // exclusive with grid
  double exclusion_radius = 0.0;  // <= 0 selects the default
  std::string format = "csv";
};

QuantitySet parse_quantities(const std::string& spec);
std::vector<GridAxis> parse_grid(const std::string& spec, int dimension);
std::vector<std::vector<double>> lattice_points(const std::vector<GridAxis>& axes);
std::vector<std::vector<double>> read_points_file(const std::string& path,
                                                  int dimension);

/// Column names after the coordinates, in the documented fixed order
/// (U, Omega, Sigma, Mu, T, M; within a tensor the first index varies
/// fastest, the load column slowest).
std::vector<std::string> column_headers(int dimension, Source source,
                                        const QuantitySet& q);

/// Evaluates the requested kernels at grid points and writes one output
/// row per point. Points inside the exclusion radius are skipped; the
/// skip count goes to the diagnostic stream. Returns the number of rows
/// written.
int run_eval(const EvalOptions& opt, std::ostream& out, std::ostream& diag);

/// Runs the verification suite; prints one line per check. Returns 0 on
/// success and 2 when any check fails.
int run_verify(double mu, double nu, double length_scale, std::uint64_t seed,
               std::ostream& out);

}  // namespace csg::cli
