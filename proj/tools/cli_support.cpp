#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "csgreens/errors.hpp"
#include "csgreens/kernels2d.hpp"
#include "csgreens/kernels3d.hpp"
#include "csgreens/verify.hpp"

namespace csg::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(field + ": cannot parse number '" + s + "'");
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

QuantitySet parse_quantities(const std::string& spec) {
  QuantitySet q;
  if (spec.empty()) throw ValidationError("quantities: must not be empty");
  for (const auto& name : split(spec, ',')) {
    if (name == "U")
      q.u = true;
    else if (name == "Omega")
      q.omega = true;
    else if (name == "Sigma")
      q.sigma = true;
    else if (name == "Mu")
      q.mu = true;
    else if (name == "T")
      q.t = true;
    else if (name == "M")
      q.m = true;
    else
      throw ValidationError("quantities: unknown quantity '" + name +
                            "' (expected U, Omega, Sigma, Mu, T or M)");
  }
  if (q.empty()) throw ValidationError("quantities: must not be empty");
  return q;
}

std::vector<GridAxis> parse_grid(const std::string& spec, int dimension) {
  if (spec.empty()) throw ValidationError("grid: must not be empty");
  const auto parts = split(spec, ',');
  if (static_cast<int>(parts.size()) != dimension)
    throw ValidationError("grid: expected " + std::to_string(dimension) +
                          " axis specs 'min:max:count', got " +
                          std::to_string(parts.size()));
  std::vector<GridAxis> axes;
  for (const auto& part : parts) {
    const auto f = split(part, ':');
    if (f.size() != 3)
      throw ValidationError("grid: axis spec '" + part + "' is not min:max:count");
    GridAxis ax;
    ax.min = parse_double(f[0], "grid");
    ax.max = parse_double(f[1], "grid");
    try {
      ax.count = std::stoi(f[2]);
    } catch (const std::exception&) {
      throw ValidationError("grid: bad count in '" + part + "'");
    }
    if (ax.count < 1) throw ValidationError("grid: count must be at least 1");
    axes.push_back(ax);
  }
  return axes;
}

std::vector<std::vector<double>> lattice_points(const std::vector<GridAxis>& axes) {
  std::vector<std::vector<double>> coords;
  for (const auto& ax : axes) {
    std::vector<double> c;
    for (int i = 0; i < ax.count; ++i)
      c.push_back(ax.count == 1
                      ? ax.min
                      : ax.min + (ax.max - ax.min) * i / (ax.count - 1));
    coords.push_back(std::move(c));
  }
  // row-major: last axis fastest
  std::vector<std::vector<double>> pts;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    std::vector<double> p(axes.size());
    for (std::size_t d = 0; d < axes.size(); ++d) p[d] = coords[d][idx[d]];
    pts.push_back(std::move(p));
    int d = static_cast<int>(axes.size()) - 1;
    while (d >= 0) {
      if (++idx[d] < coords[d].size()) break;
      idx[d] = 0;
      --d;
    }
    if (d < 0) break;
  }
  return pts;
}

std::vector<std::vector<double>> read_points_file(const std::string& path,
                                                  int dimension) {
  std::ifstream in(path);
  if (!in) throw ValidationError("points: cannot open file '" + path + "'");
  std::vector<std::vector<double>> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ls(line);
    std::vector<double> vals;
    double v;
    while (ls >> v) vals.push_back(v);
    if (vals.empty()) continue;
    if (static_cast<int>(vals.size()) != dimension)
      throw ValidationError("points: line " + std::to_string(lineno) + " has " +
                            std::to_string(vals.size()) + " values, expected " +
                            std::to_string(dimension));
    pts.push_back(std::move(vals));
  }
  return pts;
}

namespace {

void tensor_headers(std::vector<std::string>& h, const std::string& base, int ni,
                    int nj, int nq) {
  // first index fastest, load column slowest; names carry indices in
  // the written order of the tensor symbol
  for (int q = 0; q < nq; ++q)
    for (int j = 0; j < nj; ++j)
      for (int i = 0; i < ni; ++i) {
        std::string name = base + "_";
        if (nj > 1) name += std::to_string(j + 1);
        name += std::to_string(i + 1);
        if (nq > 1) name += std::to_string(q + 1);
        h.push_back(name);
      }
}

}  // namespace

std::vector<std::string> column_headers(int dimension, Source source,
                                        const QuantitySet& q) {
  std::vector<std::string> h;
  const int n = dimension;
  const bool couple2d = (dimension == 2 && source == Source::Couple);
  if (q.u) {
    if (couple2d)
      tensor_headers(h, "U", n, 1, 1);
    else
      tensor_headers(h, "U", n, 1, n);
  }
  if (q.omega) {
    if (dimension == 3)
      tensor_headers(h, "Omega", n, 1, n);
    else if (source == Source::Force)
      tensor_headers(h, "Omega", n, 1, 1);  // one scalar per load column
    else
      h.push_back("Omega");
  }
  if (q.sigma) tensor_headers(h, "Sigma", n, n, couple2d ? 1 : n);
  if (q.mu) {
    if (couple2d)
      tensor_headers(h, "Mu", n, 1, 1);
    else
      tensor_headers(h, "Mu", n, 1, n);
  }
  if (q.t) {
    if (couple2d)
      tensor_headers(h, "T", n, 1, 1);
    else
      tensor_headers(h, "T", n, 1, n);
  }
  if (q.m) {
    if (dimension == 3)
      tensor_headers(h, "M", n, 1, n);
    else if (source == Source::Force)
      tensor_headers(h, "M", n, 1, 1);
    else
      h.push_back("M");
  }
  return h;
}

namespace {

// Omega of the 2D force bundle is one scalar per load column; name the
// columns Omega_1, Omega_2 through the vector header path above.

void append_mat(std::vector<double>& row, const Mat3& m) {
  for (int q = 0; q < 3; ++q)
    for (int i = 0; i < 3; ++i) row.push_back(m(i, q));
}

void append_mat(std::vector<double>& row, const Mat2& m) {
  for (int q = 0; q < 2; ++q)
    for (int i = 0; i < 2; ++i) row.push_back(m(i, q));
}

void append_ten(std::vector<double>& row, const Ten33& t) {
  for (int q = 0; q < 3; ++q)
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) row.push_back(t(j, i, q));
}

void append_ten(std::vector<double>& row, const Ten32& t) {
  for (int q = 0; q < 2; ++q)
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) row.push_back(t(j, i, q));
}

void append_sigma2(std::vector<double>& row, const Mat2& s) {
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) row.push_back(s(j, i));
}

std::vector<double> evaluate_row_3d(const MaterialParams& p, Source source,
                                    const QuantitySet& q, const Vec3& x,
                                    const std::vector<double>& normal) {
  const KernelBundle3D b = source == Source::Force ? point_force_kernels_3d(p, x)
                                                   : point_couple_kernels_3d(p, x);
  std::vector<double> row;
  if (q.u) append_mat(row, b.U);
  if (q.omega) append_mat(row, b.Omega);
  if (q.sigma) append_ten(row, b.Sigma);
  if (q.mu) append_mat(row, b.Mu);
  if (q.wants_traction()) {
    const Vec3 n{{normal[0], normal[1], normal[2]}};
    if (q.t) append_mat(row, force_traction_3d(b, n));
    if (q.m) append_mat(row, moment_traction_3d(b, n));
  }
  return row;
}

std::vector<double> evaluate_row_2d(const MaterialParams& p, Source source,
                                    const QuantitySet& q, const Vec2& x,
                                    const std::vector<double>& normal) {
  std::vector<double> row;
  if (source == Source::Force) {
    const KernelBundle2DForce b = line_force_kernels_2d(p, x);
    if (q.u) append_mat(row, b.U);
    if (q.omega) {
      row.push_back(b.Omega[0]);
      row.push_back(b.Omega[1]);
    }
    if (q.sigma) append_ten(row, b.Sigma);
    if (q.mu) append_mat(row, b.Mu);
    if (q.wants_traction()) {
      const Vec2 n{{normal[0], normal[1]}};
      if (q.t) append_mat(row, force_traction_2d(b, n));
      if (q.m) {
        const Vec2 m = moment_traction_2d(b, n);
        row.push_back(m[0]);
        row.push_back(m[1]);
      }
    }
  } else {
    const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
    if (q.u) {
      row.push_back(b.U[0]);
      row.push_back(b.U[1]);
    }
    if (q.omega) row.push_back(b.Omega);
    if (q.sigma) append_sigma2(row, b.Sigma);
    if (q.mu) {
      row.push_back(b.Mu[0]);
      row.push_back(b.Mu[1]);
    }
    if (q.wants_traction()) {
      const Vec2 n{{normal[0], normal[1]}};
      if (q.t) {
        const Vec2 t = force_traction_2d(b, n);
        row.push_back(t[0]);
        row.push_back(t[1]);
      }
      if (q.m) row.push_back(moment_traction_2d(b, n));
    }
  }
  return row;
}

}  // namespace

int run_eval(const EvalOptions& opt, std::ostream& out, std::ostream& diag) {
  const int dim = opt.dimension;
  Source source;
  if (opt.source == "force")
    source = Source::Force;
  else if (opt.source == "couple")
    source = Source::Couple;
  else
    throw ValidationError("source: must be 'force' or 'couple'");

  Format format;
  if (opt.format == "csv")
    format = Format::Csv;
  else if (opt.format == "records")
    format = Format::Records;
  else
    throw ValidationError("format: must be 'csv' or 'records'");

  const QuantitySet quants = parse_quantities(opt.quantities);

  std::vector<double> normal = opt.normal;
  if (quants.wants_traction()) {
    if (static_cast<int>(normal.size()) != dim)
      throw ValidationError(
          "normal: required (with " + std::to_string(dim) +
          " components) when T or M is requested");
    double n2 = 0.0;
    for (double v : normal) n2 += v * v;
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
      throw ValidationError("normal: must be a unit vector (|n| - 1 within 1e-12)");
  } else if (!normal.empty() &&
             static_cast<int>(normal.size()) != dim) {
    throw ValidationError("normal: expected " + std::to_string(dim) + " components");
  }

  MaterialParams p = [&] {
    try {
      return MaterialParams(opt.mu, opt.nu, opt.length_scale);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }();

  if (!opt.grid.empty() && !opt.points_file.empty())
    throw ValidationError("grid/points: give either a lattice or a point file, not both");
  std::vector<std::vector<double>> pts;
  if (!opt.points_file.empty())
    pts = read_points_file(opt.points_file, dim);
  else
    pts = lattice_points(parse_grid(opt.grid, dim));

  const double excl = opt.exclusion_radius > 0.0
                          ? opt.exclusion_radius
                          : (p.l > 0.0 ? 1e-9 * p.l : 1e-9);

  std::vector<std::string> headers;
  for (int d = 0; d < dim; ++d) headers.push_back("x" + std::to_string(d + 1));
  const auto value_headers = column_headers(dim, source, quants);
  headers.insert(headers.end(), value_headers.begin(), value_headers.end());

  if (format == Format::Csv) {
    for (std::size_t i = 0; i < headers.size(); ++i)
      out << (i ? "," : "") << headers[i];
    out << "\n";
  }

  int rows = 0;
  int skipped = 0;
  for (const auto& pt : pts) {
    double r2 = 0.0;
    for (double c : pt) r2 += c * c;
    if (std::sqrt(r2) < excl) {
      ++skipped;
      continue;
    }
    std::vector<double> row;
    try {
      row = dim == 3 ? evaluate_row_3d(p, source, quants,
                                       Vec3{{pt[0], pt[1], pt[2]}}, normal)
                     : evaluate_row_2d(p, source, quants, Vec2{{pt[0], pt[1]}},
                                       normal);
    } catch (const SingularPointError&) {
      ++skipped;
      continue;
    }
    if (format == Format::Csv) {
      std::string line;
      for (double c : pt) {
        if (!line.empty()) line += ",";
        line += fmt17(c);
      }
      for (double v : row) line += "," + fmt17(v);
      out << line << "\n";
    } else {
      nlohmann::ordered_json rec;
      std::size_t k = 0;
      for (double c : pt) rec[headers[k++]] = c;
      for (double v : row) rec[headers[k++]] = v;
      out << rec.dump() << "\n";
    }
    ++rows;
  }
  if (skipped > 0)
    diag << "skipped " << skipped << " point(s) inside the exclusion radius\n";
  return rows;
}

int run_verify(double mu, double nu, double length_scale, std::uint64_t seed,
               std::ostream& out) {
  MaterialParams p = [&] {
    try {
      return MaterialParams(mu, nu, length_scale);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }();
  const auto results = verify::run_verification_suite(p, seed);
  verify::print_report(results, out);
  if (verify::all_passed(results)) {
    out << "all checks passed\n";
    return 0;
  }
  out << "verification FAILED\n";
  return 2;
}

}  // namespace csg::cli
