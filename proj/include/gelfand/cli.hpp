#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace gelfand {

// Everything a subcommand reads.  Filled from defaults, then the config file,
// then command-line flags.
struct RunConfig {
  int n = 1;
  std::optional<int> m;  // defaults to n
  int quadrature_order = 256;       // cap for the spherical-function rules
  double quadrature_tolerance = 1e-10;
  double radial_truncation_tol = 1e-14;
  int jet_max_degree = 8;
  double bump_support = 1.0;
  double bump_plateau = 0.5;
  std::string format = "csv";  // csv | json | svg
  std::string function = "gaussian";  // gaussian | zero | l2
  std::optional<double> tolerance;    // per-command default when unset
  double xi_min = 0, xi_max = 4, xi_step = 1;
  double r_min = 0, r_max = 4, r_step = 0.5;
  double at_xi = 1.0;  // spectral parameter of the spherical table
  int n_max = 3;
  double tolerance_scale = 1.0;
  std::string out;  // empty: standard output
};

// Applies "key = value" lines ('#' starts a comment).  Throws
// InvalidArgument on an unknown key, a line without '=', or a bad value.
void apply_config_text(const std::string& text, RunConfig& cfg);
// Throws InvalidArgument when a field is out of range (including (m, n) not
// in the spectrum's index set).
void validate(const RunConfig& cfg);

// Exit codes: 0 success, 1 a check or tolerance failed, 2 usage or config error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gelfand
