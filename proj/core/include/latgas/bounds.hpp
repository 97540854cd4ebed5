#pragma once

#include <map>
#include <string>
#include <vector>

#include "latgas/dual.hpp"
#include "latgas/model.hpp"
#include "latgas/operators.hpp"

namespace latgas {

struct LambdaGrid {
  double lambda0 = 1e-2;
  double ratio = 0.5623413251903491;  // 10^{-1/4}
  int count = 25;
  std::vector<double> values() const;
};

// Dirichlet-form comparison S vs S0 (Eq. S_comp): c1 <f,(-S0)f> <= <f,(-S)f>
// <= c2 <f,(-S0)f>, with conservative explicit constants computed from the
// rate tables and the coercive path decomposition.
struct ComparisonConstants {
  double c1 = 0, c2 = 0;
  double min_symmetrized_rate = 0;
  int max_path_length = 0;
};
ComparisonConstants comparison_constants(const Model& m);

// Certified lambda-independent bound on 2 chi <<v_i,(lambda-L)^{-1} v_i>> via
// the gradient (triviality) decomposition of v in reduced classes.
double v_term_bound(const FluxBundle& fb, int axis, const ComparisonConstants& cc);

struct BoundDiagnostics {
  std::map<std::string, double> constants;  // surfaced constants, by name
  std::vector<std::string> notes;
};

struct DhatCurve {
  std::string model_name;
  double rho = 0.5;
  int axis = 0;
  double C = 0;  // C_ii
  std::vector<double> lambda;
  std::vector<double> lower, upper;
  BoundDiagnostics diag;
};

// Upper bound: C_ii + 2 chi / min(1,c1) * sum over degrees of certified
// <<w_n,(lambda-S0)^{-1}w_n>> bounds (exact reflected-walk Fourier integral
// for degree 2 in d=1; pointwise-class constants otherwise).
std::vector<double> upper_bound_dhat(const Model& m, const FluxBundle& fb, int axis,
                                     const std::vector<double>& lambdas,
                                     BoundDiagnostics* diag = nullptr);

// Variational lower bound with the regime's Fourier test-function family
// snapped to the M_2^(1) / M_3^(1) / M_2^(2) block structure; the quadratic
// penalty is bounded building block by building block.
std::vector<double> lower_bound_dhat(const Model& m, const FluxBundle& fb, int axis,
                                     const std::vector<double>& lambdas, Regime regime,
                                     BoundDiagnostics* diag = nullptr);

DhatCurve compute_dhat_curve(const Model& m, double rho, const LambdaGrid& grid, int axis = 0);

// ---- scaling fits ---------------------------------------------------------

enum class ScalingForm { power, log, loglog };

struct FitResult {
  double exponent = 0;     // power-law exponent from log-log least squares
  double log_coeff = 0;    // slope of y vs log(1/lambda)
  ScalingForm best = ScalingForm::power;
  double r2_power = 0, r2_log = 0, r2_loglog = 0;
  double r2_best = 0;
};

// Least squares on (lambda, y) with model selection between y ~ lambda^a,
// y ~ b log(1/lambda) + c, and y ~ b loglog(1/lambda) + c.
FitResult fit_scaling(const std::vector<double>& lambdas, const std::vector<double>& ys);
FitResult fit_scaling_window(const std::vector<double>& lambdas, const std::vector<double>& ys,
                             double lo, double hi);
// Plain least squares of y against x; returns (slope, intercept, r2).
void linear_fit(const std::vector<double>& x, const std::vector<double>& y, double& slope,
                double& intercept, double& r2);

// ---- mode coupling ---------------------------------------------------------

struct ModeCouplingProblem {
  int n = 2;          // flux power in j(rho) = v rho^n
  int d = 2;          // spatial dimension
  double D = 1.0;     // bare diffusivity
  double coupling = 1.0;
  int grid = 64;      // k-grid points per axis on [-pi,pi)
  double t_max = 1e4;
  double dt0 = 0.02;  // initial step; doubled whenever the window fills
  int window = 128;   // history length per doubling level
  double s0 = 1.0;    // S(k,0)
};

struct ModeCouplingResult {
  double zeta = 0;
  double r2_log = 0;       // fit quality of the (log t)^zeta model
  double r2_nolog = 0;     // fit quality of the pure-diffusive model
  bool prefer_log = false;
  std::vector<double> fit_times;
  std::vector<double> fit_values;  // R(t) = (Y/t - D k^2)/ (a k^2) profile
};

ModeCouplingResult mode_coupling_zeta(const ModeCouplingProblem& p);

}  // namespace latgas
