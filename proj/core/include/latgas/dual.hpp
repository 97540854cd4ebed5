#pragma once

#include <map>
#include <string>
#include <vector>

#include "latgas/lattice.hpp"
#include "latgas/model.hpp"
#include "latgas/rational.hpp"

namespace latgas {

// Local function in the orthonormal basis heta_Lambda = prod chi^{-1/2}(eta_x - rho).
struct DualFunction {
  DensityContext ctx;
  std::map<SiteSet, double> coeffs;  // no stored zeros

  explicit DualFunction(const DensityContext& c) : ctx(c) {}

  void add(const SiteSet& k, double v);
  double coeff(const SiteSet& k) const;
  int min_degree() const;
  int max_degree() const;
  DualFunction degree_part(int n) const;
  DualFunction degrees_at_least(int n) const;

  // E_{rho'}[f] using E_{rho'}[heta^rho_Lambda] = ((rho'-rho)/sqrt(chi))^{|Lambda|}.
  double mean_at(double rho_prime) const;
};

DualFunction dual_add(const DualFunction& f, const DualFunction& g, double scale_g = 1.0);
DualFunction dual_scale(double s, const DualFunction& f);
// <f,g> = sum_Lambda f_Lambda g_Lambda = E[f g].
double dual_inner(const DualFunction& f, const DualFunction& g);
// Product using heta_x^2 = 1 + kappa heta_x.
DualFunction dual_mul(const DualFunction& f, const DualFunction& g);

// Exact occupancy-to-dual expansion: eta_Lambda = prod (rho + sqrt(chi) heta_x).
DualFunction expand_dual(const MonomialFn& f, const DensityContext& ctx);
std::map<SiteSet, QSqrtChi> expand_dual_exact(const MonomialFn& f,
                                              const DensityContextExact& ctx);
// Inverse: heta_Lambda expanded back into occupancy monomials (coefficients
// as doubles; round-trips with expand_dual to ~1e-14).
std::map<SiteSet, double> dual_to_monomials(const DualFunction& f);
// Pointwise evaluation at a configuration given by its occupied sites.
double dual_eval(const DualFunction& f, const std::vector<Point>& occupied_sorted);

// ---- dimension reduction ---------------------------------------------------

// Translation-reduced degree-n coefficients bar f_Lambda = sum_y f_{Lambda+y},
// indexed by canonical class representatives (lex-smallest translate).
struct ReducedFunction {
  int n = 0;  // degree
  int d = 1;
  std::map<SiteSet, double> coeffs;

  void add(const SiteSet& canonical_rep, double v);
  double at(const SiteSet& canonical_rep) const;
};

ReducedFunction dimension_reduce(const DualFunction& f, int degree);
// <<f,g>> = sum over classes of bar f bar g, per common degree.
double reduced_inner(const ReducedFunction& f, const ReducedFunction& g);
double biform_lattice(const DualFunction& f, const DualFunction& g);  // via reduction, all degrees

// d=1 gap-coordinate views.
std::vector<int> reduced_gaps(const SiteSet& canonical_rep);
SiteSet class_from_gaps(const std::vector<int>& gaps);

// ---- flux --------------------------------------------------------------------

struct FluxBundle {
  DensityContext ctx;
  std::vector<MonomialFn> W_mono, Wstar_mono;  // canonical telescoped fluxes
  std::vector<DualFunction> W, Wstar;          // dual forms of the above
  std::vector<DualFunction> w;                 // symmetrized, degrees >= 2
  std::vector<DualFunction> v;                 // (W - W*)/2
  std::vector<Polynomial> j;                   // exact macroscopic flux j_i(rho)
  std::vector<double> C;                       // C_ii = sum_y y_i^2 E r(y,.)

  explicit FluxBundle(const DensityContext& c) : ctx(c) {}
};

// Canonical telescoping: L eta_0 = sum_i d_i W_i with d_i f = f o tau_{e_i} - f,
// staircase axis 1 first. `alternate_order` reverses the axis order (used by
// the W-choice-independence regression tests).
std::vector<MonomialFn> microscopic_flux_monomials(const Model& m, bool alternate_order = false);
FluxBundle microscopic_flux(const Model& m, const DensityContext& ctx,
                            bool alternate_order = false);

// Exact polynomial j_i(rho) = sum_y (y.e_i) E_rho[r(y,eta) eta_0 (1-eta_y)].
std::vector<Polynomial> macroscopic_flux(const Model& m);

// k! chi^{-k/2} sum_{|Lambda|=k} (w_i)_Lambda; equals d^k j_i / d rho^k.
double flux_derivative(const FluxBundle& bundle, int k, int axis = 0);

// ---- regime classification ----------------------------------------------------

enum class Regime {
  d1_generic,
  d1_inflection,
  d1_double_inflection,
  d2_generic,
  d2_diffusive,
  d3_diffusive,
};
std::string regime_name(Regime r);

struct AxisReport {
  double j1 = 0, j2 = 0, j3 = 0;  // j', j'', j''' at rho
  bool j2_zero = true, j3_zero = true;
};

struct RegimeReport {
  Regime tag;
  std::vector<AxisReport> axes;
  int drift_axis = 0;  // first axis with j'' != 0, else 0
  std::string prediction;     // expected D-hat scaling
  std::string bound_lower;    // proved lower bound scaling
  std::string bound_upper;    // proved upper bound scaling
};

RegimeReport classify_regime(const Model& m, const Rational& rho);
RegimeReport classify_regime(const Model& m, double rho);

}  // namespace latgas
