#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latgas/lattice.hpp"
#include "latgas/rational.hpp"

namespace latgas {

// Local function written in the density-free occupancy-monomial basis:
// f(eta) = sum_Lambda c_Lambda prod_{x in Lambda} eta_x.
using MonomialFn = std::map<SiteSet, Rational>;

MonomialFn mono_scale(const Rational& s, const MonomialFn& f);
MonomialFn mono_add(const MonomialFn& f, const MonomialFn& g);
MonomialFn mono_mul(const MonomialFn& f, const MonomialFn& g);
MonomialFn mono_translate(const MonomialFn& f, const Point& y);
// E_rho[f] as a polynomial in rho (E[eta_Lambda] = rho^|Lambda|).
Polynomial mono_expectation(const MonomialFn& f);
double mono_eval(const MonomialFn& f, const std::vector<Point>& occupied_sorted);

// Jump-rate truth table over an ordered window. Pattern bit i is the
// occupancy of window[i]; the window never contains 0 or the displacement y.
struct RateTable {
  std::vector<Point> window;
  std::vector<Rational> values;  // size 2^window.size()

  Rational value(unsigned pattern) const { return values.at(pattern); }
  Rational max_value() const;
  Rational min_value() const;
  MonomialFn to_monomials() const;  // exact Moebius inversion of the table
};

RateTable constant_rate(const Rational& r);
RateTable table_from_monomials(const std::vector<Point>& window, const MonomialFn& f);

struct Model {
  int d = 1;
  int radius = 2;  // K: windows within [-K,K]^d, rates vanish for |y|_inf >= K
  std::map<Point, RateTable> rates;
  std::string name;

  const RateTable* table(const Point& y) const;
  std::vector<Point> displacements() const;
  // r(y, eta) with eta given by a sorted list of occupied sites (local).
  Rational rate(const Point& y, const std::vector<Point>& occupied_sorted) const;
  MonomialFn rate_monomials(const Point& y) const;
};

// rate_eval: direct table lookup; `pattern` lists one 0/1 entry per window
// site in table order. Absent displacement gives 0. Wrong arity throws.
double rate_eval(const Model& m, const Point& y, const std::vector<int>& pattern);

struct DensityContext {
  double rho, chi, sqrt_chi, kappa;
  explicit DensityContext(double rho_);
};

// Exact counterpart on Q(sqrt(chi)), used by the rational verification paths.
struct DensityContextExact {
  Rational rho, chi;
  QSqrtChi sqrt_chi, kappa, one;
  explicit DensityContextExact(const Rational& rho_);
};

// ---- Validation ---------------------------------------------------------

struct LocalityReport {
  bool pass = true;
  std::vector<std::string> violations;
};
LocalityReport validate_locality(const Model& m);

struct DivergenceWitness {
  bool pass = false;
  // On success: per-axis local functions R_i with
  // sum_y r(y,eta)(eta_y - eta_0) = sum_i (R_i - R_i o tau_{e_i}).
  std::vector<MonomialFn> R;
  // On failure: first translation class with nonzero reduced coefficient.
  SiteSet counterexample_class;
  Rational counterexample_sum;
};
DivergenceWitness validate_divergence(const Model& m);

struct CoercivityReport {
  bool pass = false;
  std::vector<Point> generating_set;  // Y = {y : min_eta r(y,eta)+r(-y,tau_y eta) > 0}
  // Smallest uniform symmetrized rate over Y, and per-axis paths through Y
  // realizing the unit vectors (used by the Dirichlet comparison constants).
  Rational min_symmetrized_rate;
  std::vector<std::vector<Point>> unit_paths;
};
CoercivityReport validate_coercivity(const Model& m);

bool validate_all(const Model& m);

// ---- Torus configurations and the exact invariance oracle ---------------

class Configuration {
 public:
  Configuration(int d, int side);

  int d() const { return d_; }
  int side() const { return side_; }
  long long volume() const { return volume_; }
  int count() const { return count_; }

  long long index(const Point& p) const;  // wraps coordinates mod side
  Point wrap(const Point& p) const;
  bool occupied(const Point& p) const { return get(index(p)); }
  bool get(long long idx) const {
    return (bits_[std::size_t(idx >> 6)] >> (idx & 63)) & 1;
  }
  void set(const Point& p, bool v);
  void set_index(long long idx, bool v);
  void exchange(const Point& a, const Point& b);

  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  int d_, side_;
  long long volume_;
  int count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// |E_{pi_rho}[(Lf)]| on the torus of the given side, computed exactly by
// local-support expansion (only exchanges touching supp f contribute). For
// rational rho the result is exact; returns a double magnitude.
double invariance_residual_torus(const Model& m, int side, const Rational& rho,
                                 const MonomialFn& f);
// Same residual by brute-force enumeration of all 2^(side) configurations
// (d = 1 only); the oracle the fast path is checked against.
double invariance_residual_bruteforce(const Model& m, int side, const Rational& rho,
                                      const MonomialFn& f);

// Exact E_{pi_rho}[f g] on the torus, in monomials; used for adjointness and
// Parseval spot checks.
Rational torus_expectation(int side, const Rational& rho, const MonomialFn& f);

// L f and L* f as monomial functions on the torus (exact; f local).
MonomialFn apply_generator_torus(const Model& m, int side, const MonomialFn& f,
                                 bool adjoint);

// Time reversal: r*(y, eta) = r(-y, tau_{-y} eta); the pi_rho-adjoint
// generator is the generator of the adjoint model.
Model adjoint_model(const Model& m);

// ---- Builtin models ------------------------------------------------------

Model make_ssep(int d = 1);
Model make_asep(const Rational& p_right = Rational(2), const Rational& p_left = Rational(1));
Model make_tasep();
Model make_simplerates();
// r(1,eta)=3-eta_{-1}-2*eta_2: violates the divergence condition.
Model make_perturbed();
// SSEP plus an extra jump of size y at rate c when the strict interior of
// [0,y] holds no particles (holes=false: no holes).
Model make_oneblock(int y, const Rational& c, bool holes = true);
// Axis-wise product of one dimensional models.
Model make_product(const std::vector<Model>& axis_models);
// 2d exclusion with jump law p, where displacements in `modified` get the
// rate p_y*(3 - eta_{-y} - eta_{2y}).
Model make_modified2d(const std::map<Point, Rational>& jump_law,
                      const std::vector<Point>& modified);

// name in {ssep, asep, tasep, simplerates, perturbed, oneblock, product,
// modified2d}; args as "key=value" pairs, see model_io.cpp for the grammar.
Model builtin_model(const std::string& name, const std::map<std::string, std::string>& args = {});
std::vector<std::string> builtin_model_names();

}  // namespace latgas
