#include "latgas/dual.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace latgas {

void DualFunction::add(const SiteSet& k, double v) {
  if (v == 0.0) return;
  auto it = coeffs.find(k);
  if (it == coeffs.end()) {
    coeffs[k] = v;
  } else {
    it->second += v;
    if (it->second == 0.0) coeffs.erase(it);
  }
}

double DualFunction::coeff(const SiteSet& k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? 0.0 : it->second;
}

int DualFunction::min_degree() const {
  int m = INT32_MAX;
  for (const auto& [k, v] : coeffs) m = std::min(m, k.size());
  return coeffs.empty() ? 0 : m;
}

int DualFunction::max_degree() const {
  int m = 0;
  for (const auto& [k, v] : coeffs) m = std::max(m, k.size());
  return m;
}

DualFunction DualFunction::degree_part(int n) const {
  DualFunction out(ctx);
  for (const auto& [k, v] : coeffs)
    if (k.size() == n) out.coeffs[k] = v;
  return out;
}

DualFunction DualFunction::degrees_at_least(int n) const {
  DualFunction out(ctx);
  for (const auto& [k, v] : coeffs)
    if (k.size() >= n) out.coeffs[k] = v;
  return out;
}

double DualFunction::mean_at(double rho_prime) const {
  double eps = (rho_prime - ctx.rho) / ctx.sqrt_chi;
  double total = 0;
  for (const auto& [k, v] : coeffs) total += v * std::pow(eps, k.size());
  return total;
}

DualFunction dual_add(const DualFunction& f, const DualFunction& g, double scale_g) {
  DualFunction out = f;
  for (const auto& [k, v] : g.coeffs) out.add(k, scale_g * v);
  return out;
}

DualFunction dual_scale(double s, const DualFunction& f) {
  DualFunction out(f.ctx);
  if (s == 0.0) return out;
  for (const auto& [k, v] : f.coeffs) out.coeffs[k] = s * v;
  return out;
}

double dual_inner(const DualFunction& f, const DualFunction& g) {
  const auto& small = f.coeffs.size() <= g.coeffs.size() ? f : g;
  const auto& big = f.coeffs.size() <= g.coeffs.size() ? g : f;
  double total = 0;
  for (const auto& [k, v] : small.coeffs) {
    auto it = big.coeffs.find(k);
    if (it != big.coeffs.end()) total += v * it->second;
  }
  return total;
}

namespace {

// heta_Theta * heta_single{x}: if x not in Theta append, else heta_x^2 = 1 + kappa heta_x.
void mul_single(std::map<SiteSet, double>& acc, const Point& x, double kappa) {
  std::map<SiteSet, double> out;
  for (const auto& [k, v] : acc) {
    if (!k.contains(x)) {
      out[k.with(x)] += v;
    } else {
      out[k.without(x)] += v;
      out[k] += kappa * v;
    }
  }
  acc = std::move(out);
}

}  // namespace

DualFunction dual_mul(const DualFunction& f, const DualFunction& g) {
  DualFunction out(f.ctx);
  for (const auto& [a, va] : f.coeffs)
    for (const auto& [b, vb] : g.coeffs) {
      std::map<SiteSet, double> acc;
      acc[a] = va * vb;
      for (const auto& x : b.points()) mul_single(acc, x, f.ctx.kappa);
      for (const auto& [k, v] : acc) out.add(k, v);
    }
  return out;
}

DualFunction expand_dual(const MonomialFn& f, const DensityContext& ctx) {
  DualFunction out(ctx);
  for (const auto& [lambda, c] : f) {
    double cd = c.to_double();
    for (const auto& sub : all_subsets(lambda)) {
      double w = cd * std::pow(ctx.rho, lambda.size() - sub.size()) *
                 std::pow(ctx.sqrt_chi, sub.size());
      out.add(sub, w);
    }
  }
  return out;
}

std::map<SiteSet, QSqrtChi> expand_dual_exact(const MonomialFn& f,
                                              const DensityContextExact& ctx) {
  std::map<SiteSet, QSqrtChi> out;
  auto add = [&](const SiteSet& k, const QSqrtChi& v) {
    auto it = out.find(k);
    if (it == out.end()) {
      if (!v.is_zero()) out.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [lambda, c] : f) {
    for (const auto& sub : all_subsets(lambda)) {
      int drop = lambda.size() - sub.size();
      Rational rho_pow(1);
      for (int i = 0; i < drop; ++i) rho_pow *= ctx.rho;
      // chi^{|sub|/2} = chi^{floor} * sqrt(chi)^{parity}
      Rational chi_pow(1);
      for (int i = 0; i < sub.size() / 2; ++i) chi_pow *= ctx.chi;
      QSqrtChi w = (sub.size() % 2 == 0)
                       ? QSqrtChi::constant(chi_pow, ctx.chi)
                       : QSqrtChi(Rational(0), chi_pow, ctx.chi);
      add(sub, QSqrtChi::constant(c * rho_pow, ctx.chi) * w);
    }
  }
  return out;
}

std::map<SiteSet, double> dual_to_monomials(const DualFunction& f) {
  // heta_Lambda = sum_{S subeq Lambda} chi^{-|Lambda|/2} (-rho)^{|Lambda \ S|} eta_S
  std::map<SiteSet, double> out;
  for (const auto& [lambda, c] : f.coeffs) {
    double base = c * std::pow(f.ctx.sqrt_chi, -lambda.size());
    for (const auto& sub : all_subsets(lambda)) {
      double w = base * std::pow(-f.ctx.rho, lambda.size() - sub.size());
      out[sub] += w;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0.0) ? out.erase(it) : std::next(it);
  return out;
}

double dual_eval(const DualFunction& f, const std::vector<Point>& occupied_sorted) {
  double total = 0;
  for (const auto& [k, c] : f.coeffs) {
    double prod = c;
    for (const auto& p : k.points()) {
      bool occ = std::binary_search(occupied_sorted.begin(), occupied_sorted.end(), p);
      prod *= (occ ? 1.0 - f.ctx.rho : -f.ctx.rho) / f.ctx.sqrt_chi;
    }
    total += prod;
  }
  return total;
}

// ---- dimension reduction ---------------------------------------------------

void ReducedFunction::add(const SiteSet& rep, double v) {
  if (v == 0.0) return;
  auto it = coeffs.find(rep);
  if (it == coeffs.end()) {
    coeffs[rep] = v;
  } else {
    it->second += v;
    if (it->second == 0.0) coeffs.erase(it);
  }
}

double ReducedFunction::at(const SiteSet& rep) const {
  auto it = coeffs.find(rep);
  return it == coeffs.end() ? 0.0 : it->second;
}

ReducedFunction dimension_reduce(const DualFunction& f, int degree) {
  ReducedFunction out;
  out.n = degree;
  out.d = 3;
  for (const auto& [k, v] : f.coeffs)
    if (k.size() == degree) out.add(k.canonical(), v);
  return out;
}

double reduced_inner(const ReducedFunction& f, const ReducedFunction& g) {
  // class keys of different degrees never coincide, so degree orthogonality
  // is structural
  const auto& small = f.coeffs.size() <= g.coeffs.size() ? f : g;
  const auto& big = f.coeffs.size() <= g.coeffs.size() ? g : f;
  double total = 0;
  for (const auto& [k, v] : small.coeffs) {
    auto it = big.coeffs.find(k);
    if (it != big.coeffs.end()) total += v * it->second;
  }
  return total;
}

double biform_lattice(const DualFunction& f, const DualFunction& g) {
  int lo = std::min(f.min_degree(), g.min_degree());
  int hi = std::max(f.max_degree(), g.max_degree());
  double total = 0;
  for (int n = std::max(1, lo); n <= hi; ++n)
    total += reduced_inner(dimension_reduce(f, n), dimension_reduce(g, n));
  return total;
}

std::vector<int> reduced_gaps(const SiteSet& rep) { return gaps_from_set(rep); }

SiteSet class_from_gaps(const std::vector<int>& gaps) { return set_from_gaps(gaps); }

// ---- flux ---------------------------------------------------------------------

namespace {

// h_y = r(y,.) * eta_0 (1 - eta_y)
MonomialFn jump_current(const Model& m, const Point& y) {
  MonomialFn occ;
  occ[SiteSet{Point()}] = Rational(1);
  occ[SiteSet{Point(), y}] = Rational(-1);
  return mono_mul(m.rate_monomials(y), occ);
}

}  // namespace

std::vector<MonomialFn> microscopic_flux_monomials(const Model& m, bool alternate_order) {
  // L eta_0 = sum_y (T_{-y} h_y - h_y); telescope each translation along a
  // staircase 0 -> -y, axis 1 first (or last for the alternate order).
  // Step +e at z contributes -T_{z+e} h, step -e contributes +T_z h, so that
  // sum_i d_i W_i with d_i f = f o tau_{e_i} - f (= T_{-e_i} f - f) matches.
  std::vector<MonomialFn> W(m.d);
  for (const auto& y : m.displacements()) {
    MonomialFn h = jump_current(m, y);
    Point v = -y;
    Point z;  // walk from 0 to v
    std::vector<int> axes;
    for (int ax = 0; ax < m.d; ++ax) axes.push_back(ax);
    if (alternate_order) std::reverse(axes.begin(), axes.end());
    for (int ax : axes) {
      while (z[ax] != v[ax]) {
        if (z[ax] < v[ax]) {
          Point znext = z;
          znext[ax] += 1;
          W[ax] = mono_add(W[ax], mono_scale(Rational(-1), mono_translate(h, znext)));
          z = znext;
        } else {
          W[ax] = mono_add(W[ax], mono_translate(h, z));
          Point znext = z;
          znext[ax] -= 1;
          z = znext;
        }
      }
    }
  }
  return W;
}

std::vector<Polynomial> macroscopic_flux(const Model& m) {
  std::vector<Polynomial> j(m.d);
  for (const auto& y : m.displacements()) {
    Polynomial e = mono_expectation(jump_current(m, y));
    for (int ax = 0; ax < m.d; ++ax)
      if (y[ax] != 0) j[ax] = j[ax] + Rational(y[ax]) * e;
  }
  return j;
}

FluxBundle microscopic_flux(const Model& m, const DensityContext& ctx, bool alternate_order) {
  if (!validate_locality(m).pass) throw std::invalid_argument("model fails locality");
  DivergenceWitness dw = validate_divergence(m);
  if (!dw.pass)
    throw std::invalid_argument("model fails the divergence condition; no flux bundle");

  FluxBundle fb(ctx);
  fb.W_mono = microscopic_flux_monomials(m, alternate_order);
  fb.Wstar_mono = microscopic_flux_monomials(adjoint_model(m), alternate_order);
  fb.j = macroscopic_flux(m);
  for (int ax = 0; ax < m.d; ++ax) {
    fb.W.push_back(expand_dual(fb.W_mono[ax], ctx));
    fb.Wstar.push_back(expand_dual(fb.Wstar_mono[ax], ctx));
    DualFunction w = dual_scale(0.5, dual_add(fb.W[ax], fb.Wstar[ax]));
    fb.w.push_back(w.degrees_at_least(2));  // P1 projection and centering
    fb.v.push_back(dual_scale(0.5, dual_add(fb.W[ax], fb.Wstar[ax], -1.0)));
  }
  for (int ax = 0; ax < m.d; ++ax) {
    Polynomial c;
    for (const auto& y : m.displacements())
      if (y[ax] != 0)
        c = c + Rational((long long)y[ax] * y[ax]) * mono_expectation(m.rate_monomials(y));
    fb.C.push_back(c.eval(ctx.rho));
  }
  return fb;
}

double flux_derivative(const FluxBundle& bundle, int k, int axis) {
  if (k < 2 || k > 3) throw std::invalid_argument("flux_derivative: k in {2,3}");
  double sum = 0;
  for (const auto& [lam, c] : bundle.w[axis].coeffs)
    if (lam.size() == k) sum += c;
  double kfact = (k == 2) ? 2.0 : 6.0;
  return kfact * std::pow(bundle.ctx.chi, -k / 2.0) * sum;
}

// ---- regimes ---------------------------------------------------------------------

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::d1_generic: return "d1_generic";
    case Regime::d1_inflection: return "d1_inflection";
    case Regime::d1_double_inflection: return "d1_double_inflection";
    case Regime::d2_generic: return "d2_generic";
    case Regime::d2_diffusive: return "d2_diffusive";
    case Regime::d3_diffusive: return "d3_diffusive";
  }
  return "?";
}

namespace {

RegimeReport classify_impl(const Model& m, double rho, const Rational* rho_exact) {
  RegimeReport rep;
  auto j = macroscopic_flux(m);
  const double tol = 1e-10;
  for (int ax = 0; ax < m.d; ++ax) {
    AxisReport ar;
    Polynomial j1 = j[ax].derivative();
    Polynomial j2 = j1.derivative();
    Polynomial j3 = j2.derivative();
    ar.j1 = j1.eval(rho);
    ar.j2 = j2.eval(rho);
    ar.j3 = j3.eval(rho);
    if (rho_exact) {
      ar.j2_zero = j2.eval(*rho_exact) == Rational(0);
      ar.j3_zero = j3.eval(*rho_exact) == Rational(0);
    } else {
      ar.j2_zero = std::abs(ar.j2) < tol;
      ar.j3_zero = std::abs(ar.j3) < tol;
    }
    rep.axes.push_back(ar);
  }
  rep.drift_axis = 0;
  for (int ax = 0; ax < m.d; ++ax)
    if (!rep.axes[ax].j2_zero) {
      rep.drift_axis = ax;
      break;
    }
  const AxisReport& a = rep.axes[rep.drift_axis];
  if (m.d == 1) {
    if (!a.j2_zero) {
      rep.tag = Regime::d1_generic;
      rep.prediction = "lambda^(-1/3)";
      rep.bound_lower = "C*lambda^(-1/4)";
      rep.bound_upper = "C*lambda^(-1/2)";
    } else if (!a.j3_zero) {
      rep.tag = Regime::d1_inflection;
      rep.prediction = "(log(1/lambda))^(1/2)";
      rep.bound_lower = "C*loglog(1/lambda)";
      rep.bound_upper = "C*log(1/lambda)";
    } else {
      rep.tag = Regime::d1_double_inflection;
      rep.prediction = "diffusive (bounded)";
      rep.bound_lower = "C_ii - v-term";
      rep.bound_upper = "C (bounded)";
    }
  } else if (m.d == 2) {
    bool any_drift = false;
    for (const auto& ar : rep.axes)
      if (!ar.j2_zero) any_drift = true;
    if (any_drift) {
      rep.tag = Regime::d2_generic;
      rep.prediction = "(log(1/lambda))^(2/3)";
      rep.bound_lower = "C*(log(1/lambda))^(1/2)";
      rep.bound_upper = "C*log(1/lambda)";
    } else {
      rep.tag = Regime::d2_diffusive;
      rep.prediction = "diffusive (bounded)";
      rep.bound_lower = "C_ii - v-term";
      rep.bound_upper = "C (bounded)";
    }
  } else {
    rep.tag = Regime::d3_diffusive;
    rep.prediction = "diffusive (bounded)";
    rep.bound_lower = "C_ii - v-term";
    rep.bound_upper = "C (bounded)";
  }
  return rep;
}

}  // namespace

RegimeReport classify_regime(const Model& m, const Rational& rho) {
  return classify_impl(m, rho.to_double(), &rho);
}

RegimeReport classify_regime(const Model& m, double rho) {
  // small-denominator rationals get the exact zero test
  for (long long q = 1; q <= 64; ++q) {
    double scaled = rho * double(q);
    if (std::abs(scaled - std::llround(scaled)) < 1e-12) {
      Rational r(std::llround(scaled), q);
      return classify_impl(m, rho, &r);
    }
  }
  return classify_impl(m, rho, nullptr);
}

}  // namespace latgas
