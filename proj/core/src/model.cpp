#include "latgas/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latgas {

// ---- monomial algebra ----------------------------------------------------

MonomialFn mono_scale(const Rational& s, const MonomialFn& f) {
  MonomialFn out;
  if (s.is_zero()) return out;
  for (const auto& [k, v] : f) out[k] = s * v;
  return out;
}

MonomialFn mono_add(const MonomialFn& f, const MonomialFn& g) {
  MonomialFn out = f;
  for (const auto& [k, v] : g) {
    auto it = out.find(k);
    if (it == out.end()) {
      out[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

MonomialFn mono_mul(const MonomialFn& f, const MonomialFn& g) {
  MonomialFn out;
  for (const auto& [a, va] : f)
    for (const auto& [b, vb] : g) {
      SiteSet u = a.unite(b);  // eta_x^2 = eta_x
      auto it = out.find(u);
      if (it == out.end()) {
        out[u] = va * vb;
        if (out[u].is_zero()) out.erase(u);
      } else {
        it->second += va * vb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

MonomialFn mono_translate(const MonomialFn& f, const Point& y) {
  MonomialFn out;
  for (const auto& [k, v] : f) out[k.translated(y)] = v;
  return out;
}

Polynomial mono_expectation(const MonomialFn& f) {
  int maxdeg = 0;
  for (const auto& [k, v] : f) maxdeg = std::max(maxdeg, k.size());
  std::vector<Rational> c(maxdeg + 1, Rational(0));
  for (const auto& [k, v] : f) c[k.size()] += v;
  return Polynomial(std::move(c));
}

double mono_eval(const MonomialFn& f, const std::vector<Point>& occupied_sorted) {
  double v = 0;
  for (const auto& [k, c] : f) {
    bool all = true;
    for (const auto& p : k.points())
      if (!std::binary_search(occupied_sorted.begin(), occupied_sorted.end(), p)) {
        all = false;
        break;
      }
    if (all) v += c.to_double();
  }
  return v;
}

// ---- rate tables ----------------------------------------------------------

Rational RateTable::max_value() const {
  Rational m = values.empty() ? Rational(0) : values[0];
  for (const auto& v : values)
    if (m < v) m = v;
  return m;
}

Rational RateTable::min_value() const {
  Rational m = values.empty() ? Rational(0) : values[0];
  for (const auto& v : values)
    if (v < m) m = v;
  return m;
}

MonomialFn RateTable::to_monomials() const {
  // Moebius inversion: coef(S) = sum_{P subseteq S} (-1)^{|S|-|P|} value(P).
  int w = static_cast<int>(window.size());
  std::vector<Rational> coef = values;
  for (int i = 0; i < w; ++i)
    for (unsigned mask = 0; mask < (1u << w); ++mask)
      if (mask & (1u << i)) coef[mask] -= coef[mask ^ (1u << i)];
  MonomialFn out;
  for (unsigned mask = 0; mask < (1u << w); ++mask) {
    if (coef[mask].is_zero()) continue;
    std::vector<Point> pts;
    for (int i = 0; i < w; ++i)
      if (mask & (1u << i)) pts.push_back(window[i]);
    out[SiteSet(std::move(pts))] = coef[mask];
  }
  return out;
}

RateTable constant_rate(const Rational& r) {
  RateTable t;
  t.values = {r};
  return t;
}

RateTable table_from_monomials(const std::vector<Point>& window, const MonomialFn& f) {
  int w = static_cast<int>(window.size());
  RateTable t;
  t.window = window;
  t.values.assign(std::size_t(1) << w, Rational(0));
  for (unsigned mask = 0; mask < (1u << w); ++mask) {
    std::vector<Point> occ;
    for (int i = 0; i < w; ++i)
      if (mask & (1u << i)) occ.push_back(window[i]);
    std::sort(occ.begin(), occ.end());
    Rational v(0);
    for (const auto& [k, c] : f) {
      bool all = true;
      for (const auto& p : k.points())
        if (!std::binary_search(occ.begin(), occ.end(), p)) {
          all = false;
          break;
        }
      if (all) v += c;
    }
    t.values[mask] = v;
  }
  return t;
}

const RateTable* Model::table(const Point& y) const {
  auto it = rates.find(y);
  return it == rates.end() ? nullptr : &it->second;
}

std::vector<Point> Model::displacements() const {
  std::vector<Point> ys;
  for (const auto& [y, t] : rates) {
    bool nonzero = false;
    for (const auto& v : t.values)
      if (!v.is_zero()) nonzero = true;
    if (nonzero) ys.push_back(y);
  }
  return ys;
}

Rational Model::rate(const Point& y, const std::vector<Point>& occupied_sorted) const {
  const RateTable* t = table(y);
  if (!t) return Rational(0);
  unsigned pattern = 0;
  for (std::size_t i = 0; i < t->window.size(); ++i)
    if (std::binary_search(occupied_sorted.begin(), occupied_sorted.end(), t->window[i]))
      pattern |= (1u << i);
  return t->value(pattern);
}

MonomialFn Model::rate_monomials(const Point& y) const {
  const RateTable* t = table(y);
  if (!t) return {};
  return t->to_monomials();
}

double rate_eval(const Model& m, const Point& y, const std::vector<int>& pattern) {
  const RateTable* t = m.table(y);
  if (!t) return 0.0;
  if (pattern.size() != t->window.size())
    throw std::invalid_argument("rate_eval: pattern arity does not match window");
  unsigned bits = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i]) bits |= (1u << i);
  return t->value(bits).to_double();
}

DensityContext::DensityContext(double rho_) : rho(rho_) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("density must be in (0,1)");
  chi = rho * (1.0 - rho);
  sqrt_chi = std::sqrt(chi);
  kappa = (1.0 - 2.0 * rho) / sqrt_chi;
}

DensityContextExact::DensityContextExact(const Rational& rho_) : rho(rho_) {
  if (!(Rational(0) < rho && rho < Rational(1)))
    throw std::invalid_argument("density must be in (0,1)");
  chi = rho * (Rational(1) - rho);
  sqrt_chi = QSqrtChi::sqrt_chi(chi);
  // kappa = (1-2rho)/sqrt(chi) = (1-2rho)*sqrt(chi)/chi
  kappa = QSqrtChi(Rational(0), (Rational(1) - Rational(2) * rho) / chi, chi);
  one = QSqrtChi::constant(Rational(1), chi);
}

// ---- validators -----------------------------------------------------------

LocalityReport validate_locality(const Model& m) {
  LocalityReport rep;
  auto fail = [&](const std::string& s) {
    rep.pass = false;
    rep.violations.push_back(s);
  };
  for (const auto& [y, t] : m.rates) {
    bool nonzero = false;
    for (const auto& v : t.values)
      if (!v.is_zero()) nonzero = true;
    if (!nonzero) continue;
    if (y.is_zero()) fail("displacement 0 stored");
    if (y.linf() >= m.radius)
      fail("rate stored at displacement " + to_string(y, m.d) + " with |y| >= K");
    if (t.values.size() != (std::size_t(1) << t.window.size()))
      fail("table size mismatch at y=" + to_string(y, m.d));
    for (const auto& z : t.window) {
      if (z.linf() > m.radius)
        fail("window site " + to_string(z, m.d) + " outside [-K,K]^d at y=" + to_string(y, m.d));
      if (z.is_zero() || z == y)
        fail("window depends on eta_0 or eta_y at y=" + to_string(y, m.d));
      for (int ax = m.d; ax < 3; ++ax)
        if (z[ax] != 0) fail("window site uses axis beyond d");
    }
    for (const auto& v : t.values)
      if (v < Rational(0)) fail("negative rate at y=" + to_string(y, m.d));
  }
  return rep;
}

namespace {

// sum_y r(y,eta)(eta_y - eta_0) in monomials.
MonomialFn drift_field(const Model& m) {
  MonomialFn g;
  for (const auto& y : m.displacements()) {
    MonomialFn r = m.rate_monomials(y);
    MonomialFn lin;
    lin[SiteSet{Point(y)}] = Rational(1);
    lin[SiteSet{Point(0, 0, 0)}] = Rational(-1);
    g = mono_add(g, mono_mul(r, lin));
  }
  return g;
}

// Telescopes c*(eta_{Lambda+v} - eta_Lambda) into single-axis gradients,
// accumulating into R[i] so that the difference equals
// sum_i (R_i - R_i o tau_{e_i}). Axis 1 first, then axis 2, ...
void telescope_difference(const Rational& c, const SiteSet& lambda, const Point& v,
                          std::vector<MonomialFn>& R, int d) {
  // eta_{Lambda+v} - eta_Lambda = sum of steps along the staircase from v to 0.
  // For a single +e_i step from z to z+e_i:
  //   eta_{Lambda+z+e_i} - eta_{Lambda+z} = -(h - h o tau_{e_i}), h = eta_{Lambda+z+e_i}.
  // grad_e eta_Lambda = eta_Lambda - eta_{Lambda-e}, since eta_Lambda o tau_e = eta_{Lambda-e}.
  Point z = v;
  for (int ax = 0; ax < d; ++ax) {
    while (z[ax] != 0) {
      int step = z[ax] > 0 ? -1 : +1;  // move toward 0
      Point znext = z;
      znext[ax] += step;
      if (step == -1) {
        // eta_{L+z} - eta_{L+z-e} = grad_e eta_{L+z}
        R[ax] = mono_add(R[ax], mono_scale(c, MonomialFn{{lambda.translated(z), Rational(1)}}));
      } else {
        // eta_{L+z} - eta_{L+z+e} = -grad_e eta_{L+znext}
        R[ax] = mono_add(R[ax], mono_scale(-c, MonomialFn{{lambda.translated(znext), Rational(1)}}));
      }
      z = znext;
    }
  }
}

}  // namespace

DivergenceWitness validate_divergence(const Model& m) {
  DivergenceWitness w;
  MonomialFn g = drift_field(m);

  // Reduce modulo translation.
  std::map<SiteSet, Rational> reduced;
  for (const auto& [k, v] : g) {
    auto can = k.canonical();
    reduced[can] += v;
  }
  for (const auto& [k, v] : reduced) {
    if (!v.is_zero()) {
      w.pass = false;
      w.counterexample_class = k;
      w.counterexample_sum = v;
      return w;
    }
  }
  w.pass = true;

  // Build the witness: per translation class, rewrite sum_j c_j eta_{L+v_j}
  // (sum of c_j = 0) as telescoped differences against the class anchor.
  w.R.assign(m.d, MonomialFn{});
  std::map<SiteSet, std::vector<std::pair<Point, Rational>>> classes;
  for (const auto& [k, v] : g) classes[k.canonical()].push_back({k.anchor(), v});
  for (auto& [can, members] : classes) {
    for (const auto& [anchor, c] : members) {
      if (anchor.is_zero()) continue;  // difference against the canonical rep
      telescope_difference(c, can, anchor, w.R, m.d);
    }
  }
  return w;
}

namespace {

// Hermite-style check that the integer vectors generate Z^d.
bool generates_zd(std::vector<Point> vs, int d) {
  // Gaussian elimination over Z with gcd pivoting; lattice = Z^d iff the
  // triangular form has all unit pivots.
  std::vector<std::array<long long, 3>> rows;
  for (const auto& v : vs) rows.push_back({v[0], v[1], v[2]});
  int rank = 0;
  for (int col = 0; col < d; ++col) {
    // Euclid on column entries of the remaining rows.
    while (true) {
      int nz = -1, cnt = 0;
      for (int i = rank; i < (int)rows.size(); ++i)
        if (rows[i][col] != 0) {
          ++cnt;
          if (nz < 0 || std::abs(rows[i][col]) < std::abs(rows[nz][col])) nz = i;
        }
      if (cnt == 0) return false;  // column not reachable
      if (cnt == 1) {
        std::swap(rows[rank], rows[nz]);
        break;
      }
      for (int i = rank; i < (int)rows.size(); ++i) {
        if (i == nz || rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[nz][col];
        for (int j = 0; j < 3; ++j) rows[i][j] -= q * rows[nz][j];
      }
    }
    if (std::abs(rows[rank][col]) != 1) return false;
    ++rank;
  }
  return rank == d;
}

}  // namespace

CoercivityReport validate_coercivity(const Model& m) {
  CoercivityReport rep;
  Model adj = adjoint_model(m);
  std::set<Point> cand;
  for (const auto& y : m.displacements()) {
    cand.insert(y);
    cand.insert(-y);
  }
  rep.min_symmetrized_rate = Rational(0);
  for (const auto& y : cand) {
    // min over patterns of r(y,eta) + r(-y, tau_y eta). The second term is
    // the adjoint-model rate at displacement y.
    MonomialFn sym = mono_add(m.rate_monomials(y), adj.rate_monomials(y));
    std::set<Point> sites;
    for (const auto& [k, v] : sym)
      for (const auto& p : k.points()) sites.insert(p);
    std::vector<Point> env(sites.begin(), sites.end());
    Rational minval;
    bool firstpat = true;
    for (unsigned mask = 0; mask < (1u << env.size()); ++mask) {
      std::vector<Point> occ;
      for (std::size_t i = 0; i < env.size(); ++i)
        if (mask & (1u << i)) occ.push_back(env[i]);
      std::sort(occ.begin(), occ.end());
      Rational v(0);
      for (const auto& [k, c] : sym) {
        bool all = true;
        for (const auto& p : k.points())
          if (!std::binary_search(occ.begin(), occ.end(), p)) {
            all = false;
            break;
          }
        if (all) v += c;
      }
      if (firstpat || v < minval) minval = v;
      firstpat = false;
    }
    if (Rational(0) < minval) {
      rep.generating_set.push_back(y);
      if (rep.min_symmetrized_rate.is_zero() || minval < rep.min_symmetrized_rate)
        rep.min_symmetrized_rate = minval;
    }
  }
  if (rep.generating_set.empty()) return rep;
  rep.pass = generates_zd(rep.generating_set, m.d);
  if (!rep.pass) return rep;

  // Shortest path from 0 to each unit vector through moves +-Y (BFS on a box).
  int R = std::max(2, m.radius) * m.d * 2 + 2;
  auto inbox = [&](const Point& p) {
    for (int ax = 0; ax < m.d; ++ax)
      if (std::abs(p[ax]) > R) return false;
    return true;
  };
  std::vector<Point> moves;
  for (const auto& y : rep.generating_set) {
    moves.push_back(y);
    moves.push_back(-y);
  }
  for (int ax = 0; ax < m.d; ++ax) {
    std::map<Point, std::pair<Point, Point>> come_from;  // point -> (prev, move)
    std::deque<Point> queue{Point()};
    come_from[Point()] = {Point(), Point()};
    Point target = unit_vector(ax);
    while (!queue.empty() && !come_from.count(target)) {
      Point cur = queue.front();
      queue.pop_front();
      for (const auto& mv : moves) {
        Point nxt = cur + mv;
        if (!inbox(nxt) || come_from.count(nxt)) continue;
        come_from[nxt] = {cur, mv};
        queue.push_back(nxt);
      }
    }
    if (!come_from.count(target)) {
      rep.pass = false;
      return rep;
    }
    std::vector<Point> path;
    for (Point p = target; !(p == Point());) {
      auto [prev, mv] = come_from[p];
      path.push_back(mv);
      p = prev;
    }
    std::reverse(path.begin(), path.end());
    rep.unit_paths.push_back(path);
  }
  return rep;
}

bool validate_all(const Model& m) {
  return validate_locality(m).pass && validate_divergence(m).pass &&
         validate_coercivity(m).pass;
}

// ---- configurations -------------------------------------------------------

Configuration::Configuration(int d, int side) : d_(d), side_(side) {
  volume_ = 1;
  for (int i = 0; i < d; ++i) volume_ *= side;
  bits_.assign(std::size_t((volume_ + 63) / 64), 0);
}

Point Configuration::wrap(const Point& p) const {
  Point q;
  for (int i = 0; i < d_; ++i) {
    int v = p[i] % side_;
    if (v < 0) v += side_;
    q[i] = v;
  }
  return q;
}

long long Configuration::index(const Point& p) const {
  Point q = wrap(p);
  long long idx = 0;
  for (int i = d_ - 1; i >= 0; --i) idx = idx * side_ + q[i];
  return idx;
}

void Configuration::set(const Point& p, bool v) { set_index(index(p), v); }

void Configuration::set_index(long long idx, bool v) {
  bool cur = get(idx);
  if (cur == v) return;
  bits_[std::size_t(idx >> 6)] ^= (std::uint64_t(1) << (idx & 63));
  count_ += v ? 1 : -1;
}

void Configuration::exchange(const Point& a, const Point& b) {
  bool va = occupied(a), vb = occupied(b);
  if (va != vb) {
    set(a, vb);
    set(b, va);
  }
}

// ---- exact torus machinery -------------------------------------------------

namespace {

Point wrap_point(const Point& p, int d, int side) {
  Point q;
  for (int i = 0; i < d; ++i) {
    int v = p[i] % side;
    if (v < 0) v += side;
    q[i] = v;
  }
  return q;
}

SiteSet wrap_set(const SiteSet& s, int d, int side) {
  std::vector<Point> pts;
  for (const auto& p : s.points()) {
    Point q = wrap_point(p, d, side);
    if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
  }
  return SiteSet(std::move(pts));
}

MonomialFn wrap_mono(const MonomialFn& f, int d, int side) {
  MonomialFn out;
  for (const auto& [k, v] : f) {
    SiteSet w = wrap_set(k, d, side);
    out[w] += v;
    if (out[w].is_zero()) out.erase(w);
  }
  return out;
}

SiteSet swap_sites(const SiteSet& s, const Point& a, const Point& b) {
  bool ina = s.contains(a), inb = s.contains(b);
  if (ina == inb) return s;
  if (ina) return s.without(a).with(b);
  return s.without(b).with(a);
}

}  // namespace

MonomialFn apply_generator_torus(const Model& m, int side, const MonomialFn& f,
                                 bool adjoint) {
  const Model& use = m;
  MonomialFn fw = wrap_mono(f, m.d, side);
  std::set<Point> support;
  for (const auto& [k, v] : fw)
    for (const auto& p : k.points()) support.insert(p);

  MonomialFn out;
  std::vector<Point> sites;
  {
    // all torus sites
    std::vector<int> idx(m.d, 0);
    while (true) {
      Point p;
      for (int i = 0; i < m.d; ++i) p[i] = idx[i];
      sites.push_back(p);
      int ax = 0;
      while (ax < m.d && ++idx[ax] == side) idx[ax++] = 0;
      if (ax == m.d) break;
    }
  }
  for (const auto& y : use.displacements()) {
    MonomialFn r0 = use.rate_monomials(y);
    for (const auto& x : sites) {
      Point xy = wrap_point(x + y, m.d, side);
      // exchanges not touching supp f leave f unchanged
      if (!support.count(x) && !support.count(xy)) continue;
      MonomialFn rterm = wrap_mono(mono_translate(r0, x), m.d, side);
      // occupancy factor: eta_x(1-eta_{x+y}) forward, eta_{x+y}(1-eta_x) adjoint
      MonomialFn occ;
      if (!adjoint) {
        occ[SiteSet{x}] = Rational(1);
        occ[SiteSet{x}.unite(SiteSet{xy})] = Rational(-1);
      } else {
        occ[SiteSet{xy}] = Rational(1);
        occ[SiteSet{x}.unite(SiteSet{xy})] = Rational(-1);
      }
      MonomialFn df;
      for (const auto& [k, v] : fw) {
        SiteSet sw = swap_sites(k, x, xy);
        if (sw == k) continue;
        df[sw] += v;
        if (df[sw].is_zero()) df.erase(sw);
        df[k] -= v;
        if (df[k].is_zero()) df.erase(k);
      }
      if (df.empty()) continue;
      out = mono_add(out, mono_mul(rterm, mono_mul(occ, df)));
    }
  }
  return wrap_mono(out, m.d, side);
}

Rational torus_expectation(int side, const Rational& rho, const MonomialFn& f) {
  (void)side;
  Rational total(0);
  for (const auto& [k, v] : f) {
    Rational p(1);
    for (int i = 0; i < k.size(); ++i) p = p * rho;
    total += v * p;
  }
  return total;
}

double invariance_residual_torus(const Model& m, int side, const Rational& rho,
                                 const MonomialFn& f) {
  if (side <= 2 * m.radius + 2)
    throw std::invalid_argument("invariance_residual_torus: side must exceed 2K+2");
  MonomialFn lf = apply_generator_torus(m, side, f, /*adjoint=*/false);
  Rational e = torus_expectation(side, rho, lf);
  return std::abs(e.to_double());
}

double invariance_residual_bruteforce(const Model& m, int side, const Rational& rho,
                                      const MonomialFn& f) {
  if (m.d != 1) throw std::invalid_argument("bruteforce oracle is d=1 only");
  if (side > 22) throw std::invalid_argument("bruteforce oracle: side too large");
  Rational total(0);
  MonomialFn fw = wrap_mono(f, 1, side);
  for (unsigned cfg = 0; cfg < (1u << side); ++cfg) {
    std::vector<Point> occ;
    for (int i = 0; i < side; ++i)
      if (cfg & (1u << i)) occ.push_back(Point(i));
    int n = (int)occ.size();
    Rational weight(1);
    for (int i = 0; i < n; ++i) weight *= rho;
    for (int i = 0; i < side - n; ++i) weight *= (Rational(1) - rho);

    auto occ_at = [&](int x) {
      int xm = ((x % side) + side) % side;
      return (cfg >> xm) & 1u;
    };
    auto eval_f = [&](unsigned c) {
      Rational v(0);
      for (const auto& [k, coef] : fw) {
        bool all = true;
        for (const auto& p : k.points())
          if (!((c >> p[0]) & 1u)) {
            all = false;
            break;
          }
        if (all) v += coef;
      }
      return v;
    };
    Rational lf(0);
    for (int x = 0; x < side; ++x) {
      for (const auto& y : m.displacements()) {
        int tx = ((x + y[0]) % side + side) % side;
        if (!occ_at(x) || occ_at(tx)) continue;
        // pattern of the window around x
        const RateTable* t = m.table(y);
        unsigned pat = 0;
        for (std::size_t i = 0; i < t->window.size(); ++i)
          if (occ_at(x + t->window[i][0])) pat |= (1u << i);
        Rational r = t->value(pat);
        unsigned swapped = cfg;
        swapped &= ~(1u << x);
        swapped |= (1u << tx);
        lf += r * (eval_f(swapped) - eval_f(cfg));
      }
    }
    total += weight * lf;
  }
  return std::abs(total.to_double());
}

Model adjoint_model(const Model& m) {
  // r*(u, eta) = r(-u, tau_{-u} eta): the adjoint jump u = -y reads the
  // original window of r(y,.) shifted by y.
  Model out;
  out.d = m.d;
  out.name = m.name + "*";
  int K = 1;
  for (const auto& [y, t] : m.rates) {
    RateTable rt;
    rt.values = t.values;
    for (const auto& z : t.window) {
      rt.window.push_back(z - y);
      K = std::max(K, (z - y).linf());
    }
    K = std::max(K, y.linf() + 1);
    out.rates[-y] = std::move(rt);
  }
  out.radius = K;
  return out;
}

// ---- builtins ---------------------------------------------------------------

namespace {
int radius_for(const Model& m) {
  int K = 1;
  for (const auto& [y, t] : m.rates) {
    K = std::max(K, y.linf() + 1);
    for (const auto& z : t.window) K = std::max(K, z.linf());
  }
  return K;
}
}  // namespace

Model make_ssep(int d) {
  Model m;
  m.d = d;
  m.name = "ssep";
  for (int ax = 0; ax < d; ++ax) {
    m.rates[unit_vector(ax)] = constant_rate(Rational(1));
    m.rates[-unit_vector(ax)] = constant_rate(Rational(1));
  }
  m.radius = radius_for(m);
  return m;
}

Model make_asep(const Rational& p_right, const Rational& p_left) {
  Model m;
  m.d = 1;
  m.name = "asep";
  m.rates[Point(1)] = constant_rate(p_right);
  m.rates[Point(-1)] = constant_rate(p_left);
  m.radius = radius_for(m);
  return m;
}

Model make_tasep() {
  Model m;
  m.d = 1;
  m.name = "tasep";
  m.rates[Point(1)] = constant_rate(Rational(1));
  m.radius = radius_for(m);
  return m;
}

Model make_simplerates() {
  Model m;
  m.d = 1;
  m.name = "simplerates";
  MonomialFn f;
  f[SiteSet{}] = Rational(3);
  f[SiteSet{Point(-1)}] = Rational(-1);
  f[SiteSet{Point(2)}] = Rational(-1);
  m.rates[Point(1)] = table_from_monomials({Point(-1), Point(2)}, f);
  m.rates[Point(-1)] = constant_rate(Rational(2));
  m.radius = radius_for(m);
  return m;
}

Model make_perturbed() {
  Model m;
  m.d = 1;
  m.name = "perturbed";
  MonomialFn f;
  f[SiteSet{}] = Rational(3);
  f[SiteSet{Point(-1)}] = Rational(-1);
  f[SiteSet{Point(2)}] = Rational(-2);
  m.rates[Point(1)] = table_from_monomials({Point(-1), Point(2)}, f);
  m.rates[Point(-1)] = constant_rate(Rational(2));
  m.radius = radius_for(m);
  return m;
}

Model make_oneblock(int y, const Rational& c, bool holes) {
  if (y == 0 || std::abs(y) == 1)
    throw std::invalid_argument("oneblock: |y| must be at least 2");
  Model m = make_ssep(1);
  m.name = holes ? "oneblock_holes" : "oneblock_particles";
  MonomialFn f;
  f[SiteSet{}] = Rational(0);
  // product over strict interior of [0,y]
  std::vector<Point> window;
  int lo = std::min(0, y), hi = std::max(0, y);
  for (int z = lo + 1; z < hi; ++z)
    if (z != 0) window.push_back(Point(z));
  MonomialFn prod;
  prod[SiteSet{}] = c;
  for (const auto& z : window) {
    MonomialFn factor;
    if (holes) {
      factor[SiteSet{}] = Rational(1);
      factor[SiteSet{z}] = Rational(-1);
    } else {
      factor[SiteSet{z}] = Rational(1);
    }
    prod = mono_mul(prod, factor);
  }
  m.rates[Point(y)] = table_from_monomials(window, prod);
  m.radius = radius_for(m);
  return m;
}

Model make_product(const std::vector<Model>& axis_models) {
  if (axis_models.size() < 2 || axis_models.size() > 3)
    throw std::invalid_argument("product model needs 2 or 3 axis models");
  Model m;
  m.d = (int)axis_models.size();
  m.name = "product";
  for (int ax = 0; ax < m.d; ++ax) {
    const Model& a = axis_models[ax];
    if (a.d != 1) throw std::invalid_argument("product components must be 1d");
    for (const auto& [y, t] : a.rates) {
      RateTable rt;
      rt.values = t.values;
      for (const auto& z : t.window) {
        Point p;
        p[ax] = z[0];
        rt.window.push_back(p);
      }
      Point yd;
      yd[ax] = y[0];
      m.rates[yd] = std::move(rt);
    }
  }
  m.radius = radius_for(m);
  return m;
}

Model make_modified2d(const std::map<Point, Rational>& jump_law,
                      const std::vector<Point>& modified) {
  Model m;
  m.d = 2;
  m.name = "modified2d";
  for (const auto& [y, p] : jump_law) {
    if (p.is_zero()) continue;
    bool is_mod = std::find(modified.begin(), modified.end(), y) != modified.end();
    if (!is_mod) {
      m.rates[y] = constant_rate(p);
    } else {
      MonomialFn f;
      f[SiteSet{}] = Rational(3) * p;
      f[SiteSet{-y}] = -p;
      f[SiteSet{Point(2 * y[0], 2 * y[1])}] = -p;
      m.rates[y] = table_from_monomials({-y, Point(2 * y[0], 2 * y[1])}, f);
    }
  }
  m.radius = radius_for(m);
  return m;
}

}  // namespace latgas
