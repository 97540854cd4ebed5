#include "latgas/solve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace latgas {

GapGrid::GapGrid(int degree, int G) : degree_(degree), G_(G), dims_(degree - 1) {
  if (degree < 1) throw std::invalid_argument("GapGrid: degree >= 1");
  if (dims_ > 3) throw std::invalid_argument("GapGrid: degree > 4 not materialized");
  std::size_t n = 1;
  for (int i = 0; i < dims_; ++i) n *= std::size_t(G + 1);
  v_.assign(std::max<std::size_t>(n, 1), 0.0);
}

std::size_t GapGrid::index(const std::vector<int>& gaps) const {
  assert((int)gaps.size() == dims_);
  std::size_t idx = 0;
  for (int i = 0; i < dims_; ++i) {
    assert(gaps[i] >= 0 && gaps[i] <= G_);
    idx = idx * (G_ + 1) + gaps[i];
  }
  return idx;
}

std::vector<int> GapGrid::gaps_of(std::size_t idx) const {
  std::vector<int> g(dims_, 0);
  for (int i = dims_ - 1; i >= 0; --i) {
    g[i] = int(idx % (G_ + 1));
    idx /= (G_ + 1);
  }
  return g;
}

namespace {

// Moves of the d=1 dual exclusion walk in gap coordinates: particle i of n
// steps left/right; each move shifts one or two adjacent gap coordinates.
// Each entry: {coord a, delta a, coord b, delta b, guard coord} where the
// guard coordinate (if >= 0) must be positive for the move to exist.
struct GapMove {
  int a, da, b, db, guard;
};

std::vector<GapMove> gap_moves(int degree) {
  int n = degree, dims = degree - 1;
  std::vector<GapMove> mv;
  for (int i = 1; i <= n; ++i) {
    // right move of particle i: u_{i-1}+1, u_i-1 (needs u_i>0)
    {
      int a = i - 2, b = i - 1;  // 0-based coords u_{i-1}, u_i
      if (b <= dims - 1)
        mv.push_back({a, +1, b, -1, b});
      else if (a >= 0)
        mv.push_back({a, +1, -1, 0, -1});  // last particle, unbounded right
    }
    // left move of particle i: u_{i-1}-1 (needs u_{i-1}>0), u_i+1
    {
      int a = i - 2, b = i - 1;
      if (a >= 0 && b <= dims - 1)
        mv.push_back({a, -1, b, +1, a});
      else if (a >= 0)
        mv.push_back({a, -1, -1, 0, a});  // last particle moving left
      else if (b <= dims - 1)
        mv.push_back({b, +1, -1, 0, -1});  // first particle moving left
    }
  }
  return mv;
}

}  // namespace

void s0_apply_grid(const GapGrid& in, GapGrid& out) {
  const int dims = in.dims();
  const int G = in.extent();
  out.data().assign(in.size(), 0.0);
  if (dims == 0) return;  // degree-1 reduced S0 vanishes
  auto moves = gap_moves(in.degree());
  const auto& v = in.data();
  auto& o = out.data();
  std::vector<int> u(dims, 0);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    // decode
    std::size_t t = idx;
    for (int i = dims - 1; i >= 0; --i) {
      u[i] = int(t % (G + 1));
      t /= (G + 1);
    }
    double fu = v[idx];
    double acc = 0.0;
    for (const auto& m : moves) {
      if (m.guard >= 0 && u[m.guard] == 0) continue;
      bool inside = true;
      long long nidx = (long long)idx;
      if (m.a >= 0) {
        int na = u[m.a] + m.da;
        if (na < 0 || na > G) inside = false;
        long long stride = 1;
        for (int i = m.a + 1; i < dims; ++i) stride *= (G + 1);
        nidx += (long long)m.da * stride;
      }
      if (inside && m.b >= 0) {
        int nb = u[m.b] + m.db;
        if (nb < 0 || nb > G) inside = false;
        long long stride = 1;
        for (int i = m.b + 1; i < dims; ++i) stride *= (G + 1);
        nidx += (long long)m.db * stride;
      }
      acc += (inside ? v[std::size_t(nidx)] : 0.0) - fu;
    }
    o[idx] = acc;
  }
}

double s0_dirichlet_grid(const GapGrid& f) {
  const int dims = f.dims();
  const int G = f.extent();
  if (dims == 0) return 0.0;
  auto moves = gap_moves(f.degree());
  const auto& v = f.data();
  double total = 0.0;
  std::vector<int> u(dims, 0);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    std::size_t t = idx;
    for (int i = dims - 1; i >= 0; --i) {
      u[i] = int(t % (G + 1));
      t /= (G + 1);
    }
    double fu = v[idx];
    for (const auto& m : moves) {
      if (m.guard >= 0 && u[m.guard] == 0) continue;
      bool inside = true;
      long long nidx = (long long)idx;
      if (m.a >= 0) {
        int na = u[m.a] + m.da;
        if (na < 0 || na > G) inside = false;
        long long stride = 1;
        for (int i = m.a + 1; i < dims; ++i) stride *= (G + 1);
        nidx += (long long)m.da * stride;
      }
      if (inside && m.b >= 0) {
        int nb = u[m.b] + m.db;
        if (nb < 0 || nb > G) inside = false;
        long long stride = 1;
        for (int i = m.b + 1; i < dims; ++i) stride *= (G + 1);
        nidx += (long long)m.db * stride;
      }
      double diff = (inside ? v[std::size_t(nidx)] : 0.0) - fu;
      total += 0.5 * diff * diff;
    }
  }
  return total;
}

double grid_inner(const GapGrid& a, const GapGrid& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

GapGrid s0_resolvent_grid(const GapGrid& rhs, double lambda, SolveReport* report, double tol,
                          int max_iter) {
  GapGrid x(rhs.degree(), rhs.extent());
  GapGrid r = rhs, p = rhs, Ap(rhs.degree(), rhs.extent());
  double rnorm2 = grid_inner(r, r);
  double bnorm = std::sqrt(rnorm2);
  SolveReport rep;
  if (bnorm == 0.0) {
    rep.converged = true;
    if (report) *report = rep;
    return x;
  }
  for (int it = 0; it < max_iter; ++it) {
    // Ap = (lambda - S0) p
    s0_apply_grid(p, Ap);
    for (std::size_t i = 0; i < Ap.size(); ++i)
      Ap.data()[i] = lambda * p.data()[i] - Ap.data()[i];
    double alpha = rnorm2 / grid_inner(p, Ap);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x.data()[i] += alpha * p.data()[i];
      r.data()[i] -= alpha * Ap.data()[i];
    }
    double rnew = grid_inner(r, r);
    rep.iterations = it + 1;
    rep.relative_residual = std::sqrt(rnew) / bnorm;
    if (rep.relative_residual <= tol) {
      rep.converged = true;
      break;
    }
    double beta = rnew / rnorm2;
    rnorm2 = rnew;
    for (std::size_t i = 0; i < p.size(); ++i) p.data()[i] = r.data()[i] + beta * p.data()[i];
  }
  if (report) *report = rep;
  if (!rep.converged)
    throw std::runtime_error("s0_resolvent_grid: no convergence, residual " +
                             std::to_string(rep.relative_residual));
  return x;
}

double s0_h1_grid(const GapGrid& rhs, double lambda, SolveReport* report) {
  GapGrid x = s0_resolvent_grid(rhs, lambda, report);
  return grid_inner(rhs, x);
}

GapGrid grid_from_reduced(const ReducedFunction& f, int G) {
  GapGrid g(f.n, G);
  for (const auto& [k, v] : f.coeffs) {
    auto gaps = reduced_gaps(k);
    bool ok = true;
    for (int gi : gaps)
      if (gi < 0 || gi > G) ok = false;
    if (ok) g.at(gaps) += v;
  }
  return g;
}

ReducedFunction reduced_from_grid(const GapGrid& g, double drop_below) {
  ReducedFunction f;
  f.n = g.degree();
  f.d = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double v = g.data()[i];
    if (std::abs(v) > drop_below && v != 0.0) f.add(class_from_gaps(g.gaps_of(i)), v);
  }
  return f;
}

// ---- generic class-space solves ------------------------------------------------

namespace {

struct ClassSpace {
  std::vector<SiteSet> classes;
  std::map<SiteSet, int> index;

  int find(const SiteSet& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  }
};

// Classes reachable from the seeds under exchange moves, within the diameter
// and degree caps. (Blocks change degree; closure under S0 only, plus the
// degrees injected by seeding each degree present in rhs or produced by the
// operator — callers seed with rhs.)
ClassSpace build_space(const std::vector<SiteSet>& seeds, int d, const Truncation& trunc) {
  ClassSpace sp;
  std::vector<SiteSet> queue;
  auto push = [&](const SiteSet& c) {
    if (c.size() < 1 || c.size() > trunc.n_max) return;
    if (c.diameter() > trunc.diameter) return;
    if (sp.index.count(c)) return;
    sp.index[c] = (int)sp.classes.size();
    sp.classes.push_back(c);
    queue.push_back(c);
  };
  for (const auto& s : seeds) push(s.canonical());
  while (!queue.empty()) {
    SiteSet c = queue.back();
    queue.pop_back();
    for (const auto& nb : exchange_neighbors(c, d)) push(nb.canonical());
  }
  return sp;
}

struct Csr {
  std::vector<int> rowptr, col;
  std::vector<double> val;
  int n = 0;

  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int k = rowptr[i]; k < rowptr[i + 1]; ++k) s += val[k] * x[col[k]];
      y[i] = s;
    }
  }
};

// Matrix of (lambda - Op) on the class space, Op given column-wise by a
// functional basis application.
Csr assemble(const ClassSpace& sp, double lambda,
             const std::function<ReducedFunction(const SiteSet&)>& apply_col) {
  int n = (int)sp.classes.size();
  std::vector<std::map<int, double>> rows(n);
  for (int j = 0; j < n; ++j) {
    ReducedFunction col = apply_col(sp.classes[j]);
    for (const auto& [k, v] : col.coeffs) {
      int i = sp.find(k);
      if (i >= 0) rows[i][j] -= v;  // -Op
    }
    rows[j][j] += lambda;
  }
  Csr m;
  m.n = n;
  m.rowptr.push_back(0);
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, v] : rows[i]) {
      m.col.push_back(j);
      m.val.push_back(v);
    }
    m.rowptr.push_back((int)m.col.size());
  }
  return m;
}

std::vector<double> bicgstab(const Csr& A, const std::vector<double>& b, SolveReport& rep,
                             double tol = kSolveTol, int max_iter = kSolveMaxIter) {
  int n = A.n;
  std::vector<double> x(n, 0.0), r = b, rhat = b, p(n, 0.0), v(n, 0.0), s(n), t(n);
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& c) {
    double z = 0;
    for (int i = 0; i < (int)a.size(); ++i) z += a[i] * c[i];
    return z;
  };
  double bnorm = std::sqrt(dot(b, b));
  if (bnorm == 0) {
    rep.converged = true;
    return x;
  }
  double rho = 1, alpha = 1, omega = 1;
  for (int it = 0; it < max_iter; ++it) {
    double rho_new = dot(rhat, r);
    if (rho_new == 0) break;
    if (it == 0) {
      p = r;
    } else {
      double beta = (rho_new / rho) * (alpha / omega);
      for (int i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
    }
    rho = rho_new;
    A.apply(p, v);
    alpha = rho / dot(rhat, v);
    for (int i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
    A.apply(s, t);
    double tt = dot(t, t);
    omega = tt == 0 ? 0 : dot(t, s) / tt;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i] + omega * s[i];
      r[i] = s[i] - omega * t[i];
    }
    rep.iterations = it + 1;
    rep.relative_residual = std::sqrt(dot(r, r)) / bnorm;
    if (rep.relative_residual <= tol) {
      rep.converged = true;
      break;
    }
    if (omega == 0) break;
  }
  return x;
}

std::vector<double> cg(const Csr& A, const std::vector<double>& b, SolveReport& rep,
                       double tol = kSolveTol, int max_iter = kSolveMaxIter) {
  int n = A.n;
  std::vector<double> x(n, 0.0), r = b, p = b, Ap(n);
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& c) {
    double z = 0;
    for (int i = 0; i < (int)a.size(); ++i) z += a[i] * c[i];
    return z;
  };
  double rn = dot(r, r), bnorm = std::sqrt(rn);
  if (bnorm == 0) {
    rep.converged = true;
    return x;
  }
  for (int it = 0; it < max_iter; ++it) {
    A.apply(p, Ap);
    double alpha = rn / dot(p, Ap);
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    double rn2 = dot(r, r);
    rep.iterations = it + 1;
    rep.relative_residual = std::sqrt(rn2) / bnorm;
    if (rep.relative_residual <= tol) {
      rep.converged = true;
      break;
    }
    double beta = rn2 / rn;
    rn = rn2;
    for (int i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return x;
}

ReducedFunction from_vector(const ClassSpace& sp, const std::vector<double>& x, int n_hint,
                            int d) {
  ReducedFunction out;
  out.n = n_hint;
  out.d = d;
  for (int i = 0; i < (int)sp.classes.size(); ++i)
    if (x[i] != 0.0) out.add(sp.classes[i], x[i]);
  return out;
}

}  // namespace

ReducedFunction resolvent_solve_s0(const ReducedFunction& rhs, double lambda,
                                   const Truncation& trunc, int d, SolveReport* report) {
  if (lambda <= 0) throw std::invalid_argument("resolvent parameter must be positive");
  std::vector<SiteSet> seeds;
  for (const auto& [k, v] : rhs.coeffs) seeds.push_back(k);
  ClassSpace sp = build_space(seeds, d, trunc);
  std::vector<double> b(sp.classes.size(), 0.0);
  for (const auto& [k, v] : rhs.coeffs) {
    int i = sp.find(k.canonical());
    if (i >= 0) b[i] += v;
  }
  Csr A = assemble(sp, lambda, [&](const SiteSet& c) {
    ReducedFunction e;
    e.n = c.size();
    e.d = d;
    e.add(c, 1.0);
    return apply_s0_reduced(e, d);
  });
  SolveReport rep;
  auto x = cg(A, b, rep);
  if (report) *report = rep;
  if (!rep.converged)
    throw std::runtime_error("resolvent_solve_s0: no convergence, residual " +
                             std::to_string(rep.relative_residual));
  return from_vector(sp, x, rhs.n, d);
}

ReducedFunction resolvent_solve_generator(const Model& m, const DensityContext& ctx,
                                          const ReducedFunction& rhs, double lambda,
                                          const Truncation& trunc, SolveReport* report) {
  if (lambda <= 0) throw std::invalid_argument("resolvent parameter must be positive");
  OperatorSum S = decompose_symmetric(m, ctx);
  OperatorSum A = decompose_asymmetric(m, ctx);
  std::vector<SiteSet> seeds;
  for (const auto& [k, v] : rhs.coeffs) seeds.push_back(k);
  ClassSpace sp = build_space(seeds, m.d, trunc);
  std::vector<double> b(sp.classes.size(), 0.0);
  for (const auto& [k, v] : rhs.coeffs) {
    int i = sp.find(k.canonical());
    if (i >= 0) b[i] += v;
  }
  Csr M = assemble(sp, lambda, [&](const SiteSet& c) {
    ReducedFunction e;
    e.n = c.size();
    e.d = m.d;
    e.add(c, 1.0);
    ReducedFunction ls = apply_operator_reduced(S, e, m.d);
    ReducedFunction la = apply_operator_reduced(A, e, m.d);
    for (const auto& [k, v] : la.coeffs) ls.add(k, v);
    return ls;
  });
  SolveReport rep;
  auto x = bicgstab(M, b, rep);
  if (report) *report = rep;
  if (!rep.converged)
    throw std::runtime_error("resolvent_solve_generator: no convergence, residual " +
                             std::to_string(rep.relative_residual));
  return from_vector(sp, x, rhs.n, m.d);
}

double h1_norm_s0(const ReducedFunction& rhs, double lambda, const Truncation& trunc, int d,
                  SolveReport* report) {
  ReducedFunction u = resolvent_solve_s0(rhs, lambda, trunc, d, report);
  return reduced_inner(rhs, u);
}

}  // namespace latgas
