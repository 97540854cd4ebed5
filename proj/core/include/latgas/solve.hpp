#pragma once

#include <cstddef>
#include <vector>

#include "latgas/dual.hpp"
#include "latgas/model.hpp"
#include "latgas/operators.hpp"

namespace latgas {

struct Truncation {
  int n_max = 4;     // max degree kept
  int diameter = 64; // classes with larger diameter are absorbed (set to 0)
};

struct SolveReport {
  int iterations = 0;
  double relative_residual = 1.0;
  bool converged = false;
};

inline constexpr double kSolveTol = 1e-8;
inline constexpr int kSolveMaxIter = 100000;

// Dense function on the d=1 gap box [0,G]^{degree-1}; the reduced coordinates
// of a degree-n homogeneous function. degree-1 functions live on a single cell.
class GapGrid {
 public:
  GapGrid(int degree, int G);

  int degree() const { return degree_; }
  int extent() const { return G_; }
  int dims() const { return dims_; }
  std::size_t size() const { return v_.size(); }

  double& at(const std::vector<int>& gaps) { return v_[index(gaps)]; }
  double at(const std::vector<int>& gaps) const { return v_[index(gaps)]; }
  std::size_t index(const std::vector<int>& gaps) const;
  std::vector<int> gaps_of(std::size_t idx) const;

  std::vector<double>& data() { return v_; }
  const std::vector<double>& data() const { return v_; }

 private:
  int degree_, G_, dims_;
  std::vector<double> v_;
};

// out = S0 in, with absorbing (Dirichlet) boundary outside the box.
void s0_apply_grid(const GapGrid& in, GapGrid& out);
// <f, (-S0) f> for the box function extended by zero.
double s0_dirichlet_grid(const GapGrid& f);
double grid_inner(const GapGrid& a, const GapGrid& b);

// Conjugate gradients for (lambda - S0) x = rhs on the box. Returns x.
GapGrid s0_resolvent_grid(const GapGrid& rhs, double lambda, SolveReport* report = nullptr,
                          double tol = kSolveTol, int max_iter = kSolveMaxIter);
// <<rhs, (lambda - S0)^{-1} rhs>> on the box (monotone increasing in G).
double s0_h1_grid(const GapGrid& rhs, double lambda, SolveReport* report = nullptr);

GapGrid grid_from_reduced(const ReducedFunction& f, int G);
ReducedFunction reduced_from_grid(const GapGrid& g, double drop_below = 0.0);

// Generic truncated solves on canonical-class spaces (any d). The S0 solve
// uses CG; the full-generator solve (L = S + A from the block decomposition)
// uses BiCGStab.
ReducedFunction resolvent_solve_s0(const ReducedFunction& rhs, double lambda,
                                   const Truncation& trunc, int d,
                                   SolveReport* report = nullptr);
ReducedFunction resolvent_solve_generator(const Model& m, const DensityContext& ctx,
                                          const ReducedFunction& rhs, double lambda,
                                          const Truncation& trunc,
                                          SolveReport* report = nullptr);
double h1_norm_s0(const ReducedFunction& rhs, double lambda, const Truncation& trunc, int d,
                  SolveReport* report = nullptr);

}  // namespace latgas
