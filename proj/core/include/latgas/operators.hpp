#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "latgas/dual.hpp"
#include "latgas/lattice.hpp"
#include "latgas/model.hpp"

namespace latgas {

// Pattern-match-and-replace operator A[B1,B2,B3,y]:
//   (A f)_Omega = sum_x 1{B1+x in Omega, (B2+x) cap Omega = 0}
//                 (f_{(Omega\(B1+x)) u (B3^{0,y}+x)} - f_{(Omega\(B1+x)) u (B3+x)})
// with B3^{0,y} = (B3 \ {y}) u {0}. Acting on degree n gives degree n - |B3| + |B1|.
struct BuildingBlock {
  SiteSet B1, B2, B3;
  Point y;
  double weight = 1.0;
};

struct ExactBlock {
  SiteSet B1, B2, B3;
  Point y;
  QSqrtChi weight;
};

struct OperatorSum {
  std::vector<BuildingBlock> blocks;
  double s0_coeff = 0.0;
  std::string label;
};

// Single-block application (weight ignored; scatter over alignments). With
// torus_side > 0, all sets are wrapped mod the side.
DualFunction apply_block(const BuildingBlock& b, const DualFunction& f, int torus_side = 0);
ReducedFunction apply_block_reduced(const BuildingBlock& b, const ReducedFunction& f, int d);

DualFunction apply_operator(const OperatorSum& op, const DualFunction& f, int d,
                            int torus_side = 0);
ReducedFunction apply_operator_reduced(const OperatorSum& op, const ReducedFunction& f, int d);

// S0 in the dual basis: coefficient transport along boundary exchanges.
DualFunction apply_s0(const DualFunction& f, int d);
ReducedFunction apply_s0_reduced(const ReducedFunction& f, int d);

// <f,(-S0)f> = (1/2) sum over coefficients and exchange moves of squared
// differences; reduced version computes <<f,(-S0)f>>.
double dirichlet_form_dual(const DualFunction& f, int d);
double dirichlet_form(const ReducedFunction& f, int d);

// <<f, g>> and <<f, Op g>> via dimension-reduced coefficients.
double bilinear_form(const ReducedFunction& f, const ReducedFunction& g);
double bilinear_form(const DualFunction& f, const DualFunction& g);
double bilinear_form(const DualFunction& f, const OperatorSum& op, const DualFunction& g, int d);

// A = (L - L*)/2 as a weighted block list (paper_sign flips to the (L*-L)/2
// convention the paper's displays use). S = (L + L*)/2 likewise; S has no
// separate S0 shortcut, the blocks encode it in full.
OperatorSum decompose_asymmetric(const Model& m, const DensityContext& ctx,
                                 bool paper_sign = false);
OperatorSum decompose_symmetric(const Model& m, const DensityContext& ctx);
std::vector<ExactBlock> decompose_asymmetric_exact(const Model& m,
                                                   const DensityContextExact& ctx,
                                                   bool paper_sign = false);

// Per-(|B1|,|B2|,|B3|) weight sums of the decomposition of a single (y,Lambda)
// piece with dual rate coefficient c, in exact arithmetic (paper-sign
// convention). Closed form:
//   sum(b1,b2,b3) = sqrt(chi) c binom(l,g) [kappa^m binom(g+1,m) - kappa^{m-2} binom(g,m-2)]
// with l = |Lambda|, g = b3-1, m = b1-l+g; this reproduces rows 1-6 of the
// bookkeeping table verbatim (rows 7-9 as printed carry a spurious kappa).
std::map<std::tuple<int, int, int>, QSqrtChi> bookkeeping_sums_emitted(
    const SiteSet& lambda, const Point& y, const QSqrtChi& c, const DensityContextExact& ctx);
std::map<std::tuple<int, int, int>, QSqrtChi> bookkeeping_sums_closed_form(
    const SiteSet& lambda, const Point& y, const QSqrtChi& c, const DensityContextExact& ctx);

}  // namespace latgas
