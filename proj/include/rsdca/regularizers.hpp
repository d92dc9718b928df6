#pragma once

#include <functional>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "rsdca/dataset.hpp"

namespace rsdca {

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

// Convex regularizer: coordinatewise l1 or disjoint-group l1,2.
class ConvexReg {
 public:
  enum class Kind { l1, group };

  static ConvexReg l1() { return ConvexReg(Kind::l1, {}, 0); }

  // Groups must form a disjoint cover of {0,...,dim-1}.
  static ConvexReg group(std::vector<std::vector<int>> groups, int dim);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<int>>& groups() const { return groups_; }

  double value(const Vec& w) const;

  // argmin_w 1/2||w-v||^2 + c*value(w)
  Vec prox(const Vec& v, double c) const;
  void prox_inplace(const Vec& v, double c, Vec& out) const;

  // Same, subject to value(w) <= radius. Solved through the scalar dual:
  // the constrained minimizer is prox at threshold c+theta for the smallest
  // theta >= 0 making the result feasible.
  Vec prox_constrained(const Vec& v, double c, double radius) const;

  // l1 -> max|u_j|; group -> max_g ||u_g||_2.
  double dual_norm(const Vec& u) const;

 private:
  ConvexReg(Kind k, std::vector<std::vector<int>> g, int dim)
      : kind_(k), groups_(std::move(g)), dim_(dim) {}
  Kind kind_;
  std::vector<std::vector<int>> groups_;
  int dim_ = 0;
};

// Scalar SCAD penalty, the three-piece definition with shape zeta > 2.
double scad_value(double t, double lambda, double zeta);

// Global minimizer of 1/2(w-v)^2 + c*SCAD(w). Ties between regimes break
// toward smaller |w|.
double scad_prox_scalar(double v, double c, double lambda, double zeta);

// Minimizer of 1/2(w-v)^2 + c*(SCAD(w) + mu/2 w^2)/lambda, the convexified
// per-coordinate penalty with mu = 1/(zeta-1).
double dlambda_prox_scalar(double v, double c, double lambda, double zeta);

// SCAD regularizer with its convex decomposition: SCAD = lambda*d_lambda -
// mu/2 t^2 where d_lambda(t) = (SCAD(t) + mu/2 t^2)/lambda is convex,
// mu = 1/(zeta-1) and the slope at 0+ is lambda (L_d = 1).
class ScadReg {
 public:
  ScadReg(double lambda, double zeta);

  double lambda() const { return lambda_; }
  double zeta() const { return zeta_; }
  double mu() const { return 1.0 / (zeta_ - 1.0); }
  static constexpr double slope_constant() { return 1.0; }  // L_d

  // Sum of SCAD over coordinates (the d_{lambda,mu} term of the objective).
  double value(const Vec& w) const;

  // d_lambda(w) = sum_j (SCAD(w_j) + mu/2 w_j^2)/lambda.
  double convexified_value(const Vec& w) const;

  // Nonconvex prox: argmin 1/2||w-v||^2 + c*sum SCAD(w_j).
  Vec prox(const Vec& v, double c) const;

  // Convexified prox: argmin 1/2||w-v||^2 + c*d_lambda(w).
  Vec convexified_prox(const Vec& v, double c) const;

  // Convexified prox subject to d_lambda(w) <= radius (dual bisection).
  Vec convexified_prox_constrained(const Vec& v, double c, double radius) const;

 private:
  double lambda_;
  double zeta_;
};

using Regularizer = std::variant<ConvexReg, ScadReg>;

inline bool is_convex(const Regularizer& r) {
  return std::holds_alternative<ConvexReg>(r);
}

// Penalty contribution to the full objective: lambda*g(w) for convex g,
// the SCAD value itself for the nonconvex case.
double penalty_value(const Regularizer& r, double lambda, const Vec& w);

// Numerical check of the scalar-penalty assumptions on a positive grid:
// symmetry, monotone on t>=0, t -> d(t)/t nonincreasing, slope lambda*L_d at
// 0+, and convexity of the convexified scalar penalty.
struct AssumptionReport {
  bool symmetric = false;
  bool nondecreasing = false;
  bool ratio_nonincreasing = false;
  bool limit_slope_ok = false;
  bool convexified_convex = false;
  double limit_slope = 0.0;
  double mu = 0.0;
  double slope_constant = 0.0;
  bool all_pass() const {
    return symmetric && nondecreasing && ratio_nonincreasing &&
           limit_slope_ok && convexified_convex;
  }
};

AssumptionReport validate_assumptions(const std::function<double(double)>& d,
                                      double lambda, double mu,
                                      std::span<const double> grid);
AssumptionReport validate_assumptions(const ScadReg& r,
                                      std::span<const double> grid);

}  // namespace rsdca
