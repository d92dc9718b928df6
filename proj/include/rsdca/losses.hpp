#pragma once

#include <functional>

#include "rsdca/dataset.hpp"
#include "rsdca/regularizers.hpp"

namespace rsdca {

enum class LossKind { squared, logistic, glm };

struct GlmFunctions {
  std::function<double(double)> value;   // Phi
  std::function<double(double)> deriv;   // Phi'
  std::function<double(double)> deriv2;  // Phi''
};

// Per-sample smooth convex loss f_i. Gradients are always colinear with the
// feature row: grad f_i(w) = coeff * x_i. The corrected-Lasso concave term
// -gamma/2 ||w||^2 is carried as metadata here but enters the objective only
// through full_objective and the splitting, never through per-sample values.
class LossModel {
 public:
  static LossModel squared(double correction = 0.0);
  static LossModel logistic();
  // Validates convexity of Phi numerically (Phi'' >= 0 on the probe grid).
  static LossModel glm(GlmFunctions f, double correction = 0.0);

  LossKind kind() const { return kind_; }
  double correction() const { return correction_; }

  double value(const Dataset& d, int i, const Vec& w) const;

  // Scalar c with grad f_i(w) = c * x_i.
  double grad_coeff(const Dataset& d, int i, const Vec& w) const;

  // Smoothness constant L_i of f_i.
  double smoothness(const Dataset& d, int i) const;

  // Margin forms shared by the solvers' inner loops.
  double value_at_margin(double margin, double y) const;
  double coeff_at_margin(double margin, double y) const;

  // Upper bound on the scalar curvature (1 squared, 1/4 logistic, probe
  // supremum for glm).
  double curvature_bound() const { return curvature_; }

 private:
  LossModel(LossKind k, double corr) : kind_(k), correction_(corr) {}
  LossKind kind_;
  double correction_;
  double curvature_ = 1.0;
  GlmFunctions glm_;
};

// F(w) = (1/n) sum f_i(w) - correction/2 ||w||^2 + penalty, where the penalty
// is lambda*g(w) for convex g and the SCAD value for the nonconvex case.
double full_objective(const LossModel& m, const Dataset& d, const Vec& w,
                      const Regularizer& reg, double lambda);

}  // namespace rsdca
