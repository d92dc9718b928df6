#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsdca/losses.hpp"
#include "rsdca/regularizers.hpp"
#include "rsdca/rng.hpp"

namespace rsdca {

// One problem instance: min F(w) = (1/n) sum f_i(w) + penalty(w), optionally
// subject to the regularizer-ball constraint of radius rho.
struct ProblemSpec {
  LossModel loss = LossModel::squared();
  Regularizer reg = ConvexReg::l1();
  double lambda = 0.0;
  double radius = kInfiniteRadius;
  const Dataset* data = nullptr;

  void validate() const;
  double objective(const Vec& w) const;
};

enum class SplitMode { split, direct };

// The strongly convex composite the proximal step maximizes against:
// value(w) = 1/2||w||^2 + reg_weight * base(w), with base the convex
// regularizer or the convexified SCAD penalty d_lambda.
class CompositePenalty {
 public:
  CompositePenalty(Regularizer base, double reg_weight, double radius);

  double value(const Vec& w) const;
  double base_value(const Vec& w) const;

  // argmax_w <w,v> - value(w), i.e. the prox of reg_weight*base at v,
  // restricted to base(w) <= radius when the radius is finite.
  Vec prox_step(const Vec& v) const;

  double reg_weight() const { return reg_weight_; }
  double radius() const { return radius_; }
  const Regularizer& base() const { return base_; }

 private:
  Regularizer base_;
  double reg_weight_;
  double radius_;
};

// Q_i = (L_i + Lbar) / (2 N Lbar); uniform with a zero-smoothness fallback.
std::vector<double> sampling_distribution(std::span<const double> smoothness);

// min{ 1/(16(lambda_tilde + L_bar)), 1/(4 lambda_tilde N) }
double max_step_size(double lambda_tilde, double l_bar, int num_components);

// Step bound for the direct (already strongly convex) mode:
// min{1/(4 L_bar), 1/(4 lambda n)} when every f_i is convex, else
// min{lambda/(4 L_bar^2), 1/(4 lambda n)}.
double direct_step_size(double lambda, double l_bar, int n,
                        bool convex_components = true);

enum class ModelFamily { lasso, group, scad };

// Statistical lower bounds on lambda for the supported model families
// (natural log). The radius-dependent branch carries unspecified universal
// constants and is omitted.
double recommend_lambda(ModelFamily family, double sigma, int p, int n,
                        int group_size = 0, int num_groups = 0);

// The equivalent component form of a ProblemSpec: N component functions
// phi_i, a strongly convex composite, smoothness list, sampling distribution
// and the default step size. Split mode appends the concave quadratic
// component phi_N; direct mode reinterprets the problem as
// F = (1/n) sum f_i + lambda*(1/2||w||^2 + g(w)) and keeps N = n.
class SplitProblem {
 public:
  // Convex regularizer, Eq-(2)-type problems. Rejects corrected losses.
  static SplitProblem split_convex(const ProblemSpec& spec,
                                   double lambda_tilde);

  // SCAD or corrected-Lasso problems; mu collects the regularizer curvature
  // deficit and the loss correction.
  static SplitProblem split_nonconvex(const ProblemSpec& spec,
                                      double lambda_tilde);

  static SplitProblem direct(const ProblemSpec& spec);

  SplitMode mode() const { return mode_; }
  int num_components() const { return num_components_; }
  bool has_augmentation() const { return mode_ == SplitMode::split; }
  int num_samples() const { return spec_.data->n(); }
  int dim() const { return spec_.data->p(); }

  double lambda_tilde() const { return lambda_tilde_; }
  double mu() const { return mu_; }
  double loss_scale() const { return loss_scale_; }
  const ProblemSpec& spec() const { return spec_; }
  const CompositePenalty& composite() const { return composite_; }
  const std::optional<std::string>& advisory() const { return advisory_; }

  std::span<const double> smoothness() const { return smoothness_; }
  double mean_smoothness() const { return mean_smoothness_; }
  std::span<const double> sampling_probs() const { return probs_; }
  int sample_component(Philox& rng) const { return sampler_.sample(rng); }

  // Theorem step bound for this instance (direct mode uses the
  // proposition's bound).
  double default_step_size() const { return default_step_; }

  // phi_i for i < n; the helper names say what the augmentation needs.
  double component_value(int i, const Vec& w) const;
  double component_grad_coeff(int i, const Vec& w) const;
  double augmentation_value(const Vec& w) const;
  double augmentation_strength() const;  // (lambda_tilde + mu) * N

  // (1/N) sum phi_i(w) + lambda_tilde * composite(w); equals the original
  // objective identically.
  double split_objective(const Vec& w) const;

  // F(w) of the underlying problem (direct mode includes the quadratic that
  // lives inside g).
  double original_objective(const Vec& w) const;

 private:
  SplitProblem(const ProblemSpec& spec, SplitMode mode, double lambda_tilde,
               double mu, CompositePenalty composite);

  ProblemSpec spec_;
  SplitMode mode_;
  int num_components_;
  double lambda_tilde_;
  double mu_;
  double loss_scale_;
  CompositePenalty composite_;
  std::vector<double> smoothness_;
  double mean_smoothness_;
  double mean_loss_smoothness_;  // over the original f_i
  std::vector<double> probs_;
  DiscreteSampler sampler_;
  double default_step_;
  std::optional<std::string> advisory_;
};

}  // namespace rsdca
