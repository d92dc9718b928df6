#include "rsdca/splitting.hpp"

#include <cmath>
#include <stdexcept>

namespace rsdca {

void ProblemSpec::validate() const {
  if (!data) throw std::invalid_argument("ProblemSpec: no dataset");
  if (!(lambda > 0.0)) throw std::invalid_argument("ProblemSpec: lambda <= 0");
  if (!(radius > 0.0)) throw std::invalid_argument("ProblemSpec: radius <= 0");
  if (const auto* s = std::get_if<ScadReg>(&reg)) {
    if (s->lambda() != lambda)
      throw std::invalid_argument(
          "ProblemSpec: SCAD level must equal the problem lambda");
  }
}

double ProblemSpec::objective(const Vec& w) const {
  return full_objective(loss, *data, w, reg, lambda);
}

CompositePenalty::CompositePenalty(Regularizer base, double reg_weight,
                                   double radius)
    : base_(std::move(base)), reg_weight_(reg_weight), radius_(radius) {
  if (!(reg_weight >= 0.0))
    throw std::invalid_argument("CompositePenalty: negative weight");
}

double CompositePenalty::base_value(const Vec& w) const {
  if (const auto* cr = std::get_if<ConvexReg>(&base_)) return cr->value(w);
  return std::get<ScadReg>(base_).convexified_value(w);
}

double CompositePenalty::value(const Vec& w) const {
  return 0.5 * w.squaredNorm() + reg_weight_ * base_value(w);
}

Vec CompositePenalty::prox_step(const Vec& v) const {
  if (const auto* cr = std::get_if<ConvexReg>(&base_)) {
    return std::isinf(radius_) ? cr->prox(v, reg_weight_)
                               : cr->prox_constrained(v, reg_weight_, radius_);
  }
  const auto& s = std::get<ScadReg>(base_);
  return std::isinf(radius_)
             ? s.convexified_prox(v, reg_weight_)
             : s.convexified_prox_constrained(v, reg_weight_, radius_);
}

std::vector<double> sampling_distribution(std::span<const double> smoothness) {
  const size_t n = smoothness.size();
  if (n == 0) throw std::invalid_argument("sampling_distribution: empty");
  double sum = 0.0;
  for (double l : smoothness) {
    if (l < 0.0)
      throw std::invalid_argument("sampling_distribution: negative smoothness");
    sum += l;
  }
  std::vector<double> q(n);
  if (sum == 0.0) {
    // all-zero smoothness carries no preference
    for (auto& x : q) x = 1.0 / static_cast<double>(n);
    return q;
  }
  double mean = sum / static_cast<double>(n);
  for (size_t i = 0; i < n; ++i)
    q[i] = (smoothness[i] + mean) / (2.0 * static_cast<double>(n) * mean);
  return q;
}

double max_step_size(double lambda_tilde, double l_bar, int num_components) {
  if (!(lambda_tilde > 0.0) || !(l_bar > 0.0))
    throw std::invalid_argument("max_step_size: nonpositive inputs");
  double lt = std::max(lambda_tilde, 1e-12);
  return std::min(1.0 / (16.0 * (lt + l_bar)),
                  1.0 / (4.0 * lt * num_components));
}

double direct_step_size(double lambda, double l_bar, int n,
                        bool convex_components) {
  if (!(lambda > 0.0) || !(l_bar > 0.0))
    throw std::invalid_argument("direct_step_size: nonpositive inputs");
  double grad_branch = convex_components ? 1.0 / (4.0 * l_bar)
                                         : lambda / (4.0 * l_bar * l_bar);
  return std::min(grad_branch, 1.0 / (4.0 * lambda * n));
}

double recommend_lambda(ModelFamily family, double sigma, int p, int n,
                        int group_size, int num_groups) {
  if (sigma < 0.0 || n <= 0)
    throw std::invalid_argument("recommend_lambda: bad inputs");
  switch (family) {
    case ModelFamily::lasso:
      return 6.0 * sigma * std::sqrt(std::log(static_cast<double>(p)) / n);
    case ModelFamily::group:
      if (group_size <= 0 || num_groups <= 0)
        throw std::invalid_argument("recommend_lambda: group shape required");
      return 4.0 * sigma *
             (std::sqrt(static_cast<double>(group_size) / n) +
              std::sqrt(std::log(static_cast<double>(num_groups)) / n));
    case ModelFamily::scad:
      return 12.0 * sigma * std::sqrt(std::log(static_cast<double>(p)) / n);
  }
  throw std::invalid_argument("recommend_lambda: unknown family");
}

SplitProblem::SplitProblem(const ProblemSpec& spec, SplitMode mode,
                           double lambda_tilde, double mu,
                           CompositePenalty composite)
    : spec_(spec),
      mode_(mode),
      lambda_tilde_(lambda_tilde),
      mu_(mu),
      composite_(std::move(composite)) {
  const int n = spec_.data->n();
  const bool split = (mode_ == SplitMode::split);
  num_components_ = split ? n + 1 : n;
  loss_scale_ = split ? static_cast<double>(n + 1) / n : 1.0;

  smoothness_.resize(num_components_);
  double loss_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double li = spec_.loss.smoothness(*spec_.data, i);
    loss_sum += li;
    smoothness_[i] = loss_scale_ * li;
  }
  mean_loss_smoothness_ = loss_sum / n;
  if (split)
    smoothness_[n] = (lambda_tilde_ + mu_) * num_components_;
  double total = 0.0;
  for (double l : smoothness_) total += l;
  mean_smoothness_ = total / num_components_;

  probs_ = sampling_distribution(smoothness_);
  sampler_ = DiscreteSampler(probs_);

  if (split) {
    default_step_ =
        max_step_size(lambda_tilde_, mean_loss_smoothness_, num_components_);
    if (mu_ >= lambda_tilde_)
      advisory_ = "augmentation strength mu=" + std::to_string(mu_) +
                  " is at least lambda_tilde=" + std::to_string(lambda_tilde_) +
                  "; the effective-curvature condition may fail";
  } else {
    default_step_ = direct_step_size(spec_.lambda, mean_loss_smoothness_, n,
                                     spec_.loss.correction() == 0.0);
  }
}

SplitProblem SplitProblem::split_convex(const ProblemSpec& spec,
                                        double lambda_tilde) {
  spec.validate();
  if (!(lambda_tilde > 0.0))
    throw std::invalid_argument("split_convex: lambda_tilde <= 0");
  if (!is_convex(spec.reg))
    throw std::invalid_argument(
        "split_convex: nonconvex regularizer; use split_nonconvex");
  if (spec.loss.correction() > 0.0)
    throw std::invalid_argument(
        "split_convex: corrected loss is a nonconvex objective; use "
        "split_nonconvex");
  CompositePenalty g(spec.reg, spec.lambda / lambda_tilde, spec.radius);
  return SplitProblem(spec, SplitMode::split, lambda_tilde, 0.0, std::move(g));
}

SplitProblem SplitProblem::split_nonconvex(const ProblemSpec& spec,
                                           double lambda_tilde) {
  spec.validate();
  if (!(lambda_tilde > 0.0))
    throw std::invalid_argument("split_nonconvex: lambda_tilde <= 0");
  double mu = spec.loss.correction();
  if (const auto* s = std::get_if<ScadReg>(&spec.reg)) mu += s->mu();
  CompositePenalty g(spec.reg, spec.lambda / lambda_tilde, spec.radius);
  return SplitProblem(spec, SplitMode::split, lambda_tilde, mu, std::move(g));
}

SplitProblem SplitProblem::direct(const ProblemSpec& spec) {
  spec.validate();
  if (!is_convex(spec.reg))
    throw std::invalid_argument(
        "direct mode requires a convex base regularizer");
  if (spec.loss.correction() > 0.0)
    throw std::invalid_argument(
        "direct mode requires convex per-sample losses (no correction)");
  // g(w) = 1/2||w||^2 + base(w) is 1-strongly convex as the direct-mode
  // analysis needs.
  CompositePenalty g(spec.reg, 1.0, spec.radius);
  return SplitProblem(spec, SplitMode::direct, spec.lambda, 0.0, std::move(g));
}

double SplitProblem::component_value(int i, const Vec& w) const {
  return loss_scale_ * spec_.loss.value(*spec_.data, i, w);
}

double SplitProblem::component_grad_coeff(int i, const Vec& w) const {
  return loss_scale_ * spec_.loss.grad_coeff(*spec_.data, i, w);
}

double SplitProblem::augmentation_value(const Vec& w) const {
  return -0.5 * augmentation_strength() * w.squaredNorm();
}

double SplitProblem::augmentation_strength() const {
  return (lambda_tilde_ + mu_) * num_components_;
}

double SplitProblem::split_objective(const Vec& w) const {
  const int n = spec_.data->n();
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += component_value(i, w);
  if (has_augmentation()) s += augmentation_value(w);
  return s / num_components_ + lambda_tilde_ * composite_.value(w);
}

double SplitProblem::original_objective(const Vec& w) const {
  if (mode_ == SplitMode::split) return spec_.objective(w);
  // direct mode: the quadratic lives inside g
  double s = spec_.objective(w);
  return s + spec_.lambda * 0.5 * w.squaredNorm();
}

}  // namespace rsdca
