#include "rsdca/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace rsdca {

namespace {

constexpr double kProbeLo = -50.0;
constexpr double kProbeHi = 50.0;
constexpr int kProbePoints = 2001;

// log(1 + exp(-m)) without overflow for large |m|
double logistic_loss(double m) {
  if (m > 30.0) return std::exp(-m);      // log1p(e^-m) ~ e^-m, error < 1e-26
  if (m < -30.0) return -m;               // dominated by -m
  return std::log1p(std::exp(-m));
}

// -1 / (1 + exp(m))
double logistic_slope(double m) {
  if (m > 30.0) return -std::exp(-m);
  if (m < -30.0) return -1.0;
  return -1.0 / (1.0 + std::exp(m));
}

}  // namespace

LossModel LossModel::squared(double correction) {
  if (correction < 0.0)
    throw std::invalid_argument("LossModel: correction must be >= 0");
  LossModel m(LossKind::squared, correction);
  m.curvature_ = 1.0;
  return m;
}

LossModel LossModel::logistic() {
  LossModel m(LossKind::logistic, 0.0);
  m.curvature_ = 0.25;
  return m;
}

LossModel LossModel::glm(GlmFunctions f, double correction) {
  if (correction < 0.0)
    throw std::invalid_argument("LossModel: correction must be >= 0");
  if (!f.value || !f.deriv || !f.deriv2)
    throw std::invalid_argument("LossModel::glm: missing callbacks");
  LossModel m(LossKind::glm, correction);
  double sup = 0.0;
  for (int k = 0; k < kProbePoints; ++k) {
    double t = kProbeLo + (kProbeHi - kProbeLo) * k / (kProbePoints - 1);
    double dd = f.deriv2(t);
    if (dd < -1e-10)
      throw std::invalid_argument("LossModel::glm: Phi'' negative at t=" +
                                  std::to_string(t));
    sup = std::max(sup, dd);
  }
  m.curvature_ = sup;
  m.glm_ = std::move(f);
  return m;
}

double LossModel::value_at_margin(double margin, double y) const {
  switch (kind_) {
    case LossKind::squared: {
      double r = y - margin;
      return 0.5 * r * r;
    }
    case LossKind::logistic:
      return logistic_loss(y * margin);
    case LossKind::glm:
      return glm_.value(margin) - y * margin;
  }
  return 0.0;
}

double LossModel::coeff_at_margin(double margin, double y) const {
  switch (kind_) {
    case LossKind::squared:
      return margin - y;
    case LossKind::logistic:
      return y * logistic_slope(y * margin);
    case LossKind::glm:
      return glm_.deriv(margin) - y;
  }
  return 0.0;
}

double LossModel::value(const Dataset& d, int i, const Vec& w) const {
  if (i < 0 || i >= d.n())
    throw std::out_of_range("LossModel::value: sample " + std::to_string(i));
  return value_at_margin(d.row(i).dot(w), d.label(i));
}

double LossModel::grad_coeff(const Dataset& d, int i, const Vec& w) const {
  if (i < 0 || i >= d.n())
    throw std::out_of_range("LossModel::grad_coeff: sample " +
                            std::to_string(i));
  return coeff_at_margin(d.row(i).dot(w), d.label(i));
}

double LossModel::smoothness(const Dataset& d, int i) const {
  if (i < 0 || i >= d.n())
    throw std::out_of_range("LossModel::smoothness: sample " +
                            std::to_string(i));
  return curvature_ * d.row(i).squared_norm();
}

double full_objective(const LossModel& m, const Dataset& d, const Vec& w,
                      const Regularizer& reg, double lambda) {
  double s = 0.0;
  for (int i = 0; i < d.n(); ++i) s += m.value(d, i, w);
  s /= d.n();
  if (m.correction() > 0.0) s -= 0.5 * m.correction() * w.squaredNorm();
  return s + penalty_value(reg, lambda, w);
}

}  // namespace rsdca
