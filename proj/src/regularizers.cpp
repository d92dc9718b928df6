#include "rsdca/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsdca {

namespace {

double soft(double v, double c) {
  if (v > c) return v - c;
  if (v < -c) return v + c;
  return 0.0;
}

}  // namespace

ConvexReg ConvexReg::group(std::vector<std::vector<int>> groups, int dim) {
  std::vector<char> seen(dim, 0);
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("ConvexReg::group: empty group");
    for (int j : g) {
      if (j < 0 || j >= dim)
        throw std::invalid_argument("ConvexReg::group: index out of range");
      if (seen[j])
        throw std::invalid_argument("ConvexReg::group: groups overlap at " +
                                    std::to_string(j));
      seen[j] = 1;
    }
  }
  for (int j = 0; j < dim; ++j)
    if (!seen[j])
      throw std::invalid_argument("ConvexReg::group: index " +
                                  std::to_string(j) + " not covered");
  return ConvexReg(Kind::group, std::move(groups), dim);
}

double ConvexReg::value(const Vec& w) const {
  if (kind_ == Kind::l1) return w.lpNorm<1>();
  double s = 0.0;
  for (const auto& g : groups_) {
    double sq = 0.0;
    for (int j : g) sq += w[j] * w[j];
    s += std::sqrt(sq);
  }
  return s;
}

void ConvexReg::prox_inplace(const Vec& v, double c, Vec& out) const {
  if (c < 0.0) throw std::invalid_argument("prox: negative threshold");
  out.resize(v.size());
  if (kind_ == Kind::l1) {
    for (Eigen::Index j = 0; j < v.size(); ++j) out[j] = soft(v[j], c);
    return;
  }
  for (const auto& g : groups_) {
    double sq = 0.0;
    for (int j : g) sq += v[j] * v[j];
    double norm = std::sqrt(sq);
    double shrink = (norm > c) ? (1.0 - c / norm) : 0.0;
    for (int j : g) out[j] = shrink * v[j];
  }
}

Vec ConvexReg::prox(const Vec& v, double c) const {
  Vec out;
  prox_inplace(v, c, out);
  return out;
}

Vec ConvexReg::prox_constrained(const Vec& v, double c, double radius) const {
  if (!(radius > 0.0))
    throw std::invalid_argument("prox_constrained: radius must be positive");
  if (std::isinf(radius)) return prox(v, c);
  Vec w = prox(v, c);
  if (value(w) <= radius) return w;
  // value(prox(v, c+theta)) is continuous and nonincreasing in theta, and
  // reaches 0 once c+theta >= dual_norm(v).
  double lo = 0.0;
  double hi = std::max(dual_norm(v) - c, 1e-12);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    prox_inplace(v, c + mid, w);
    if (value(w) > radius)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-10) break;
  }
  prox_inplace(v, c + hi, w);
  double r = value(w);
  if (r > radius * (1.0 + 1e-9))
    throw std::runtime_error(
        "prox_constrained: bisection did not reach feasibility, residual " +
        std::to_string(r - radius));
  return w;
}

double ConvexReg::dual_norm(const Vec& u) const {
  if (kind_ == Kind::l1) return u.lpNorm<Eigen::Infinity>();
  double m = 0.0;
  for (const auto& g : groups_) {
    double sq = 0.0;
    for (int j : g) sq += u[j] * u[j];
    m = std::max(m, std::sqrt(sq));
  }
  return m;
}

double scad_value(double t, double lambda, double zeta) {
  double a = std::abs(t);
  if (a <= lambda) return lambda * a;
  if (a <= zeta * lambda)
    return -(a * a - 2.0 * zeta * lambda * a + lambda * lambda) /
           (2.0 * (zeta - 1.0));
  return (zeta + 1.0) * lambda * lambda / 2.0;
}

namespace {

// Shared scalar machinery: minimize 1/2(w-u)^2 + a*SCAD(w) + b/2 w^2 over
// w >= 0 for u >= 0. Candidate stationary points of each SCAD regime plus
// the regime breakpoints; ties go to the smaller w.
double scad_family_prox_nonneg(double u, double a, double b, double lambda,
                               double zeta) {
  double cands[6];
  int m = 0;
  // |w| <= lambda: derivative (1+b)w - u + a*lambda
  cands[m++] = std::clamp((u - a * lambda) / (1.0 + b), 0.0, lambda);
  // lambda < |w| <= zeta*lambda: quadratic coefficient 1 + b - a/(zeta-1)
  double den = 1.0 + b - a / (zeta - 1.0);
  if (den > 0.0) {
    double num = u - a * zeta * lambda / (zeta - 1.0);
    cands[m++] = std::clamp(num / den, lambda, zeta * lambda);
  }
  cands[m++] = lambda;
  cands[m++] = zeta * lambda;
  // |w| > zeta*lambda: SCAD constant
  cands[m++] = std::max(u / (1.0 + b), zeta * lambda);
  cands[m++] = 0.0;

  double best_w = 0.0;
  double best_h = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    double w = cands[k];
    double h = 0.5 * (w - u) * (w - u) + a * scad_value(w, lambda, zeta) +
               0.5 * b * w * w;
    if (h < best_h - 1e-15 * (1.0 + std::abs(best_h)) ||
        (std::abs(h - best_h) <= 1e-15 * (1.0 + std::abs(best_h)) &&
         w < best_w)) {
      best_h = h;
      best_w = w;
    }
  }
  return best_w;
}

}  // namespace

double scad_prox_scalar(double v, double c, double lambda, double zeta) {
  if (c < 0.0) throw std::invalid_argument("scad_prox: negative threshold");
  double s = (v < 0.0) ? -1.0 : 1.0;
  return s * scad_family_prox_nonneg(std::abs(v), c, 0.0, lambda, zeta);
}

double dlambda_prox_scalar(double v, double c, double lambda, double zeta) {
  if (c < 0.0) throw std::invalid_argument("dlambda_prox: negative threshold");
  double a = c / lambda;
  double b = a / (zeta - 1.0);  // c*mu/lambda
  double s = (v < 0.0) ? -1.0 : 1.0;
  return s * scad_family_prox_nonneg(std::abs(v), a, b, lambda, zeta);
}

ScadReg::ScadReg(double lambda, double zeta) : lambda_(lambda), zeta_(zeta) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ScadReg: lambda <= 0");
  if (!(zeta > 2.0)) throw std::invalid_argument("ScadReg: zeta must exceed 2");
}

double ScadReg::value(const Vec& w) const {
  double s = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j)
    s += scad_value(w[j], lambda_, zeta_);
  return s;
}

double ScadReg::convexified_value(const Vec& w) const {
  double half_mu = 0.5 * mu();
  double s = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j)
    s += scad_value(w[j], lambda_, zeta_) + half_mu * w[j] * w[j];
  return s / lambda_;
}

Vec ScadReg::prox(const Vec& v, double c) const {
  Vec out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j)
    out[j] = scad_prox_scalar(v[j], c, lambda_, zeta_);
  return out;
}

Vec ScadReg::convexified_prox(const Vec& v, double c) const {
  Vec out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j)
    out[j] = dlambda_prox_scalar(v[j], c, lambda_, zeta_);
  return out;
}

Vec ScadReg::convexified_prox_constrained(const Vec& v, double c,
                                          double radius) const {
  if (!(radius > 0.0))
    throw std::invalid_argument("prox_constrained: radius must be positive");
  if (std::isinf(radius)) return convexified_prox(v, c);
  Vec w = convexified_prox(v, c);
  if (convexified_value(w) <= radius) return w;
  double lo = 0.0, hi = 1.0;
  while (convexified_value(convexified_prox(v, c + hi)) > radius && hi < 1e12)
    hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (convexified_value(convexified_prox(v, c + mid)) > radius)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-10) break;
  }
  w = convexified_prox(v, c + hi);
  double r = convexified_value(w);
  if (r > radius * (1.0 + 1e-9))
    throw std::runtime_error(
        "convexified_prox_constrained: bisection residual " +
        std::to_string(r - radius));
  return w;
}

double penalty_value(const Regularizer& r, double lambda, const Vec& w) {
  if (const auto* cr = std::get_if<ConvexReg>(&r)) return lambda * cr->value(w);
  return std::get<ScadReg>(r).value(w);
}

AssumptionReport validate_assumptions(const std::function<double(double)>& d,
                                      double lambda, double mu,
                                      std::span<const double> grid) {
  AssumptionReport rep;
  rep.mu = mu;
  rep.symmetric = true;
  rep.nondecreasing = true;
  rep.ratio_nonincreasing = true;
  rep.convexified_convex = true;
  const double tol = 1e-9;

  double prev_val = 0.0, prev_t = 0.0, prev_ratio =
      std::numeric_limits<double>::infinity();
  bool first = true;
  for (double t : grid) {
    if (!(t > 0.0)) throw std::invalid_argument("grid must be positive");
    double dv = d(t);
    if (std::abs(dv - d(-t)) > tol * (1.0 + std::abs(dv)))
      rep.symmetric = false;
    if (!first && dv < prev_val - tol) rep.nondecreasing = false;
    double ratio = dv / t;
    if (ratio > prev_ratio + tol) rep.ratio_nonincreasing = false;
    // midpoint convexity of the convexified scalar penalty
    if (!first) {
      auto conv = [&](double x) { return (d(x) + 0.5 * mu * x * x) / lambda; };
      double mid = 0.5 * (prev_t + t);
      if (conv(mid) > 0.5 * (conv(prev_t) + conv(t)) + 1e-10)
        rep.convexified_convex = false;
    }
    prev_val = dv;
    prev_ratio = ratio;
    prev_t = t;
    first = false;
  }

  const double eps = 1e-8;
  rep.limit_slope = (d(eps) - d(0.0)) / eps;
  rep.slope_constant = rep.limit_slope / lambda;
  rep.limit_slope_ok = rep.limit_slope > 0.0 && std::isfinite(rep.limit_slope);
  return rep;
}

AssumptionReport validate_assumptions(const ScadReg& r,
                                      std::span<const double> grid) {
  double lambda = r.lambda(), zeta = r.zeta();
  auto d = [lambda, zeta](double t) { return scad_value(t, lambda, zeta); };
  AssumptionReport rep = validate_assumptions(d, lambda, r.mu(), grid);
  rep.limit_slope_ok =
      std::abs(rep.limit_slope - lambda * ScadReg::slope_constant()) <
      1e-5 * (1.0 + lambda);
  return rep;
}

}  // namespace rsdca
