#include "rsdca/sdca.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace rsdca {

SdcaState sdca_init(const SplitProblem& sp, InitPolicy policy, uint64_t seed) {
  const int n = sp.num_samples();
  const int p = sp.dim();
  SdcaState s;
  s.rng = Philox(seed);
  s.alpha.assign(n, 0.0);
  s.a_aug = Vec::Zero(p);
  s.v = Vec::Zero(p);
  s.w = sp.composite().prox_step(s.v);
  if (policy == InitPolicy::gradient) {
    // a_i^0 = -grad phi_i(w^0)
    Vec sum = Vec::Zero(p);
    for (int i = 0; i < n; ++i) {
      double c = -sp.component_grad_coeff(i, s.w);
      s.alpha[i] = c;
      sp.spec().data->row(i).add_scaled(c, sum);
    }
    if (sp.has_augmentation()) {
      s.a_aug = sp.augmentation_strength() * s.w;
      sum += s.a_aug;
    }
    s.v = sum / (sp.lambda_tilde() * sp.num_components());
    s.w = sp.composite().prox_step(s.v);
  }
  return s;
}

void sdca_step(SdcaState& s, const SplitProblem& sp, double eta) {
  const int n = sp.num_samples();
  const int N = sp.num_components();
  const int i = sp.sample_component(s.rng);
  const double q = sp.sampling_probs()[i];
  const double eta_i = eta / (q * N);
  const double beta = eta_i * sp.lambda_tilde() * N;
  if (i < n) {
    const double c = sp.component_grad_coeff(i, s.w);
    const double m = c + s.alpha[i];
    s.alpha[i] -= beta * m;
    sp.spec().data->row(i).add_scaled(-eta_i * m, s.v);
  } else {
    // augmentation component: grad phi_N(w) = -strength * w
    Vec m = s.a_aug - sp.augmentation_strength() * s.w;
    s.a_aug -= beta * m;
    s.v -= eta_i * m;
  }
  s.w = sp.composite().prox_step(s.v);
  ++s.t;
}

double aggregate_residual(const SdcaState& s, const SplitProblem& sp) {
  const int n = sp.num_samples();
  Vec sum = Vec::Zero(sp.dim());
  for (int i = 0; i < n; ++i)
    sp.spec().data->row(i).add_scaled(s.alpha[i], sum);
  if (sp.has_augmentation()) sum += s.a_aug;
  sum /= sp.lambda_tilde() * sp.num_components();
  return (s.v - sum).norm();
}

SdcaResult sdca_run(const SplitProblem& sp, const SdcaOptions& opt,
                    const double* reference_value,
                    const EpochCallback& on_epoch) {
  if (opt.epochs < 1) throw std::invalid_argument("sdca_run: epochs < 1");
  const double eta = (opt.eta > 0.0) ? opt.eta : sp.default_step_size();
  const int N = sp.num_components();

  SdcaResult res;
  res.state = sdca_init(sp, opt.init, opt.seed);
  SdcaState& s = res.state;

  auto t0 = std::chrono::steady_clock::now();
  for (int ep = 1; ep <= opt.epochs; ++ep) {
    for (int k = 0; k < N; ++k) sdca_step(s, sp, eta);

    if (!s.w.allFinite() || !s.v.allFinite()) {
      res.trace.status = RunStatus::diverged;
      break;
    }
    TraceRow row;
    row.epoch = ep;
    row.objective = sp.original_objective(s.w);
    if (!std::isfinite(row.objective)) {
      res.trace.status = RunStatus::diverged;
      break;
    }
    if (reference_value) row.gap = row.objective - *reference_value;
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool keep_going = true;
    if (on_epoch) keep_going = on_epoch(s, ep, row);
    res.trace.append(std::move(row));
    res.trace.last_finite_epoch = ep;
    if (!keep_going) break;
    if (reference_value && opt.gap_tolerance > 0.0 &&
        res.trace.rows.back().gap &&
        *res.trace.rows.back().gap <= opt.gap_tolerance)
      break;
  }
  res.w = s.w;
  return res;
}

}  // namespace rsdca
