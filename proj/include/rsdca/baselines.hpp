#pragma once

#include <cstdint>

#include "rsdca/splitting.hpp"
#include "rsdca/trace.hpp"

namespace rsdca {

enum class BaselineKind { prox_gd, prox_sgd, rda, prox_svrg, saga, prox_sag };

const char* baseline_name(BaselineKind k);

struct BaselineConfig {
  BaselineKind kind = BaselineKind::prox_gd;
  // Fixed step for GD/SVRG/SAGA/SAG, eta_0 for SGD (eta_k = eta_0/sqrt(k)),
  // beta_0 for RDA (beta_k = beta_0*sqrt(k)).
  double step = 0.1;
  int inner_m = 0;  // SVRG inner loop length; 0 -> 2n
  int epochs = 100;
  uint64_t seed = 1;
};

struct BaselineResult {
  Vec w;
  Trace trace;
};

// Gradient of the smooth part (1/n) sum f_i - correction/2 ||w||^2.
Vec smooth_gradient(const ProblemSpec& spec, const Vec& w);

// Proximal step of the problem's own regularizer: prox of step*lambda*g for
// convex g (radius-constrained if finite), the nonconvex SCAD prox at
// threshold step otherwise.
Vec original_prox(const ProblemSpec& spec, const Vec& u, double step);

// All baselines minimize the original objective, epoch-indexing the trace by
// dataset passes (SVRG's snapshot counts as one extra pass).
BaselineResult prox_gd_run(const ProblemSpec& spec, const BaselineConfig& cfg,
                           const double* reference_value = nullptr);
BaselineResult prox_sgd_run(const ProblemSpec& spec, const BaselineConfig& cfg,
                            const double* reference_value = nullptr);
BaselineResult rda_run(const ProblemSpec& spec, const BaselineConfig& cfg,
                       const double* reference_value = nullptr);
BaselineResult prox_svrg_run(const ProblemSpec& spec,
                             const BaselineConfig& cfg,
                             const double* reference_value = nullptr);
BaselineResult saga_run(const ProblemSpec& spec, const BaselineConfig& cfg,
                        const double* reference_value = nullptr);
BaselineResult prox_sag_run(const ProblemSpec& spec, const BaselineConfig& cfg,
                            const double* reference_value = nullptr);

BaselineResult run_baseline(const ProblemSpec& spec, const BaselineConfig& cfg,
                            const double* reference_value = nullptr);

}  // namespace rsdca
