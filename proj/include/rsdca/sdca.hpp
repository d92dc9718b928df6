#pragma once

#include <cstdint>
#include <functional>

#include "rsdca/rng.hpp"
#include "rsdca/splitting.hpp"
#include "rsdca/trace.hpp"

namespace rsdca {

enum class InitPolicy { zero, gradient };

// Solver state. Pseudo-duals for the sample components are stored as scalar
// coefficients (a_i = alpha_i * x_i, preserved by the update); the
// augmentation slot, whose gradient is dense, gets a dense vector.
struct SdcaState {
  std::vector<double> alpha;  // one scalar per sample component
  Vec a_aug;                  // augmentation pseudo-dual (split mode)
  Vec v;
  Vec w;
  int64_t t = 0;
  Philox rng{0};
};

SdcaState sdca_init(const SplitProblem& sp, InitPolicy policy, uint64_t seed);

// One stochastic update: draw a component from Q, move its pseudo-dual
// toward the negated gradient, shift the aggregate v accordingly and
// recompute w through the proximal step.
void sdca_step(SdcaState& s, const SplitProblem& sp, double eta);

// || v - (1/(lambda_tilde N)) sum a_i || recomputed from scratch.
double aggregate_residual(const SdcaState& s, const SplitProblem& sp);

struct SdcaOptions {
  int epochs = 100;
  double eta = 0.0;  // 0 -> SplitProblem default
  InitPolicy init = InitPolicy::zero;
  uint64_t seed = 1;
  bool record_potentials = false;
  // stop once objective gap against reference_value falls below this (only
  // when a reference value is supplied)
  double gap_tolerance = 0.0;
};

struct SdcaResult {
  Vec w;
  Trace trace;
  SdcaState state;
};

// Epoch callback: called after each epoch with the live state; may populate
// potentials into the row. Returning false stops the run.
using EpochCallback =
    std::function<bool(const SdcaState&, int epoch, TraceRow& row)>;

// Runs epochs of N steps each, recording the trace at epoch boundaries.
// Deterministic given the seed. Divergence (non-finite iterates) flags the
// trace and stops; the last finite epoch is recorded.
SdcaResult sdca_run(const SplitProblem& sp, const SdcaOptions& opt,
                    const double* reference_value = nullptr,
                    const EpochCallback& on_epoch = nullptr);

}  // namespace rsdca
