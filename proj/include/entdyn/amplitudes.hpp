// amplitudes.hpp — single-body dynamics: closed forms, pseudomode ODE and
// memory-kernel integrators, quasimode populations, population extrema.
#pragma once

#include <complex>
#include <vector>

#include "entdyn/params.hpp"

namespace entdyn {

// Single-body amplitudes at one instant. c1 multiplies |e>|0>_r, c2 (real,
// nonnegative by phase convention) multiplies |g>|1>_r, b is the pseudomode
// amplitude in the rotating frame.
struct AmplitudeState {
  double t = 0.0;
  std::complex<double> c1{1.0, 0.0};
  double c2 = 0.0;
  std::complex<double> b{0.0, 0.0};
};

// Populations in the quasimode picture: atom, discrete quasimode (= the
// pseudomode), continuum quasimodes. pa + pm + pr = 1.
struct QuasimodePopulations {
  double t = 0.0;
  double pa = 1.0;
  double pm = 0.0;
  double pr = 0.0;
};

enum class ExtremumKind { Valley, Peak };

struct PopulationExtremum {
  double t;
  ExtremumKind kind;
  double value;  // |c1|^2 at the extremum
};

// c1(t) = e^{-(i omega0 + lambda/2) t} [cos(dt/2) + (lambda/d) sin(dt/2)],
// continued with hyperbolic functions for lambda > 2W and with the
// lambda = 2W limit (1 + lambda t / 2) near degeneracy.
std::complex<double> excited_amplitude(const PhysicalParams& params, double t);

// c2(t) = sqrt(1 - |c1(t)|^2), fixed real nonnegative.
double reservoir_amplitude(const PhysicalParams& params, double t);

// b(t) = -2i (W/d) e^{-lambda t/2} sin(dt/2) and its continuations.
std::complex<double> pseudomode_amplitude(const PhysicalParams& params, double t);

AmplitudeState amplitudes_at(const PhysicalParams& params, double t);

// Fixed-step RK4 on the pair c0' = -iW b, b' = -lambda b - iW c0 from (1, 0);
// samples at t_k = k*step up to t_end. In strong coupling the step must
// resolve the oscillation: step <= (2 pi / d) / 50.
std::vector<AmplitudeState> integrate_pseudomode(const PhysicalParams& params,
                                                 double t_end, double step);

// Direct Volterra integration of c0'(t) = -int_0^t c0(t1) W^2 e^{-lambda (t-t1)} dt1
// (trapezoidal history inside a Heun predictor-corrector, O(N^2) total).
// Returns c0 samples on the same grid convention as integrate_pseudomode.
std::vector<std::complex<double>> integrate_memory_kernel(const PhysicalParams& params,
                                                          double t_end, double step);

// pa = |c1|^2, pm = |b|^2, pr = 1 - pa - pm (tiny negatives clamped to 0).
QuasimodePopulations quasimode_populations(const PhysicalParams& params, double t);

// Extrema of |c1(t)|^2 in strong coupling: valleys at dt/2 + theta = n pi and
// peaks at t_n = 2 n pi / d with value e^{-2 n pi lambda / d},
// theta = arctan(d/lambda). Returns valley/peak pairs for n = 1..n_max,
// sorted by time.
std::vector<PopulationExtremum> excited_population_extrema(const PhysicalParams& params,
                                                           int n_max);

}  // namespace entdyn
