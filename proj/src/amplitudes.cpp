#include "entdyn/amplitudes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entdyn {

namespace {

using std::numbers::pi;
using Cplx = std::complex<double>;
constexpr Cplx kI{0.0, 1.0};

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
}

// c0(t) = c1(t) e^{i omega0 t}: the rotating-frame amplitude, real-valued.
double rotating_frame_amplitude(const PhysicalParams& p, double t) {
  const double lam = p.width;
  switch (p.regime()) {
    case Regime::Strong: {
      const double d = p.mode_splitting();
      return std::exp(-lam * t / 2.0) *
             (std::cos(d * t / 2.0) + (lam / d) * std::sin(d * t / 2.0));
    }
    case Regime::Weak: {
      // cosh/sinh folded into the envelope so large kappa*t cannot overflow.
      const double kappa = p.decay_splitting();
      const double em = std::exp(-(lam - kappa) * t / 2.0);
      const double ep = std::exp(-(lam + kappa) * t / 2.0);
      return 0.5 * ((1.0 + lam / kappa) * em + (1.0 - lam / kappa) * ep);
    }
    case Regime::Critical:
      return std::exp(-lam * t / 2.0) * (1.0 + lam * t / 2.0);
  }
  throw std::logic_error("unreachable regime");
}

Cplx rotating_frame_pseudomode(const PhysicalParams& p, double t) {
  const double lam = p.width;
  const double w = p.coupling;
  switch (p.regime()) {
    case Regime::Strong: {
      const double d = p.mode_splitting();
      return -2.0 * kI * (w / d) * std::exp(-lam * t / 2.0) * std::sin(d * t / 2.0);
    }
    case Regime::Weak: {
      const double kappa = p.decay_splitting();
      const double em = std::exp(-(lam - kappa) * t / 2.0);
      const double ep = std::exp(-(lam + kappa) * t / 2.0);
      return -kI * (w / kappa) * (em - ep);
    }
    case Regime::Critical:
      return -kI * w * t * std::exp(-lam * t / 2.0);
  }
  throw std::logic_error("unreachable regime");
}

void validate_grid(const PhysicalParams& p, double t_end, double step) {
  p.validate();
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (p.regime() == Regime::Strong) {
    const double max_step = p.oscillation_period() / 50.0;
    if (step > max_step) {
      throw std::invalid_argument("step too coarse: must resolve the oscillation period"
                                  " (step <= (2 pi / d) / 50)");
    }
  }
}

long long grid_steps(double t_end, double step) {
  return static_cast<long long>(std::ceil(t_end / step - 1e-9));
}

}  // namespace

std::complex<double> excited_amplitude(const PhysicalParams& params, double t) {
  params.validate();
  require_time(t);
  const double c0 = rotating_frame_amplitude(params, t);
  return c0 * std::exp(-kI * params.omega0 * t);
}

double reservoir_amplitude(const PhysicalParams& params, double t) {
  const double c1sq = std::norm(excited_amplitude(params, t));
  return std::sqrt(std::max(0.0, 1.0 - c1sq));
}

std::complex<double> pseudomode_amplitude(const PhysicalParams& params, double t) {
  params.validate();
  require_time(t);
  return rotating_frame_pseudomode(params, t);
}

AmplitudeState amplitudes_at(const PhysicalParams& params, double t) {
  AmplitudeState s;
  s.t = t;
  s.c1 = excited_amplitude(params, t);
  s.c2 = std::sqrt(std::max(0.0, 1.0 - std::norm(s.c1)));
  s.b = pseudomode_amplitude(params, t);
  return s;
}

std::vector<AmplitudeState> integrate_pseudomode(const PhysicalParams& params,
                                                 double t_end, double step) {
  validate_grid(params, t_end, step);
  const double lam = params.width;
  const double w = params.coupling;
  const long long n = grid_steps(t_end, step);

  const auto deriv = [lam, w](Cplx c0, Cplx b, Cplx& dc0, Cplx& db) {
    dc0 = -kI * w * b;
    db = -lam * b - kI * w * c0;
  };

  std::vector<AmplitudeState> out;
  out.reserve(static_cast<size_t>(n) + 1);

  Cplx c0{1.0, 0.0};
  Cplx b{0.0, 0.0};
  const auto emit = [&](long long k) {
    AmplitudeState s;
    s.t = static_cast<double>(k) * step;
    s.c1 = c0 * std::exp(-kI * params.omega0 * s.t);
    s.c2 = std::sqrt(std::max(0.0, 1.0 - std::norm(s.c1)));
    s.b = b;
    out.push_back(s);
  };
  emit(0);

  for (long long k = 0; k < n; ++k) {
    Cplx k1c, k1b, k2c, k2b, k3c, k3b, k4c, k4b;
    deriv(c0, b, k1c, k1b);
    deriv(c0 + 0.5 * step * k1c, b + 0.5 * step * k1b, k2c, k2b);
    deriv(c0 + 0.5 * step * k2c, b + 0.5 * step * k2b, k3c, k3b);
    deriv(c0 + step * k3c, b + step * k3b, k4c, k4b);
    c0 += (step / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
    b += (step / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    emit(k + 1);
  }
  return out;
}

std::vector<std::complex<double>> integrate_memory_kernel(const PhysicalParams& params,
                                                          double t_end, double step) {
  validate_grid(params, t_end, step);
  const double lam = params.width;
  const double w2 = params.coupling * params.coupling;
  const long long n = grid_steps(t_end, step);

  std::vector<double> decay(static_cast<size_t>(n) + 1);
  for (long long m = 0; m <= n; ++m) decay[static_cast<size_t>(m)] = std::exp(-lam * step * m);

  std::vector<Cplx> c(static_cast<size_t>(n) + 1);
  c[0] = {1.0, 0.0};

  // Trapezoidal quadrature of the full retained history at step k; the last
  // node value can be overridden for the corrector stage.
  const auto history = [&](long long k, Cplx last) -> Cplx {
    if (k == 0) return {};
    Cplx acc = 0.5 * c[0] * decay[static_cast<size_t>(k)];
    for (long long j = 1; j < k; ++j) acc += c[static_cast<size_t>(j)] * decay[static_cast<size_t>(k - j)];
    acc += 0.5 * last;
    return -w2 * step * acc;
  };

  for (long long k = 0; k < n; ++k) {
    const Cplx gk = history(k, c[static_cast<size_t>(k)]);
    const Cplx predicted = c[static_cast<size_t>(k)] + step * gk;
    const Cplx gk1 = history(k + 1, predicted);
    c[static_cast<size_t>(k) + 1] = c[static_cast<size_t>(k)] + 0.5 * step * (gk + gk1);
  }
  return c;
}

QuasimodePopulations quasimode_populations(const PhysicalParams& params, double t) {
  params.validate();
  require_time(t);
  QuasimodePopulations q;
  q.t = t;
  q.pa = std::norm(excited_amplitude(params, t));
  q.pm = std::norm(pseudomode_amplitude(params, t));
  double pr = 1.0 - q.pa - q.pm;
  if (pr < -1e-12) throw std::runtime_error("quasimode populations exceed unity");
  q.pr = std::max(0.0, pr);
  return q;
}

std::vector<PopulationExtremum> excited_population_extrema(const PhysicalParams& params,
                                                           int n_max) {
  params.validate();
  if (params.regime() != Regime::Strong) {
    throw std::domain_error("population extrema require strong coupling (no oscillation otherwise)");
  }
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");

  const double d = params.mode_splitting();
  const double lam = params.width;
  const double theta = std::atan(d / lam);  // in (0, pi/2)

  std::vector<PopulationExtremum> out;
  out.reserve(2 * static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double t_valley = (2.0 * n * pi - 2.0 * theta) / d;
    out.push_back({t_valley, ExtremumKind::Valley,
                   std::norm(excited_amplitude(params, t_valley))});
    const double t_peak = 2.0 * n * pi / d;
    out.push_back({t_peak, ExtremumKind::Peak, std::exp(-2.0 * n * pi * lam / d)});
  }
  return out;
}

}  // namespace entdyn
