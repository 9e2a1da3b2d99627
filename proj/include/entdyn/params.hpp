// params.hpp — physical parameters of the atom + Lorentzian-reservoir model.
#pragma once

namespace entdyn {

// Coupling regime, decided by the sign of 4W^2 - lambda^2.
enum class Regime { Strong, Weak, Critical };

// Parameters of one two-level atom coupled resonantly to a reservoir with
// Lorentzian spectral density J(w) = W^2 lambda / (pi [(w - omega0)^2 + lambda^2]),
// plus the initial weight alpha of the joint two-atom state
// alpha|gg> + beta|ee> with beta = sqrt(1 - alpha^2).
struct PhysicalParams {
  double omega0 = 0.0;    // atomic transition frequency (pure phase in all observables)
  double coupling = 1.0;  // transition strength W
  double width = 0.1;     // Lorentzian half-width lambda; 1/lambda = reservoir correlation time
  double alpha = 0.5;     // weight of |gg>, in [0, 1]

  // Convenience constructor in units W = 1, omega0 = 0.
  static PhysicalParams from_ratio(double lambda_over_w, double alpha);

  // Throws std::invalid_argument on W <= 0, lambda <= 0, alpha outside [0, 1],
  // or non-finite fields.
  void validate() const;

  double beta() const;
  double lambda_over_w() const { return width / coupling; }

  Regime regime() const;

  // d = sqrt(4 W^2 - lambda^2); only defined in the strong-coupling regime,
  // throws std::domain_error otherwise.
  double mode_splitting() const;

  // kappa = sqrt(lambda^2 - 4 W^2); weak coupling only.
  double decay_splitting() const;

  // 2*pi/d, the period of the excited-population oscillation (strong coupling).
  double oscillation_period() const;

  // Relative tolerance on |4W^2 - lambda^2| below which the degenerate
  // lambda = 2W branch is used (avoids cancellation in sin(dt/2)/d).
  static constexpr double degeneracy_tolerance = 1e-9;
};

Regime coupling_regime(const PhysicalParams& params);

}  // namespace entdyn
