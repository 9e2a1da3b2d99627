#include "entdyn/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entdyn {

PhysicalParams PhysicalParams::from_ratio(double lambda_over_w, double alpha) {
  PhysicalParams p;
  p.omega0 = 0.0;
  p.coupling = 1.0;
  p.width = lambda_over_w;
  p.alpha = alpha;
  p.validate();
  return p;
}

void PhysicalParams::validate() const {
  if (!std::isfinite(omega0) || !std::isfinite(coupling) || !std::isfinite(width) ||
      !std::isfinite(alpha)) {
    throw std::invalid_argument("PhysicalParams: fields must be finite");
  }
  if (coupling <= 0.0) {
    throw std::invalid_argument("PhysicalParams: transition strength W must be positive");
  }
  if (width <= 0.0) {
    throw std::invalid_argument("PhysicalParams: Lorentzian width lambda must be positive");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("PhysicalParams: alpha must lie in [0, 1]");
  }
}

double PhysicalParams::beta() const {
  return std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
}

Regime PhysicalParams::regime() const {
  validate();
  const double w2 = coupling * coupling;
  const double disc = 4.0 * w2 - width * width;
  if (std::abs(disc) < degeneracy_tolerance * w2) return Regime::Critical;
  return disc > 0.0 ? Regime::Strong : Regime::Weak;
}

double PhysicalParams::mode_splitting() const {
  if (regime() != Regime::Strong) {
    throw std::domain_error("mode_splitting requires strong coupling (lambda < 2W)");
  }
  return std::sqrt(4.0 * coupling * coupling - width * width);
}

double PhysicalParams::decay_splitting() const {
  if (regime() != Regime::Weak) {
    throw std::domain_error("decay_splitting requires weak coupling (lambda > 2W)");
  }
  return std::sqrt(width * width - 4.0 * coupling * coupling);
}

double PhysicalParams::oscillation_period() const {
  return 2.0 * std::numbers::pi / mode_splitting();
}

Regime coupling_regime(const PhysicalParams& params) { return params.regime(); }

}  // namespace entdyn
