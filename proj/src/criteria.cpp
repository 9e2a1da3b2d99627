#include "entdyn/criteria.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "entdyn/entanglement.hpp"

namespace entdyn {

namespace {

using std::numbers::pi;

double require_strong(const PhysicalParams& params) {
  params.validate();
  if (params.regime() != Regime::Strong) {
    throw std::domain_error("criteria require strong coupling (lambda < 2W)");
  }
  return params.mode_splitting();
}

constexpr double kNearIntegerTol = 1e-9;
constexpr double kSimultaneousTol = 1e-12;

bool near_integer(double x) { return std::abs(x - std::round(x)) < kNearIntegerTol; }

}  // namespace

double revival_threshold(const PhysicalParams& params, int n) {
  const double d = require_strong(params);
  if (n < 1) throw std::invalid_argument("oscillation index n must be at least 1");
  const double q = 1.0 - std::exp(-2.0 * n * pi * params.width / d);
  return q / std::sqrt(1.0 + q * q);
}

double esd_threshold(const PhysicalParams& params, int n) {
  const double d = require_strong(params);
  if (n < 1) throw std::invalid_argument("oscillation index n must be at least 1");
  const double p = std::exp(-2.0 * n * pi * params.width / d);
  return p / std::sqrt(1.0 + p * p);
}

bool revival_occurs(const PhysicalParams& params) {
  return params.alpha > revival_threshold(params, 1);
}

bool esd_occurs(const PhysicalParams& params) {
  return params.alpha < esd_threshold(params, 1);
}

RevivalCount count_revivals(const PhysicalParams& params) {
  const double d = require_strong(params);
  const double beta = params.beta();
  if (params.alpha >= beta) return {.infinite = true, .value = -1};
  const double x = d / (2.0 * pi * params.width) * std::log(beta / (beta - params.alpha));
  return {.infinite = false, .value = static_cast<long long>(std::floor(x))};
}

long long count_esd(const PhysicalParams& params) {
  const double d = require_strong(params);
  if (params.alpha == 0.0) {
    throw std::invalid_argument("count_esd: alpha must be positive (beta/alpha undefined at 0)");
  }
  const double beta = params.beta();
  if (params.alpha >= beta) return 0;
  const double x = d / (2.0 * pi * params.width) * std::log(beta / params.alpha);
  return static_cast<long long>(std::floor(x));
}

double revival_interval(const PhysicalParams& params) {
  return 2.0 * pi / require_strong(params);
}

EventOrdering classify_ordering(const PhysicalParams& params) {
  require_strong(params);
  if (!revival_occurs(params) || !esd_occurs(params)) return EventOrdering::NotApplicable;
  const double gap = 2.0 * params.alpha - params.beta();
  if (std::abs(gap) <= kSimultaneousTol) return EventOrdering::Simultaneous;
  return gap > 0.0 ? EventOrdering::Before : EventOrdering::After;
}

const char* ordering_name(EventOrdering ordering) {
  switch (ordering) {
    case EventOrdering::Before: return "before";
    case EventOrdering::Simultaneous: return "simultaneous";
    case EventOrdering::After: return "after";
    case EventOrdering::NotApplicable: return "not-applicable";
  }
  return "?";
}

EventScan count_events_numeric(const PhysicalParams& params, double t_max,
                               long long samples) {
  const double d = require_strong(params);
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (std::exp(-params.width * t_max) >= 1e-6) {
    throw std::invalid_argument("t_max too small: envelope e^{-lambda t} must fall below 1e-6");
  }
  const double periods = t_max * d / (2.0 * pi);
  if (samples < static_cast<long long>(std::ceil(200.0 * periods))) {
    throw std::invalid_argument("under-resolved grid: need at least 200 samples per period");
  }

  EventScan scan;
  scan.grid_step = t_max / static_cast<double>(samples - 1);

  std::vector<double> atoms(static_cast<size_t>(samples));
  std::vector<double> reservoirs(static_cast<size_t>(samples));
  std::vector<double> times(static_cast<size_t>(samples));
  for (long long i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) * scan.grid_step;
    times[static_cast<size_t>(i)] = t;
    atoms[static_cast<size_t>(i)] = concurrence_atoms_closed(params, t);
    reservoirs[static_cast<size_t>(i)] = concurrence_reservoirs_closed(params, t);
  }

  const double eps = EventScan::eps;
  const long long n = samples;

  // Atoms: count re-entries after a zero plateau (>= 2 samples) that follows
  // a live stretch. Re-entry must happen inside the window.
  {
    bool seen_alive = false;
    long long i = 0;
    while (i < n) {
      if (atoms[static_cast<size_t>(i)] >= eps) {
        seen_alive = true;
        ++i;
        continue;
      }
      long long j = i;
      while (j < n && atoms[static_cast<size_t>(j)] < eps) ++j;
      if (seen_alive && (j - i) >= 2 && j < n) {
        scan.revival_times.push_back(times[static_cast<size_t>(j)]);
      }
      i = j;
    }
  }

  // Reservoirs: count plateau entries strictly after first birth, with
  // re-entry inside the window.
  {
    bool born = false;
    long long i = 0;
    while (i < n) {
      if (reservoirs[static_cast<size_t>(i)] >= eps) {
        if (!born) scan.first_birth_time = times[static_cast<size_t>(i)];
        born = true;
        ++i;
        continue;
      }
      long long j = i;
      while (j < n && reservoirs[static_cast<size_t>(j)] < eps) ++j;
      if (born && (j - i) >= 2 && j < n) {
        scan.death_times.push_back(times[static_cast<size_t>(i)]);
      }
      i = j;
    }
  }

  return scan;
}

CriteriaReport criteria_report(const PhysicalParams& params) {
  const double d = require_strong(params);
  if (params.alpha == 0.0) {
    throw std::invalid_argument("criteria_report: alpha must be positive");
  }

  CriteriaReport report;
  report.lambda_over_w = params.lambda_over_w();
  report.alpha = params.alpha;
  report.beta = params.beta();
  report.d_over_w = d / params.coupling;
  report.revival_threshold_n1 = revival_threshold(params, 1);
  report.esd_threshold_n1 = esd_threshold(params, 1);
  report.revival_occurs = revival_occurs(params);
  report.esd_occurs = esd_occurs(params);
  report.n_a = count_revivals(params);
  report.n_r = count_esd(params);
  report.t_r_in_inv_w = 2.0 * pi * params.coupling / d;
  report.ordering = classify_ordering(params);

  const double k = d / (2.0 * pi * params.width);
  if (!report.n_a.infinite) {
    const double x = k * std::log(report.beta / (report.beta - params.alpha));
    if (near_integer(x)) {
      report.warnings.push_back("n_a floor argument within 1e-9 of an integer");
    }
  }
  if (params.alpha < report.beta) {
    const double x = k * std::log(report.beta / params.alpha);
    if (near_integer(x)) {
      report.warnings.push_back("n_r floor argument within 1e-9 of an integer");
    }
  }
  return report;
}

bool near_count_boundary(const PhysicalParams& params, double margin) {
  require_strong(params);
  const double alpha = params.alpha;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (std::abs(alpha - inv_sqrt2) <= margin) return true;
  // 2 alpha = beta at alpha = 1/sqrt(5).
  if (std::abs(alpha - 1.0 / std::sqrt(5.0)) <= margin) return true;
  for (int n = 1; n <= 64; ++n) {
    const double rth = revival_threshold(params, n);
    const double eth = esd_threshold(params, n);
    if (std::abs(alpha - rth) <= margin) return true;
    if (std::abs(alpha - eth) <= margin) return true;
    // Thresholds converge monotonically; once both are outside reach, stop.
    if (rth > inv_sqrt2 - margin / 16.0 && eth < margin / 16.0) break;
  }
  return false;
}

}  // namespace entdyn
