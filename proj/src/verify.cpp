#include "entdyn/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "entdyn/amplitudes.hpp"
#include "entdyn/criteria.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/params.hpp"
#include "entdyn/states.hpp"

namespace entdyn::verify {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string suite_name(const char* base, double lw) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s (lambda/W=%g)", base, lw);
  return buf;
}

SuiteResult integrator_suite(double lw) {
  SuiteResult r{suite_name("amplitude-integrators", lw), SuiteStatus::Pass, ""};
  const PhysicalParams p = PhysicalParams::from_ratio(lw, 0.5);
  const bool strong = p.regime() == Regime::Strong;
  const double t_end_rk4 = strong ? 2.0 * p.oscillation_period() : 8.0 / p.width;
  const double t_end_volterra = strong ? p.oscillation_period() : 4.0 / p.width;

  const auto rk4_error = [&](double step) {
    double worst = 0.0;
    for (const AmplitudeState& s : integrate_pseudomode(p, t_end_rk4, step)) {
      worst = std::max(worst, std::abs(s.c1 - excited_amplitude(p, s.t)));
      worst = std::max(worst, std::abs(s.b - pseudomode_amplitude(p, s.t)));
    }
    return worst;
  };
  const double rk4_coarse = rk4_error(2e-3 / p.coupling);
  const double rk4_fine = rk4_error(1e-3 / p.coupling);

  const auto volterra_error = [&](double step) {
    const auto series = integrate_memory_kernel(p, t_end_volterra, step);
    double worst = 0.0;
    for (size_t k = 0; k < series.size(); ++k) {
      const double t = static_cast<double>(k) * step;
      // omega0 = 0, so the closed-form c1 is the rotating-frame amplitude.
      worst = std::max(worst, std::abs(series[k] - excited_amplitude(p, t)));
    }
    return worst;
  };
  const double vol_coarse = volterra_error(2e-3 / p.coupling);
  const double vol_mid = volterra_error(1e-3 / p.coupling);
  const double vol_fine = volterra_error(5e-4 / p.coupling);
  const double vol_ratio = vol_coarse / vol_mid;

  const bool ok = rk4_fine <= 1e-8 && rk4_coarse / rk4_fine >= 10.0 && vol_fine <= 1e-4 &&
                  vol_ratio >= 2.5 && vol_ratio <= 6.0;
  r.status = ok ? SuiteStatus::Pass : SuiteStatus::Fail;
  r.detail = "rk4 err " + fmt(rk4_fine) + " (ratio " + fmt(rk4_coarse / rk4_fine) +
             "), volterra err " + fmt(vol_fine) + " (ratio " + fmt(vol_ratio) + ")";
  return r;
}

SuiteResult concurrence_suite(double lw) {
  SuiteResult r{suite_name("concurrence-oracle", lw), SuiteStatus::Pass, ""};
  double worst = 0.0;
  int samples = 0;
  for (int ia = 0; ia < 13; ++ia) {
    const double alpha = 0.05 + 0.075 * ia;
    const PhysicalParams p = PhysicalParams::from_ratio(lw, alpha);
    for (int it = 0; it < 17; ++it) {
      const double t = 2.0 * it;
      ++samples;
      const double atoms = wootters_concurrence(reduced_pair(p, t, ReducedPair::Atoms));
      const double reservoirs =
          wootters_concurrence(reduced_pair(p, t, ReducedPair::Reservoirs));
      const double own = wootters_concurrence(reduced_pair(p, t, ReducedPair::AtomOwnReservoir));
      worst = std::max(worst, std::abs(atoms - concurrence_atoms_closed(p, t)));
      worst = std::max(worst, std::abs(reservoirs - concurrence_reservoirs_closed(p, t)));
      worst = std::max(worst, std::abs(own - concurrence_atom_reservoir_closed(p, t)));
    }
  }
  r.status = worst <= 1e-10 ? SuiteStatus::Pass : SuiteStatus::Fail;
  r.detail = std::to_string(samples) + " samples, max deviation " + fmt(worst);
  return r;
}

SuiteResult counts_suite(double lw, FaultInjection fault) {
  SuiteResult r{suite_name("criteria-counts", lw), SuiteStatus::Pass, ""};
  const PhysicalParams probe = PhysicalParams::from_ratio(lw, 0.5);
  if (probe.regime() != Regime::Strong) {
    r.status = SuiteStatus::Skip;
    r.detail = "weak coupling: revival/death criteria are undefined (requires lambda < 2W)";
    return r;
  }

  const double d = probe.mode_splitting();
  const double t_max = 14.0 / probe.width;
  const double periods = t_max * d / (2.0 * std::numbers::pi);
  const long long samples = static_cast<long long>(std::ceil(400.0 * periods)) + 1;

  int used = 0;
  int mismatches = 0;
  std::string first_bad;
  for (int i = 0; i < 120; ++i) {
    const double alpha = 0.02 + (0.695 - 0.02) * i / 119.0;
    const PhysicalParams p = PhysicalParams::from_ratio(lw, alpha);
    if (near_count_boundary(p, 1e-3)) continue;
    ++used;

    const EventScan scan = count_events_numeric(p, t_max, samples);
    const RevivalCount n_a = count_revivals(p);
    const long long n_r = count_esd(p);
    double rth1 = revival_threshold(p, 1);
    if (fault == FaultInjection::ThresholdSign) rth1 = -rth1;
    const bool predicted_revival = alpha > rth1;
    const bool predicted_esd = alpha < esd_threshold(p, 1);

    const bool ok = !n_a.infinite && scan.revivals() == n_a.value && scan.deaths() == n_r &&
                    predicted_revival == (scan.revivals() >= 1) &&
                    predicted_esd == (scan.deaths() >= 1);
    if (!ok) {
      ++mismatches;
      if (first_bad.empty()) first_bad = " first at alpha=" + fmt(alpha);
    }
  }

  if (used < 50) {
    r.status = SuiteStatus::Fail;
    r.detail = "sweep too small after boundary exclusions: " + std::to_string(used);
    return r;
  }
  r.status = mismatches == 0 ? SuiteStatus::Pass : SuiteStatus::Fail;
  r.detail = std::to_string(used) + " alphas, " + std::to_string(mismatches) + " mismatches" +
             first_bad;
  return r;
}

SuiteResult constant_partition_suite(double lw) {
  SuiteResult r{suite_name("constant-partition", lw), SuiteStatus::Pass, ""};
  const double alpha = 1.0 / std::sqrt(10.0);
  const PhysicalParams p = PhysicalParams::from_ratio(lw, alpha);
  const double expected = 2.0 * alpha * p.beta();
  const Partition cut{Subsystem::Atom1, Subsystem::Reservoir1};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double t = 20.0 * i / 199.0;
    worst = std::max(worst, std::abs(i_concurrence(build_joint_state(p, t), cut) - expected));
  }
  r.status = worst <= 1e-10 ? SuiteStatus::Pass : SuiteStatus::Fail;
  r.detail = "max |I(a1r1) - 2 alpha beta| = " + fmt(worst);
  return r;
}

SuiteResult endpoints_suite(double lw) {
  SuiteResult r{suite_name("multipartite-endpoints", lw), SuiteStatus::Pass, ""};
  const double alpha = 1.0 / std::sqrt(10.0);
  const PhysicalParams p = PhysicalParams::from_ratio(lw, alpha);
  const double start = multipartite_concurrence(build_joint_state(p, 0.0));
  const double late = multipartite_concurrence(build_joint_state(p, 50.0 / p.width));
  const double expected = 2.0 * alpha * p.beta();
  const bool ok = std::abs(start - late) <= 1e-4 && std::abs(start - expected) <= 1e-10;
  r.status = ok ? SuiteStatus::Pass : SuiteStatus::Fail;
  r.detail = "C_N(0) = " + fmt(start) + ", |C_N(0) - C_N(tau=50)| = " + fmt(std::abs(start - late));
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  if (options.lambda_over_w.empty()) {
    throw std::invalid_argument("verification needs at least one lambda/W value");
  }
  std::vector<SuiteResult> results;
  for (double lw : options.lambda_over_w) {
    if (!(lw > 0.0)) throw std::invalid_argument("lambda/W values must be positive");
    results.push_back(integrator_suite(lw));
    results.push_back(concurrence_suite(lw));
    results.push_back(counts_suite(lw, options.fault));
    results.push_back(constant_partition_suite(lw));
    results.push_back(endpoints_suite(lw));
  }
  return results;
}

int count_failures(const std::vector<SuiteResult>& results) {
  int n = 0;
  for (const SuiteResult& r : results) n += r.status == SuiteStatus::Fail ? 1 : 0;
  return n;
}

}  // namespace entdyn::verify
