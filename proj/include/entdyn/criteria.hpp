// criteria.hpp — quantitative revival/death criteria: per-peak thresholds,
// occurrence tests, event counts, revival interval, ordering classification,
// and the independent numeric zero-crossing scan.
#pragma once

#include <string>
#include <vector>

#include "entdyn/params.hpp"

namespace entdyn {

struct RevivalCount {
  bool infinite = false;
  long long value = 0;  // meaningful when !infinite

  friend bool operator==(const RevivalCount&, const RevivalCount&) = default;
};

// Revival of atom entanglement at the n-th population peak requires
// alpha > (1 - e^{-2 n pi lambda / d}) / sqrt(1 + [1 - e^{-2 n pi lambda / d}]^2).
// Strictly increasing in n with limit 1/sqrt(2). Strong coupling only.
double revival_threshold(const PhysicalParams& params, int n);

// Sudden death of reservoir entanglement at the n-th peak requires
// alpha < e^{-2 n pi lambda / d} / sqrt(1 + e^{-4 n pi lambda / d}).
// Strictly decreasing in n. Strong coupling only.
double esd_threshold(const PhysicalParams& params, int n);

bool revival_occurs(const PhysicalParams& params);  // alpha > revival_threshold(1)
bool esd_occurs(const PhysicalParams& params);      // alpha < esd_threshold(1)

// n_a = floor((d / 2 pi lambda) ln(beta / (beta - alpha))) for alpha < beta;
// infinite for alpha >= beta (damped oscillation, no permanent death).
RevivalCount count_revivals(const PhysicalParams& params);

// n_r = floor((d / 2 pi lambda) ln(beta / alpha)); 0 when alpha >= beta.
// alpha = 0 rejected.
long long count_esd(const PhysicalParams& params);

// t_r = 2 pi / d, independent of alpha.
double revival_interval(const PhysicalParams& params);

enum class EventOrdering { Before, Simultaneous, After, NotApplicable };

// Before iff 2 alpha > beta, After iff 2 alpha < beta, Simultaneous within
// 1e-12; NotApplicable unless both revival and ESD occur.
EventOrdering classify_ordering(const PhysicalParams& params);

const char* ordering_name(EventOrdering ordering);

// Result of scanning the closed-form concurrences on a dense grid.
// A revival is a re-entry of C_{a1a2} above eps after a zero plateau of at
// least two samples; a death is the entry of C_{r1r2} into such a plateau
// strictly after its first birth. Both require the plateau and the re-entry
// to fall inside the scan window. Single-sample touches are ignored.
struct EventScan {
  std::vector<double> revival_times;  // first sample back above eps
  std::vector<double> death_times;    // first sample inside the plateau
  double first_birth_time = -1.0;     // first sample with C_{r1r2} >= eps, -1 if never
  double grid_step = 0.0;

  long long revivals() const { return static_cast<long long>(revival_times.size()); }
  long long deaths() const { return static_cast<long long>(death_times.size()); }

  static constexpr double eps = 1e-9;
};

// Requires samples >= 200 per oscillation period 2 pi / d over [0, t_max] and
// t_max large enough that e^{-lambda t_max} < 1e-6. `samples` counts grid
// points (inclusive of both endpoints).
EventScan count_events_numeric(const PhysicalParams& params, double t_max,
                               long long samples);

struct CriteriaReport {
  double lambda_over_w = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double d_over_w = 0.0;
  double revival_threshold_n1 = 0.0;
  double esd_threshold_n1 = 0.0;
  bool revival_occurs = false;
  bool esd_occurs = false;
  RevivalCount n_a;
  long long n_r = 0;
  double t_r_in_inv_w = 0.0;
  EventOrdering ordering = EventOrdering::NotApplicable;
  std::vector<std::string> warnings;  // e.g. floor argument within 1e-9 of an integer
};

CriteriaReport criteria_report(const PhysicalParams& params);

// True when alpha sits within `margin` of any revival/ESD threshold, of the
// infinite-revival boundary 1/sqrt(2), or of the coincidence point 2 alpha =
// beta. Used to build sweeps on which the count formulas are exact.
bool near_count_boundary(const PhysicalParams& params, double margin);

}  // namespace entdyn
