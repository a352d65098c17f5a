// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace randpe {

inline constexpr std::size_t kDefaultGridPoints = std::size_t{1} << 14;

/// Discretized distribution over the eigenphase phi in [-pi, pi).
/// Point i sits at the midpoint of the i-th of G equal cells, so a uniform
/// grid is exactly symmetric about zero.
struct PosteriorGrid {
  std::vector<double> masses;  // >= 0, sums to 1

  std::size_t size() const { return masses.size(); }
  double point(std::size_t i) const;
  double spacing() const;
};

PosteriorGrid uniform_grid(std::size_t points = kDefaultGridPoints);

/// Pr(o | phi; m, theta) = (1 + (-1)^o cos(m (phi - theta))) / 2.
/// The o = 1 branch is computed as 1 - Pr(0|...), so the two outcomes sum
/// to 1 exactly in floating point.
double likelihood(int outcome, double phi, double reps, double theta);

struct UpdateResult {
  PosteriorGrid posterior;
  // Every grid point hit likelihood zero; the prior is returned unchanged.
  bool underflow = false;
};

/// Pointwise multiply by the outcome likelihood and renormalize.
UpdateResult bayes_update(const PosteriorGrid& prior, int outcome, double reps,
                          double theta);

/// Mean on the fixed branch [-pi, pi): sum_i phi_i m_i.
double posterior_mean(const PosteriorGrid& p);

/// Variance on the same branch.
double posterior_variance(const PosteriorGrid& p);

/// atan2 of the first circular moment.
double circular_mean(const PosteriorGrid& p);

/// sqrt(-2 ln R) with R = |sum_i m_i e^{i phi_i}|; +infinity when R
/// underflows (an essentially uniform distribution).
double circular_stddev(const PosteriorGrid& p);

/// Width of the smallest set of grid cells holding `coverage` of the mass
/// (highest-density region; the cells need not be contiguous). Unlike the
/// circular moments this is insensitive to a sub-percent remnant of mass
/// far from the dominant lobe.
double hpd_width(const PosteriorGrid& p, double coverage);

/// Circular standard deviation of the highest-density region holding
/// `coverage` of the mass, renormalized. Keeps the spread of a genuinely
/// multimodal posterior (distant lobes all survive the trim) while a
/// sub-percent remnant of far-away mass cannot inflate it.
double trimmed_circular_stddev(const PosteriorGrid& p, double coverage);

/// Sum of masses (1 within 1e-9 for a valid grid).
double total_mass(const PosteriorGrid& p);

/// Wrap an angle into [-pi, pi).
double wrap_angle(double phi);

}  // namespace randpe
