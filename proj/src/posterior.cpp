// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "randpe/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace randpe {

namespace {
constexpr double kPi = std::numbers::pi;
}

double PosteriorGrid::point(std::size_t i) const {
  return -kPi + (static_cast<double>(i) + 0.5) * spacing();
}

double PosteriorGrid::spacing() const {
  return 2.0 * kPi / static_cast<double>(masses.size());
}

PosteriorGrid uniform_grid(std::size_t points) {
  if (points == 0) throw std::invalid_argument("grid needs at least 1 point");
  return PosteriorGrid{
      std::vector<double>(points, 1.0 / static_cast<double>(points))};
}

double likelihood(int outcome, double phi, double reps, double theta) {
  const double p0 =
      std::clamp(0.5 * (1.0 + std::cos(reps * (phi - theta))), 0.0, 1.0);
  return outcome == 0 ? p0 : 1.0 - p0;
}

UpdateResult bayes_update(const PosteriorGrid& prior, int outcome, double reps,
                          double theta) {
  PosteriorGrid post{std::vector<double>(prior.size())};
  double total = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    post.masses[i] =
        prior.masses[i] * likelihood(outcome, prior.point(i), reps, theta);
    total += post.masses[i];
  }
  if (total <= 0.0) return UpdateResult{prior, true};
  for (double& m : post.masses) m /= total;
  return UpdateResult{std::move(post), false};
}

double posterior_mean(const PosteriorGrid& p) {
  double mean = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mean += p.point(i) * p.masses[i];
  return mean;
}

double posterior_variance(const PosteriorGrid& p) {
  const double mean = posterior_mean(p);
  double second = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    second += p.point(i) * p.point(i) * p.masses[i];
  }
  return std::max(0.0, second - mean * mean);
}

namespace {

void first_moment(const PosteriorGrid& p, double& re, double& im) {
  re = 0.0;
  im = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double phi = p.point(i);
    re += p.masses[i] * std::cos(phi);
    im += p.masses[i] * std::sin(phi);
  }
}

}  // namespace

double circular_mean(const PosteriorGrid& p) {
  double re = 0.0, im = 0.0;
  first_moment(p, re, im);
  return std::atan2(im, re);
}

double circular_stddev(const PosteriorGrid& p) {
  double re = 0.0, im = 0.0;
  first_moment(p, re, im);
  const double r = std::hypot(re, im);
  if (r < 1e-12) return std::numeric_limits<double>::infinity();
  if (r >= 1.0) return 0.0;
  return std::sqrt(-2.0 * std::log(r));
}

double hpd_width(const PosteriorGrid& p, double coverage) {
  if (!(coverage > 0.0) || !(coverage <= 1.0)) {
    throw std::invalid_argument("coverage must lie in (0, 1]");
  }
  std::vector<double> sorted = p.masses;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  std::size_t cells = 0;
  while (cells < sorted.size() && cumulative < coverage) {
    cumulative += sorted[cells++];
  }
  return static_cast<double>(cells) * p.spacing();
}

double trimmed_circular_stddev(const PosteriorGrid& p, double coverage) {
  if (!(coverage > 0.0) || !(coverage <= 1.0)) {
    throw std::invalid_argument("coverage must lie in (0, 1]");
  }
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (p.masses[a] != p.masses[b]) return p.masses[a] > p.masses[b];
    return a < b;
  });
  double kept = 0.0, re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < order.size() && kept < coverage; ++k) {
    const std::size_t i = order[k];
    const double phi = p.point(i);
    kept += p.masses[i];
    re += p.masses[i] * std::cos(phi);
    im += p.masses[i] * std::sin(phi);
  }
  if (kept <= 0.0) return std::numeric_limits<double>::infinity();
  const double r = std::hypot(re, im) / kept;
  if (r < 1e-12) return std::numeric_limits<double>::infinity();
  if (r >= 1.0) return 0.0;
  return std::sqrt(-2.0 * std::log(r));
}

double total_mass(const PosteriorGrid& p) {
  double total = 0.0;
  for (double m : p.masses) total += m;
  return total;
}

double wrap_angle(double phi) {
  double w = std::remainder(phi, 2.0 * kPi);
  if (w >= kPi) w -= 2.0 * kPi;  // remainder returns (-pi, pi]; use [-pi, pi)
  return w;
}

}  // namespace randpe
