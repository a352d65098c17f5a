// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "randpe/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "randpe/rng.hpp"

namespace randpe {

ImportanceDistribution importance_weights(
    const Hamiltonian& h, const std::vector<double>& surrogate_expectations,
    double rho, double floor_fraction) {
  if (rho < 0.0 || rho > 1.0) {
    throw std::invalid_argument("rho must lie in [0, 1], got " +
                                std::to_string(rho));
  }
  if (surrogate_expectations.size() != h.terms.size()) {
    throw std::invalid_argument(
        "got " + std::to_string(surrogate_expectations.size()) +
        " surrogate expectations for " + std::to_string(h.terms.size()) +
        " terms");
  }

  std::vector<double> raw(h.terms.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    raw[j] = (1.0 - rho) * std::abs(surrogate_expectations[j]) +
             rho * term_norm(h.terms[j]);
  }
  const double max_raw =
      raw.empty() ? 0.0 : *std::max_element(raw.begin(), raw.end());
  if (max_raw == 0.0) {
    throw std::invalid_argument(
        "all raw importance weights are zero; cannot normalize");
  }
  if (floor_fraction > 0.0) {
    const double floor = floor_fraction * max_raw;
    for (double& w : raw) w = std::max(w, floor);
  }
  double total = 0.0;
  for (double w : raw) total += w;
  for (double& w : raw) w /= total;
  return ImportanceDistribution{std::move(raw), rho, surrogate_expectations};
}

namespace {

// One categorical draw by CDF inversion; the cumulative sums are
// precomputed so a draw is a single upper_bound.
struct Categorical {
  std::vector<double> cdf;

  explicit Categorical(const std::vector<double>& weights) {
    cdf.resize(weights.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      acc += weights[j];
      cdf[j] = acc;
    }
    if (!cdf.empty()) cdf.back() = std::max(cdf.back(), 1.0);
  }

  std::size_t draw(SplitMix64& rng) const {
    const double u = rng.next_double();
    return static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  }
};

SampledHamiltonian assemble(const Hamiltonian& h,
                            const std::map<std::size_t, std::uint64_t>& counts,
                            const std::vector<double>& per_count_scale,
                            std::uint64_t n_draws, std::uint64_t seed) {
  std::vector<PauliTerm> terms;
  terms.reserve(counts.size());
  for (const auto& [j, count] : counts) {
    PauliTerm t = h.terms[j];
    t.coefficient *= static_cast<double>(count) * per_count_scale[j];
    terms.push_back(std::move(t));
  }
  SampledHamiltonian out;
  out.hamiltonian = canonicalize(Hamiltonian{std::move(terms), h.qubit_count});
  out.seed = seed;
  out.draws = n_draws;
  out.source_counts = counts;
  return out;
}

}  // namespace

SampledHamiltonian draw_sampled_hamiltonian(const ImportanceDistribution& dist,
                                            const Hamiltonian& h,
                                            std::uint64_t n_draws,
                                            std::uint64_t seed) {
  if (dist.weights.size() != h.terms.size()) {
    throw std::invalid_argument("importance distribution has " +
                                std::to_string(dist.weights.size()) +
                                " weights for " +
                                std::to_string(h.terms.size()) + " terms");
  }
  if (n_draws == 0) throw std::invalid_argument("n_draws must be >= 1");
  if (std::all_of(dist.weights.begin(), dist.weights.end(),
                  [](double w) { return w == 0.0; })) {
    throw std::invalid_argument("every term has zero sampling weight");
  }

  SplitMix64 rng(seed);
  const Categorical cat(dist.weights);
  std::map<std::size_t, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < n_draws; ++i) ++counts[cat.draw(rng)];

  std::vector<double> scale(h.terms.size());
  for (std::size_t j = 0; j < scale.size(); ++j) {
    scale[j] = 1.0 / (static_cast<double>(n_draws) * dist.weights[j]);
  }
  return assemble(h, counts, scale, n_draws, seed);
}

SampledHamiltonian uniform_subsample(const Hamiltonian& h, std::uint64_t m,
                                     std::uint64_t seed) {
  if (h.terms.empty()) {
    throw std::invalid_argument("cannot subsample an empty Hamiltonian");
  }
  if (m == 0) throw std::invalid_argument("m must be >= 1");

  const std::size_t term_count = h.terms.size();
  SplitMix64 rng(seed);
  std::map<std::size_t, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < m; ++i) {
    ++counts[static_cast<std::size_t>(rng.next_below(term_count))];
  }
  const std::vector<double> scale(
      term_count, static_cast<double>(term_count) / static_cast<double>(m));
  return assemble(h, counts, scale, m, seed);
}

double estimator_variance(const ImportanceDistribution& dist,
                          const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (dist.weights.size() != n) {
    throw std::invalid_argument("weights/values length mismatch");
  }
  if (n == 0) throw std::invalid_argument("empty value vector");

  double weighted_square_sum = 0.0;
  double mean = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    mean += values[j] / static_cast<double>(n);
    if (values[j] == 0.0) continue;
    if (dist.weights[j] == 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    weighted_square_sum += values[j] * values[j] / dist.weights[j];
  }
  return weighted_square_sum / (static_cast<double>(n) * n) - mean * mean;
}

double optimal_variance(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("empty value vector");
  double mean = 0.0;
  double abs_mean = 0.0;
  for (double v : values) {
    mean += v / static_cast<double>(values.size());
    abs_mean += std::abs(v) / static_cast<double>(values.size());
  }
  return abs_mean * abs_mean - mean * mean;
}

double robust_variance_bound(const std::vector<double>& values,
                             const std::vector<double>& perturbed) {
  const std::size_t n = values.size();
  if (perturbed.size() != n) {
    throw std::invalid_argument("values/perturbed length mismatch");
  }
  double delta_sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double delta = std::abs(perturbed[j]) - std::abs(values[j]);
    if (std::abs(delta) > std::abs(values[j]) / 2.0) {
      throw std::invalid_argument(
          "perturbation at index " + std::to_string(j) + " exceeds |F(j)|/2");
    }
    delta_sum += std::abs(delta);
    abs_sum += std::abs(values[j]);
  }
  return 4.0 / (static_cast<double>(n) * n) * delta_sum * abs_sum +
         optimal_variance(values);
}

}  // namespace randpe
