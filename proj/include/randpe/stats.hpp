// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace randpe {

/// Spearman rank correlation with average ranks for ties.
/// Inputs must have equal length >= 2.
double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y);

}  // namespace randpe
