// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace randpe {

/// 17 significant digits: enough to round-trip a double, so CSV output is
/// byte-identical across runs and worker counts.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace randpe
