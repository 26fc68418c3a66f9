// Copyright 2026 The relulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace relulab {

struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1 denominator)
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
};

/// Summary of a nonempty sample; quantiles by linear interpolation.
SummaryStats summarize(const std::vector<double>& samples);

double median(std::vector<double> samples);

/// Two-sample Kolmogorov-Smirnov statistic: sup_t |F_a(t) - F_b(t)|.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Critical value c(alpha) * sqrt((n+m)/(n*m)) of the two-sample KS test.
double ks_critical_value(std::size_t n, std::size_t m, double c_alpha);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rmse = 0.0;  // residual RMS in log space
};

/// Least-squares line through (ln x_i, ln y_i); needs >= 2 points, all positive.
LogLogFit fit_loglog_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys);

}  // namespace relulab
