// Copyright 2026 The fnprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>

namespace fnprime {

/// c1 / ln(c2 * t + c3) + c4, shared by device traces and prime densities.
struct LogFitModel {
  double c1 = 0.0;
  double c2 = 1.0;
  double c3 = 2.718281828459045;
  double c4 = 0.0;
  double residual_rms = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// Evaluates the model. Throws std::domain_error when c2 * t + c3 <= 1.
double closed_form_model(double t, const LogFitModel& m);

/// 1 / ln(t / t0). Throws std::domain_error for t <= t0.
double analytic_that(double t, double t0);

}  // namespace fnprime
