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
#include "fnprime/log_model.hpp"

#include <cmath>
#include <stdexcept>

namespace fnprime {

double closed_form_model(double t, const LogFitModel& m) {
  const double arg = m.c2 * t + m.c3;
  if (!(arg > 1.0)) throw std::domain_error("closed_form_model: log argument must exceed 1");
  return m.c1 / std::log(arg) + m.c4;
}

double analytic_that(double t, double t0) {
  if (!(t0 > 0.0) || !(t > t0)) throw std::domain_error("analytic_that: requires t > t0 > 0");
  return 1.0 / std::log(t / t0);
}

}  // namespace fnprime
