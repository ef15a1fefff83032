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
#include <stdexcept>
#include <string>

#include "fnprime/series.hpp"

namespace fnprime {

void validate(const TimeSeries& s) {
  if (s.times.size() != s.values.size()) {
    throw std::invalid_argument("time series: times and values differ in length");
  }
  for (std::size_t i = 1; i < s.times.size(); ++i) {
    if (!(s.times[i] > s.times[i - 1])) {
      throw std::invalid_argument("time series: times not strictly ascending at index " +
                                  std::to_string(i));
    }
  }
}

}  // namespace fnprime
