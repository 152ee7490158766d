// Copyright 2026 The sbovqa authors
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

#include <string>

#include "sbovqa/scaling.hpp"
#include "sbovqa/surrogate.hpp"

namespace sbovqa {

/// JSON record of a surrogate model (sample locations, values, bandwidth),
/// for debugging sessions and test fixtures. Round-trips exactly.
std::string surrogate_to_json(const SurrogateModel<double> &model);
SurrogateModel<double> surrogate_from_json(const std::string &text);

/// JSON record of a power-law fit: alpha, beta, residual.
std::string scaling_fit_to_json(const ScalingFit &fitted);

} // namespace sbovqa
