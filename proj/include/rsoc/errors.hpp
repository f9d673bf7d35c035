/*
 Copyright 2026 The rsoc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace rsoc {

/// Raised when the risk extremization loses well-posedness: for sigma < 0
/// the sensitivity has crossed the admissible threshold and det(I + sigma *
/// Omega * V) is no longer positive.
struct NeuroticBreakdown : std::runtime_error {
  explicit NeuroticBreakdown(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when Q^{uu} cannot be made positive definite within the
/// regularization budget.
struct NonConvexQ : std::runtime_error {
  explicit NonConvexQ(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the run-time estimator when the information matrix of the
/// past-stress recursion stops being positive definite, or when the
/// minimum-stress solve is singular.
struct FilterBreakdown : std::runtime_error {
  explicit FilterBreakdown(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rsoc
