// Copyright 2026 The densematch Authors
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

#ifndef DENSEMATCH_ERROR_H_
#define DENSEMATCH_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace densematch {

// Malformed caller input: bad vertex ids, self-loops, overlapping sets,
// invalid matchings, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Extraction parameters violate one of the inequalities the bound needs.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rejection sampling gave up before hitting the acceptance event.
class SamplingFailure : public std::runtime_error {
 public:
  SamplingFailure(const std::string& what, std::uint64_t attempts)
      : std::runtime_error(what), attempts_(attempts) {}

  std::uint64_t attempts() const noexcept { return attempts_; }

 private:
  std::uint64_t attempts_;
};

// An exact oracle was asked to run on a graph above its size limit.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// No object of the requested shape exists (e.g. no matching of size t).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace densematch

#endif  // DENSEMATCH_ERROR_H_
