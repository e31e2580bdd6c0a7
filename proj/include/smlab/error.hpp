// Copyright 2026 The smlab Authors.
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

#ifndef SMLAB_ERROR_HPP_
#define SMLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace smlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input values (lengths, alphabets, symbols).
class InputError : public Error {
 public:
  using Error::Error;
};

// A protocol or construction parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Exhaustive or materializing work that would exceed a fixed capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace smlab

#endif  // SMLAB_ERROR_HPP_
