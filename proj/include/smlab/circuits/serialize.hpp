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

#ifndef SMLAB_CIRCUITS_SERIALIZE_HPP_
#define SMLAB_CIRCUITS_SERIALIZE_HPP_

#include <istream>
#include <ostream>
#include <string>

#include "smlab/circuits/circuit.hpp"

namespace smlab::circuits {

// Line format:
//   n k size depth
//   idx KIND wire... [weight... threshold]
// Wires are x3, !x3, y0, !y0 or g5; LTF lines carry one weight per wire and
// then the threshold. Lines starting with '#' are ignored on input.
void write_circuit(std::ostream& out, const Circuit& c);
std::string to_text(const Circuit& c);

// Throws InputError on malformed input or a header that does not match the
// gates (size or depth).
Circuit read_circuit(std::istream& in);
Circuit from_text(const std::string& text);

}  // namespace smlab::circuits

#endif  // SMLAB_CIRCUITS_SERIALIZE_HPP_
