// Copyright 2026 The hamshape Authors
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

#ifndef HAMSHAPE_WALSH_HADAMARD_HPP
#define HAMSHAPE_WALSH_HADAMARD_HPP

#include <cstddef>
#include <span>
#include <stdexcept>

namespace hamshape {

/// In-place unnormalized fast Walsh-Hadamard transform:
/// out[z] = sum_k (-1)^{popcount(z & k)} in[k]. Length must be a power of two.
template <typename T>
void walsh_hadamard_transform(std::span<T> data) {
  const std::size_t len = data.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("Walsh-Hadamard transform length must be a power of two");
  }
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T u = data[j];
        const T v = data[j + h];
        data[j] = u + v;
        data[j + h] = u - v;
      }
    }
  }
}

}  // namespace hamshape

#endif  // HAMSHAPE_WALSH_HADAMARD_HPP
