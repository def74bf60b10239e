// Copyright 2026 The ldpfim Authors
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

#include "ldpfim/hashing.h"

#include <cstring>

namespace ldpfim {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kLengthSalt = 0xc2b2ae3d27d4eb4fULL;

inline std::uint64_t Rotl(std::uint64_t x, int r) {
  return (x << r) | (x >> (64 - r));
}

inline std::uint64_t LoadLittleEndian(const char* p, std::size_t n) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i]))
         << (8 * i);
  }
  return w;
}

}  // namespace

std::uint64_t Mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SeededHash(std::uint64_t seed, std::string_view bytes) {
  std::uint64_t h = Mix64(seed ^ (bytes.size() * kLengthSalt));
  const char* p = bytes.data();
  std::size_t left = bytes.size();
  while (left >= 8) {
    h = Mix64(Rotl(h, 23) ^ LoadLittleEndian(p, 8));
    p += 8;
    left -= 8;
  }
  if (left > 0) h = Mix64(Rotl(h, 23) ^ LoadLittleEndian(p, left));
  return Mix64(h ^ kLengthSalt);
}

std::uint64_t DeriveSeed(std::uint64_t base,
                         std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = Mix64(base);
  for (std::uint64_t t : tags) h = Mix64(h ^ Mix64(t + kGolden));
  return h;
}

std::uint64_t TagOf(std::string_view tag) { return SeededHash(0, tag); }

}  // namespace ldpfim
