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

#ifndef LDPFIM_HASHING_H_
#define LDPFIM_HASHING_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace ldpfim {

// All randomness in the library flows through explicitly seeded engines.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. Bijective on 64-bit words with full avalanche.
std::uint64_t Mix64(std::uint64_t x);

// Seeded 64-bit hash of a byte string. This is the hash family used by local
// hashing: every member is identified by its 64-bit seed. The construction
// absorbs the input in 8-byte little-endian words (the tail is zero padded and
// the byte length is folded into the initial state), mixing each word with
// Mix64 and finishing with one more Mix64 round. It is fixed across the repo;
// changing it changes every perturbed report.
std::uint64_t SeededHash(std::uint64_t seed, std::string_view bytes);

// Stable seed derivation: folds a list of 64-bit tags into `base`.
std::uint64_t DeriveSeed(std::uint64_t base,
                         std::initializer_list<std::uint64_t> tags);

// Folds a string tag (e.g. a miner name) into a 64-bit value.
std::uint64_t TagOf(std::string_view tag);

}  // namespace ldpfim

#endif  // LDPFIM_HASHING_H_
