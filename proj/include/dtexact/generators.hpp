#pragma once

#include <cstdint>

#include "dtexact/dataset.hpp"

namespace dtexact {

// Deterministic splitmix64 stream; used instead of <random> distributions so
// generated corpora are byte-identical across standard libraries.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// grid x grid checkerboard: point (x, y) is labeled "r" when x + y is even,
// "b" otherwise. grid = 2 is the classic XOR instance.
Dataset make_xor_grid(int grid);

// n random integer points in [0, coord_max]^d with labels drawn from
// {c1, ..., ck}. Repeated coordinates reuse the label of their first
// occurrence so the dataset stays consistent. Deterministic in the seed.
Dataset make_random_dataset(std::uint64_t seed, int n, int d, int k,
                            int coord_max);

}  // namespace dtexact
