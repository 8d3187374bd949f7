#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace sqfpow {

using Vertex = int;
/// Vertex or variable subset; bit v set means v is a member.
using Mask = std::uint64_t;

inline constexpr int kMaxVariables = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr bool contains(Mask set, Vertex v) { return ((set >> v) & 1U) != 0; }
constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

std::vector<Vertex> to_indices(Mask m);
Mask from_indices(std::span<const Vertex> indices);

/// Lexicographic order on the increasing vertex sequences of two sets.
bool lex_less(Mask a, Mask b);

}  // namespace sqfpow
