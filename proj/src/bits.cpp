#include "sqfpow/bits.hpp"

#include "sqfpow/errors.hpp"

namespace sqfpow {

std::vector<Vertex> to_indices(Mask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

Mask from_indices(std::span<const Vertex> indices) {
  Mask m = 0;
  for (Vertex v : indices) {
    if (v < 0 || v >= kMaxVariables) throw InvalidParameter("variable index out of range");
    m |= bit(v);
  }
  return m;
}

bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const Vertex d = std::countr_zero(diff);
  // The first position where the sorted sequences differ is at d. If a owns
  // d, b continues with something larger (or ends, making b a prefix).
  const Mask above = ~low_mask(d + 1);
  if (contains(a, d)) return (b & above) != 0;
  return (a & above) == 0;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace sqfpow
