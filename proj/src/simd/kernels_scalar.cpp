#include "frobring/simd/bit_kernels.hpp"

namespace frob::simd::scalar {

void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits) {
  const std::size_t nw = words_for(nbits);
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  // High to low so that an aliased src is only read before it is written.
  for (std::size_t w = nw; w-- > q;) {
    const std::size_t lo = w - q;
    std::uint64_t v = lo < src.size() ? src[lo] << r : 0;
    if (r != 0 && lo >= 1 && lo - 1 < src.size()) v |= src[lo - 1] >> (64 - r);
    dst[w] |= v;
  }
  if (nw != 0) dst[nw - 1] &= tail_mask(nbits);
}

bool all_ones(std::span<const std::uint64_t> words, std::size_t begin, std::size_t end) {
  if (begin >= end) return true;
  const std::size_t first = begin / 64;
  const std::size_t last = (end - 1) / 64;
  const std::uint64_t head = ~std::uint64_t{0} << (begin % 64);
  const std::uint64_t tail = tail_mask(end);
  if (first == last) {
    const std::uint64_t m = head & tail;
    return (words[first] & m) == m;
  }
  if ((words[first] & head) != head) return false;
  for (std::size_t w = first + 1; w < last; ++w) {
    if (words[w] != ~std::uint64_t{0}) return false;
  }
  return (words[last] & tail) == tail;
}

}  // namespace frob::simd::scalar
