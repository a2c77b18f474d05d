#include "frobring/simd/bit_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define FROBRING_AVX2_TARGET __attribute__((target("avx2")))
#define FROBRING_HAS_AVX2_IMPL 1
#else
#define FROBRING_HAS_AVX2_IMPL 0
#endif

namespace frob::simd::avx2 {

#if FROBRING_HAS_AVX2_IMPL

FROBRING_AVX2_TARGET
void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits) {
  const std::size_t nw = words_for(nbits);
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(r));
  // A count of 64 makes _mm256_srl_epi64 produce zero, which is what r == 0 needs.
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - r));

  // w is one past the next word to write; blocks cover [w - 4, w).
  std::size_t w = nw;
  while (w > q) {
    const std::size_t top_lo = w - 1 - q;
    if (w >= q + 5 && top_lo < src.size()) {
      const std::size_t b = w - 4;
      const std::size_t lo = b - q;
      const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + lo));
      const __m256i carry =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + lo - 1));
      const __m256i v = _mm256_or_si256(_mm256_sll_epi64(hi, left), _mm256_srl_epi64(carry, right));
      __m256i* out = reinterpret_cast<__m256i*>(dst.data() + b);
      _mm256_storeu_si256(out, _mm256_or_si256(_mm256_loadu_si256(out), v));
      w = b;
    } else {
      const std::size_t cur = w - 1;
      const std::size_t lo = cur - q;
      std::uint64_t v = lo < src.size() ? src[lo] << r : 0;
      if (r != 0 && lo >= 1 && lo - 1 < src.size()) v |= src[lo - 1] >> (64 - r);
      dst[cur] |= v;
      w = cur;
    }
  }
  if (nw != 0) dst[nw - 1] &= tail_mask(nbits);
}

FROBRING_AVX2_TARGET
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
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t w = first + 1;
  for (; w + 4 <= last; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + w));
    if (!_mm256_testc_si256(v, ones)) return false;
  }
  for (; w < last; ++w) {
    if (words[w] != ~std::uint64_t{0}) return false;
  }
  return (words[last] & tail) == tail;
}

#else

void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits) {
  scalar::shift_or(dst, src, shift, nbits);
}

bool all_ones(std::span<const std::uint64_t> words, std::size_t begin, std::size_t end) {
  return scalar::all_ones(words, begin, end);
}

#endif

}  // namespace frob::simd::avx2
