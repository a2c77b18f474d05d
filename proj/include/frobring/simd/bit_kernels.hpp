#pragma once

// Word-parallel bitset kernels behind every membership table in the library.
//
// Bit i of a table lives in word i / 64 at position i % 64. All kernels keep
// bits at positions >= nbits cleared in the final word.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace frob::simd {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend) noexcept;

// True when the running CPU (and this build) can execute the backend.
bool backend_supported(Backend backend) noexcept;

// Backend chosen at first use: AVX2 when supported, else scalar.
// FROBRING_SIMD=scalar in the environment forces the scalar path.
Backend active_backend() noexcept;

// Overrides dispatch for the whole process. Throws Unsupported if the backend
// cannot run here.
void set_backend(Backend backend);

constexpr std::size_t words_for(std::size_t nbits) noexcept { return (nbits + 63) / 64; }

// dst |= src << shift, restricted to the first nbits of dst. Bits of src past
// its span are zero. dst and src may be the same buffer; the update then reads
// only pre-update words, so a single call adds each bit at most once.
void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits);

// True iff every bit in [begin, end) is set. Empty ranges are vacuously true.
bool all_ones(std::span<const std::uint64_t> words, std::size_t begin, std::size_t end);

namespace scalar {
void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits);
bool all_ones(std::span<const std::uint64_t> words, std::size_t begin, std::size_t end);
}  // namespace scalar

namespace avx2 {
void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits);
bool all_ones(std::span<const std::uint64_t> words, std::size_t begin, std::size_t end);
}  // namespace avx2

// Mask of the valid bits in the last word of an nbits-long table.
constexpr std::uint64_t tail_mask(std::size_t nbits) noexcept {
  const std::size_t r = nbits % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

}  // namespace frob::simd
