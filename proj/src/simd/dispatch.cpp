#include <atomic>
#include <cstdlib>
#include <string>

#include "frobring/error.hpp"
#include "frobring/simd/bit_kernels.hpp"

namespace frob::simd {
namespace {

Backend detect() noexcept {
  const char* forced = std::getenv("FROBRING_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") return Backend::Scalar;
  return backend_supported(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend backend) noexcept {
  if (backend == Backend::Scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_supported(backend)) {
    throw Error(ErrorKind::Unsupported,
                std::string("SIMD backend not available: ") + std::string(backend_name(backend)));
  }
  current().store(backend, std::memory_order_relaxed);
}

void shift_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::size_t shift, std::size_t nbits) {
  if (active_backend() == Backend::Avx2) {
    avx2::shift_or(dst, src, shift, nbits);
  } else {
    scalar::shift_or(dst, src, shift, nbits);
  }
}

bool all_ones(std::span<const std::uint64_t> words, std::size_t begin, std::size_t end) {
  return active_backend() == Backend::Avx2 ? avx2::all_ones(words, begin, end)
                                           : scalar::all_ones(words, begin, end);
}

}  // namespace frob::simd
