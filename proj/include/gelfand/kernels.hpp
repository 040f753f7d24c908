#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace gelfand::kernels {

// Summation over [0, count) in fixed chunks: chunk c covers
// [c * chunk, (c+1) * chunk) and is summed serially, then the chunk totals
// are added in index order.  The serial and OpenMP versions therefore
// produce identical bits regardless of the thread count.
constexpr std::size_t kChunk = 2048;

template <class Acc, class Body>
Acc chunked_sum_serial(std::size_t count, const Acc& zero, Body&& body) {
  Acc total = zero;
  for (std::size_t c0 = 0; c0 < count; c0 += kChunk) {
    Acc part = zero;
    const std::size_t c1 = std::min(count, c0 + kChunk);
    for (std::size_t i = c0; i < c1; ++i) body(i, part);
    total += part;
  }
  return total;
}

template <class Acc, class Body>
Acc chunked_sum_omp(std::size_t count, const Acc& zero, Body&& body) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<Acc> parts(chunks, zero);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < std::ptrdiff_t(chunks); ++c) {
    const std::size_t c0 = std::size_t(c) * kChunk, c1 = std::min(count, c0 + kChunk);
    for (std::size_t i = c0; i < c1; ++i) body(i, parts[c]);
  }
  Acc total = zero;
  for (const Acc& p : parts) total += p;
  return total;
}

// Independent outputs out[i] = body(i): trivially deterministic.
template <class T, class Body>
void map_serial(std::size_t count, std::vector<T>& out, Body&& body) {
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = body(i);
}

template <class T, class Body>
void map_omp(std::size_t count, std::vector<T>& out, Body&& body) {
  out.resize(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(count); ++i) out[i] = body(std::size_t(i));
}

}  // namespace gelfand::kernels
