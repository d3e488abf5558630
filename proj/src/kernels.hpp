#ifndef RM_KERNELS_HPP
#define RM_KERNELS_HPP

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace rm::kernels {

// Dense convolution kernels over Q. Each output coefficient is an
// independent sum computed in a fixed order, so the parallel versions are
// bit-identical to the serial references.

// out[k] = sum_{i+j=k} a[i]*b[j]; out must have size na+nb-1.
void conv_serial(const Rat* a, std::size_t na, const Rat* b, std::size_t nb, Rat* out);
void conv_parallel(const Rat* a, std::size_t na, const Rat* b, std::size_t nb, Rat* out);

// 2-D convolution of row-major (ra x ca) and (rb x cb) blocks into a
// (ra+rb-1) x (ca+cb-1) block.
void conv2_serial(const Rat* a, std::size_t ra, std::size_t ca,
                  const Rat* b, std::size_t rb, std::size_t cb, Rat* out);
void conv2_parallel(const Rat* a, std::size_t ra, std::size_t ca,
                    const Rat* b, std::size_t rb, std::size_t cb, Rat* out);

// Dispatching entry points used by the polynomial types: parallel above a
// size threshold, serial below it.
void conv(const Rat* a, std::size_t na, const Rat* b, std::size_t nb, Rat* out);
void conv2(const Rat* a, std::size_t ra, std::size_t ca,
           const Rat* b, std::size_t rb, std::size_t cb, Rat* out);

std::size_t parallel_threshold();

} // namespace rm::kernels

#endif
