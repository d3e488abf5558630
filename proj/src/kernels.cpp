#include "kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rm::kernels {

std::size_t parallel_threshold() { return 1u << 12; }

void conv_serial(const Rat* a, std::size_t na, const Rat* b, std::size_t nb, Rat* out) {
    const std::size_t no = na + nb - 1;
    Rat acc, term;
    for (std::size_t k = 0; k < no; ++k) {
        acc = 0;
        const std::size_t ilo = k >= nb - 1 ? k - (nb - 1) : 0;
        const std::size_t ihi = std::min(k, na - 1);
        for (std::size_t i = ilo; i <= ihi; ++i) {
            term = a[i] * b[k - i];
            acc += term;
        }
        out[k] = acc;
    }
}

void conv_parallel(const Rat* a, std::size_t na, const Rat* b, std::size_t nb, Rat* out) {
    const long no = static_cast<long>(na + nb - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long k = 0; k < no; ++k) {
        Rat acc = 0;
        const std::size_t uk = static_cast<std::size_t>(k);
        const std::size_t ilo = uk >= nb - 1 ? uk - (nb - 1) : 0;
        const std::size_t ihi = std::min(uk, na - 1);
        for (std::size_t i = ilo; i <= ihi; ++i) acc += a[i] * b[uk - i];
        out[uk] = acc;
    }
}

void conv(const Rat* a, std::size_t na, const Rat* b, std::size_t nb, Rat* out) {
    if (na * nb >= parallel_threshold())
        conv_parallel(a, na, b, nb, out);
    else
        conv_serial(a, na, b, nb, out);
}

void conv2_serial(const Rat* a, std::size_t ra, std::size_t ca,
                  const Rat* b, std::size_t rb, std::size_t cb, Rat* out) {
    const std::size_t ro = ra + rb - 1, co = ca + cb - 1;
    for (std::size_t u = 0; u < ro; ++u)
        for (std::size_t v = 0; v < co; ++v) {
            Rat acc = 0;
            const std::size_t ilo = u >= rb - 1 ? u - (rb - 1) : 0;
            const std::size_t ihi = std::min(u, ra - 1);
            for (std::size_t i = ilo; i <= ihi; ++i) {
                const std::size_t jlo = v >= cb - 1 ? v - (cb - 1) : 0;
                const std::size_t jhi = std::min(v, ca - 1);
                for (std::size_t j = jlo; j <= jhi; ++j)
                    acc += a[i * ca + j] * b[(u - i) * cb + (v - j)];
            }
            out[u * co + v] = acc;
        }
}

void conv2_parallel(const Rat* a, std::size_t ra, std::size_t ca,
                    const Rat* b, std::size_t rb, std::size_t cb, Rat* out) {
    const std::size_t ro = ra + rb - 1, co = ca + cb - 1;
    const long cells = static_cast<long>(ro * co);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long cell = 0; cell < cells; ++cell) {
        const std::size_t u = static_cast<std::size_t>(cell) / co;
        const std::size_t v = static_cast<std::size_t>(cell) % co;
        Rat acc = 0;
        const std::size_t ilo = u >= rb - 1 ? u - (rb - 1) : 0;
        const std::size_t ihi = std::min(u, ra - 1);
        for (std::size_t i = ilo; i <= ihi; ++i) {
            const std::size_t jlo = v >= cb - 1 ? v - (cb - 1) : 0;
            const std::size_t jhi = std::min(v, ca - 1);
            for (std::size_t j = jlo; j <= jhi; ++j)
                acc += a[i * ca + j] * b[(u - i) * cb + (v - j)];
        }
        out[u * co + v] = acc;
    }
}

void conv2(const Rat* a, std::size_t ra, std::size_t ca,
           const Rat* b, std::size_t rb, std::size_t cb, Rat* out) {
    if (ra * ca * rb * cb >= parallel_threshold() * 4)
        conv2_parallel(a, ra, ca, b, rb, cb, out);
    else
        conv2_serial(a, ra, ca, b, rb, cb, out);
}

} // namespace rm::kernels
