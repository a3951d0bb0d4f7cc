#include <bit>

#include "mipt/kernels.hpp"

namespace mipt::kernels {

namespace {

double norm_sq_scalar(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    return acc;
}

void scale_scalar(cplx* a, std::size_t n, double f) {
    for (std::size_t k = 0; k < n; ++k) a[k] *= f;
}

double masked_norm_sq_scalar(const cplx* a, const std::uint32_t* s,
                             std::size_t n, std::uint32_t mask) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        if (s[k] & mask)
            acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    return acc;
}

double project_scalar(cplx* a, const std::uint32_t* s, std::size_t n,
                      std::uint32_t mask, bool keep_set) {
    double kept = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (bool(s[k] & mask) == keep_set)
            kept += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
        else
            a[k] = cplx(0.0, 0.0);
    }
    return kept;
}

void weighted_moments_scalar(const cplx* a, const std::uint32_t* s,
                             std::size_t n, std::uint32_t mask, double offset,
                             double* e1, double* e2) {
    double acc1 = 0.0, acc2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
        const double m = double(std::popcount(s[k] & mask)) - offset;
        acc1 += w * m;
        acc2 += w * m * m;
    }
    *e1 = acc1;
    *e2 = acc2;
}

void pair_rotate_scalar(cplx* amps, const std::uint32_t* ia,
                        const std::uint32_t* ib, std::size_t n, cplx m00,
                        cplx m01, cplx m10, cplx m11) {
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = amps[ia[k]];
        const cplx b = amps[ib[k]];
        amps[ia[k]] = m00 * a + m01 * b;
        amps[ib[k]] = m10 * a + m11 * b;
    }
}

void phase_multiply_scalar(cplx* amps, const std::uint32_t* idx, std::size_t n,
                           cplx phase) {
    for (std::size_t k = 0; k < n; ++k) amps[idx[k]] *= phase;
}

cplx cdotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].imag() * y[k].real() - x[k].real() * y[k].imag();
    }
    return {re, im};
}

}  // namespace

const Kernels& scalar() {
    static const Kernels table = {
        "scalar",
        norm_sq_scalar,
        scale_scalar,
        masked_norm_sq_scalar,
        project_scalar,
        weighted_moments_scalar,
        pair_rotate_scalar,
        phase_multiply_scalar,
        cdotc_scalar,
    };
    return table;
}

}  // namespace mipt::kernels
