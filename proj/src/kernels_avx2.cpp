// AVX2+FMA variants of the amplitude kernels.  Compiled with -mavx2 -mfma in
// its own translation unit; only reached after the runtime CPU check in
// kernels.cpp.  Amplitudes are interleaved (re, im) doubles, so one __m256d
// holds two complex values.

#include "mipt/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <bit>

namespace mipt::kernels {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (x+iy)*(c+id) on both complex lanes, with the constant pre-split into
// per-lane real and imaginary parts.
inline __m256d cmul(__m256d z, __m256d cre, __m256d cim) {
    const __m256d zswap = _mm256_permute_pd(z, 0x5);
    return _mm256_fmaddsub_pd(z, cre, _mm256_mul_pd(zswap, cim));
}

double norm_sq_avx2(const cplx* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d v0 = _mm256_loadu_pd(p + 2 * k);
        const __m256d v1 = _mm256_loadu_pd(p + 2 * k + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k)
        acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    return acc;
}

void scale_avx2(cplx* a, std::size_t n, double f) {
    double* p = reinterpret_cast<double*>(a);
    const __m256d vf = _mm256_set1_pd(f);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2)
        _mm256_storeu_pd(p + 2 * k, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * k), vf));
    for (; k < n; ++k) a[k] *= f;
}

// Sign-extended 64-bit lane masks (all-ones where (state & mask) == 0) for
// the four states starting at s; one mask vector per pair of complex lanes.
struct ZeroMasks {
    __m256d lo;  // covers states k, k+1
    __m256d hi;  // covers states k+2, k+3
};

inline ZeroMasks zero_masks(const std::uint32_t* s, __m128i vmask) {
    const __m128i st = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s));
    const __m128i z32 = _mm_cmpeq_epi32(_mm_and_si128(st, vmask), _mm_setzero_si128());
    const __m256i z64 = _mm256_cvtepi32_epi64(z32);
    return {_mm256_castsi256_pd(_mm256_permute4x64_epi64(z64, _MM_SHUFFLE(1, 1, 0, 0))),
            _mm256_castsi256_pd(_mm256_permute4x64_epi64(z64, _MM_SHUFFLE(3, 3, 2, 2)))};
}

double masked_norm_sq_avx2(const cplx* a, const std::uint32_t* s, std::size_t n,
                           std::uint32_t mask) {
    const double* p = reinterpret_cast<const double*>(a);
    const __m128i vmask = _mm_set1_epi32(int(mask));
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const ZeroMasks zm = zero_masks(s + k, vmask);
        const __m256d v0 = _mm256_loadu_pd(p + 2 * k);
        const __m256d v1 = _mm256_loadu_pd(p + 2 * k + 4);
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(zm.lo, _mm256_mul_pd(v0, v0)));
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(zm.hi, _mm256_mul_pd(v1, v1)));
    }
    double out = hsum(acc);
    for (; k < n; ++k)
        if (s[k] & mask)
            out += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    return out;
}

double project_avx2(cplx* a, const std::uint32_t* s, std::size_t n,
                    std::uint32_t mask, bool keep_set) {
    double* p = reinterpret_cast<double*>(a);
    const __m128i vmask = _mm_set1_epi32(int(mask));
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        ZeroMasks zm = zero_masks(s + k, vmask);
        // zm flags (state & mask) == 0; those lanes are kept when keep_set is
        // false, dropped otherwise.
        __m256d keep_lo = keep_set ? _mm256_andnot_pd(zm.lo, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)))
                                   : zm.lo;
        __m256d keep_hi = keep_set ? _mm256_andnot_pd(zm.hi, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)))
                                   : zm.hi;
        const __m256d v0 = _mm256_and_pd(_mm256_loadu_pd(p + 2 * k), keep_lo);
        const __m256d v1 = _mm256_and_pd(_mm256_loadu_pd(p + 2 * k + 4), keep_hi);
        _mm256_storeu_pd(p + 2 * k, v0);
        _mm256_storeu_pd(p + 2 * k + 4, v1);
        acc = _mm256_fmadd_pd(v0, v0, acc);
        acc = _mm256_fmadd_pd(v1, v1, acc);
    }
    double kept = hsum(acc);
    for (; k < n; ++k) {
        if (bool(s[k] & mask) == keep_set)
            kept += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
        else
            a[k] = cplx(0.0, 0.0);
    }
    return kept;
}

void weighted_moments_avx2(const cplx* a, const std::uint32_t* s, std::size_t n,
                           std::uint32_t mask, double offset, double* e1,
                           double* e2) {
    const double* p = reinterpret_cast<const double*>(a);
    __m256d acc1 = _mm256_setzero_pd(), acc2 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d v0 = _mm256_loadu_pd(p + 2 * k);
        const __m256d v1 = _mm256_loadu_pd(p + 2 * k + 4);
        // hadd interleaves the two sources: lanes come out as |a0|^2, |a2|^2,
        // |a1|^2, |a3|^2, so the weight vector uses the same order.
        const __m256d w = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        const __m256d m = _mm256_setr_pd(
            double(std::popcount(s[k] & mask)) - offset,
            double(std::popcount(s[k + 2] & mask)) - offset,
            double(std::popcount(s[k + 1] & mask)) - offset,
            double(std::popcount(s[k + 3] & mask)) - offset);
        const __m256d wm = _mm256_mul_pd(w, m);
        acc1 = _mm256_add_pd(acc1, wm);
        acc2 = _mm256_fmadd_pd(wm, m, acc2);
    }
    double out1 = hsum(acc1), out2 = hsum(acc2);
    for (; k < n; ++k) {
        const double w = a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
        const double m = double(std::popcount(s[k] & mask)) - offset;
        out1 += w * m;
        out2 += w * m * m;
    }
    *e1 = out1;
    *e2 = out2;
}

void pair_rotate_avx2(cplx* amps, const std::uint32_t* ia,
                      const std::uint32_t* ib, std::size_t n, cplx m00,
                      cplx m01, cplx m10, cplx m11) {
    double* p = reinterpret_cast<double*>(amps);
    const __m256d c0re = _mm256_setr_pd(m00.real(), m00.real(), m10.real(), m10.real());
    const __m256d c0im = _mm256_setr_pd(m00.imag(), m00.imag(), m10.imag(), m10.imag());
    const __m256d c1re = _mm256_setr_pd(m01.real(), m01.real(), m11.real(), m11.real());
    const __m256d c1im = _mm256_setr_pd(m01.imag(), m01.imag(), m11.imag(), m11.imag());
    for (std::size_t k = 0; k < n; ++k) {
        double* pa = p + 2 * std::size_t(ia[k]);
        double* pb = p + 2 * std::size_t(ib[k]);
        const __m256d va = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(pa));
        const __m256d vb = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(pb));
        const __m256d out = _mm256_add_pd(cmul(va, c0re, c0im), cmul(vb, c1re, c1im));
        _mm_storeu_pd(pa, _mm256_castpd256_pd128(out));
        _mm_storeu_pd(pb, _mm256_extractf128_pd(out, 1));
    }
}

void phase_multiply_avx2(cplx* amps, const std::uint32_t* idx, std::size_t n,
                         cplx phase) {
    double* p = reinterpret_cast<double*>(amps);
    const __m256d cre = _mm256_set1_pd(phase.real());
    const __m256d cim = _mm256_set1_pd(phase.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        double* p0 = p + 2 * std::size_t(idx[k]);
        double* p1 = p + 2 * std::size_t(idx[k + 1]);
        const __m256d v = _mm256_set_m128d(_mm_loadu_pd(p1), _mm_loadu_pd(p0));
        const __m256d out = cmul(v, cre, cim);
        _mm_storeu_pd(p0, _mm256_castpd256_pd128(out));
        _mm_storeu_pd(p1, _mm256_extractf128_pd(out, 1));
    }
    for (; k < n; ++k) amps[idx[k]] *= phase;
}

cplx cdotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    const double* py = reinterpret_cast<const double*>(y);
    const __m256d conj_odd = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    __m256d accr0 = _mm256_setzero_pd(), accr1 = _mm256_setzero_pd();
    __m256d acci0 = _mm256_setzero_pd(), acci1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vx0 = _mm256_loadu_pd(px + 2 * k);
        const __m256d vy0 = _mm256_loadu_pd(py + 2 * k);
        const __m256d vx1 = _mm256_loadu_pd(px + 2 * k + 4);
        const __m256d vy1 = _mm256_loadu_pd(py + 2 * k + 4);
        accr0 = _mm256_fmadd_pd(vx0, vy0, accr0);
        accr1 = _mm256_fmadd_pd(vx1, vy1, accr1);
        acci0 = _mm256_fmadd_pd(_mm256_permute_pd(vx0, 0x5),
                                _mm256_xor_pd(vy0, conj_odd), acci0);
        acci1 = _mm256_fmadd_pd(_mm256_permute_pd(vx1, 0x5),
                                _mm256_xor_pd(vy1, conj_odd), acci1);
    }
    double re = hsum(_mm256_add_pd(accr0, accr1));
    double im = hsum(_mm256_add_pd(acci0, acci1));
    for (; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].imag() * y[k].real() - x[k].real() * y[k].imag();
    }
    return {re, im};
}

}  // namespace

const Kernels* avx2_table() {
    static const Kernels table = {
        "avx2",
        norm_sq_avx2,
        scale_avx2,
        masked_norm_sq_avx2,
        project_avx2,
        weighted_moments_avx2,
        pair_rotate_avx2,
        phase_multiply_avx2,
        cdotc_avx2,
    };
    return &table;
}

}  // namespace mipt::kernels

#else

namespace mipt::kernels {
const Kernels* avx2_table() { return nullptr; }
}  // namespace mipt::kernels

#endif
