#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace mipt::kernels {

using cplx = std::complex<double>;

/// The data-parallel inner loops of the simulator.  Every entry has a scalar
/// reference implementation and (on x86 with AVX2+FMA) a vectorized variant;
/// the two are equivalence-tested against each other.  `states[k]` is the bit
/// pattern whose amplitude is `amps[k]`.
struct Kernels {
    const char* name;

    /// sum_k |amps[k]|^2
    double (*norm_sq)(const cplx* amps, std::size_t n);

    /// amps[k] *= factor
    void (*scale)(cplx* amps, std::size_t n, double factor);

    /// sum of |amps[k]|^2 over k with (states[k] & mask) != 0
    double (*masked_norm_sq)(const cplx* amps, const std::uint32_t* states,
                             std::size_t n, std::uint32_t mask);

    /// Zero every amplitude whose (states[k] & mask) != 0 disagrees with
    /// keep_set; returns the squared norm of what survives.
    double (*project)(cplx* amps, const std::uint32_t* states, std::size_t n,
                      std::uint32_t mask, bool keep_set);

    /// Accumulates e1 = sum |a|^2 m, e2 = sum |a|^2 m^2 with
    /// m = popcount(states[k] & mask) - offset.
    void (*weighted_moments)(const cplx* amps, const std::uint32_t* states,
                             std::size_t n, std::uint32_t mask, double offset,
                             double* e1, double* e2);

    /// In-place 2x2 complex rotation over index pairs:
    ///   (amps[ia[k]], amps[ib[k]]) <- M (amps[ia[k]], amps[ib[k]])
    void (*pair_rotate)(cplx* amps, const std::uint32_t* ia,
                        const std::uint32_t* ib, std::size_t n, cplx m00,
                        cplx m01, cplx m10, cplx m11);

    /// amps[idx[k]] *= phase
    void (*phase_multiply)(cplx* amps, const std::uint32_t* idx, std::size_t n,
                           cplx phase);

    /// sum_k x[k] * conj(y[k])
    cplx (*cdotc)(const cplx* x, const cplx* y, std::size_t n);
};

/// Scalar reference implementations; always available.
const Kernels& scalar();

/// AVX2+FMA implementations, or nullptr when the CPU or build lacks them.
const Kernels* avx2();

/// Backend used by the simulator.  Chosen once: the MIPT_KERNELS environment
/// variable ("scalar", "avx2", "auto") wins, otherwise the best supported.
const Kernels& active();

/// Test hook: swap the active backend by name.  Returns false if unknown or
/// unsupported.  Not safe while simulations are in flight.
bool force(const std::string& name);

}  // namespace mipt::kernels
