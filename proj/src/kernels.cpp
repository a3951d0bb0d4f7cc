#include "mipt/kernels.hpp"

#include <cstdlib>

namespace mipt::kernels {

#ifdef MIPT_HAVE_AVX2
const Kernels* avx2_table();
#endif

const Kernels* avx2() {
#if defined(MIPT_HAVE_AVX2) && defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return avx2_table();
#endif
    return nullptr;
}

namespace {

const Kernels* g_active = nullptr;

const Kernels* choose() {
    if (const char* env = std::getenv("MIPT_KERNELS")) {
        const std::string v(env);
        if (v == "scalar") return &scalar();
        if (v == "avx2" && avx2()) return avx2();
    }
    if (const Kernels* t = avx2()) return t;
    return &scalar();
}

}  // namespace

const Kernels& active() {
    if (!g_active) g_active = choose();
    return *g_active;
}

bool force(const std::string& name) {
    if (name == "scalar") {
        g_active = &scalar();
        return true;
    }
    if (name == "avx2") {
        if (const Kernels* t = avx2()) {
            g_active = t;
            return true;
        }
        return false;
    }
    if (name == "auto") {
        g_active = choose();
        return true;
    }
    return false;
}

}  // namespace mipt::kernels
