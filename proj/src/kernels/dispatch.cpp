#include "invbid/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace invbid::kernels {

#if defined(__x86_64__) || defined(__i386__)
const Ops& avx2_ops();
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
const Ops& neon_ops();
#endif

namespace {

Isa detect() {
    const char* forced = std::getenv("INVBID_KERNEL_ISA");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0) return Isa::scalar;
#if defined(__x86_64__) || defined(__i386__)
        if (std::strcmp(forced, "avx2") == 0) return Isa::avx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
        if (std::strcmp(forced, "neon") == 0) return Isa::neon;
#endif
        return Isa::scalar; // unknown or unsupported name
    }
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}

const Ops& ops_for(Isa isa) {
    switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
        case Isa::avx2: return avx2_ops();
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
        case Isa::neon: return neon_ops();
#endif
        default: return scalar_ops();
    }
}

} // namespace

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

const Ops& active() { return ops_for(active_isa()); }

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        default: return "scalar";
    }
}

} // namespace invbid::kernels
