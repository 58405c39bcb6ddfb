#pragma once

#include <cstddef>

// Dense arithmetic kernels used by the LP solvers and the metrics code.
// Every kernel has a scalar reference implementation plus vectorized
// variants (AVX2 on x86-64, NEON on aarch64) selected once at startup.
// The scalar lane is the semantic reference; the vector lanes must agree
// with it up to floating-point reassociation.

namespace invbid::kernels {

enum class Isa { scalar, avx2, neon };

struct Ops {
    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[i] += alpha*x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // sum_i |x[i]|
    double (*asum)(const double* x, std::size_t n);
    // max_i |x[i]|, 0 for n == 0
    double (*max_abs)(const double* x, std::size_t n);
    // sum_i x[i]
    double (*sum)(const double* x, std::size_t n);
    // sum_i w[i]*|a[i]-b[i]|
    double (*weighted_abs_diff)(const double* w, const double* a, const double* b,
                                std::size_t n);
    // out[i] = a[i]*b[i]
    void (*mul)(const double* a, const double* b, double* out, std::size_t n);
};

// Lane picked at startup: best supported ISA, overridable with the
// environment variable INVBID_KERNEL_ISA=scalar|avx2|neon.
const Ops& active();
const Ops& scalar_ops();
Isa active_isa();
const char* isa_name(Isa isa);

inline double dot(const double* a, const double* b, std::size_t n) {
    return active().dot(a, b, n);
}
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active().axpy(alpha, x, y, n);
}
inline double asum(const double* x, std::size_t n) { return active().asum(x, n); }
inline double max_abs(const double* x, std::size_t n) { return active().max_abs(x, n); }
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline double weighted_abs_diff(const double* w, const double* a, const double* b,
                                std::size_t n) {
    return active().weighted_abs_diff(w, a, b, n);
}
inline void mul(const double* a, const double* b, double* out, std::size_t n) {
    active().mul(a, b, out, n);
}

} // namespace invbid::kernels
