#include "hdbf/kernels.hpp"

namespace hdbf::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using SumsqFn = double (*)(const double*, std::size_t);
using SumFn = double (*)(const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);

bool detect_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Dispatch {
    DotFn dot;
    SumsqFn sumsq;
    SumFn sum;
    AxpyFn axpy;
    const char* name;

    Dispatch() {
#if defined(__x86_64__) || defined(_M_X64)
        if (detect_avx2()) {
            dot = dot_avx2;
            sumsq = sumsq_avx2;
            sum = sum_avx2;
            axpy = axpy_avx2;
            name = "avx2";
            return;
        }
#endif
        dot = dot_scalar;
        sumsq = sumsq_scalar;
        sum = sum_scalar;
        axpy = axpy_scalar;
        name = "scalar";
    }
};

const Dispatch& table() {
    static const Dispatch d;
    return d;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }
double sumsq(const double* a, std::size_t n) { return table().sumsq(a, n); }
double sum(const double* a, std::size_t n) { return table().sum(a, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { table().axpy(alpha, x, y, n); }

const char* active_backend() { return table().name; }
bool avx2_available() { return detect_avx2(); }

}  // namespace hdbf::kernels
