#include "ifc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ifc::kernels {

namespace {

struct Ops {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    void (*poly_eval_batch)(int, std::size_t, const double*, const int*,
                            const double* const*, std::size_t, double*);
    std::size_t (*count_in_box)(int, const double* const*, std::size_t,
                                const double*, const double*);
    double (*dot_in_box)(int, const double* const*, std::size_t, const double*,
                         const double*, const double*);
};

constexpr Ops kScalarOps = {&scalar::sum, &scalar::dot, &scalar::poly_eval_batch,
                            &scalar::count_in_box, &scalar::dot_in_box};

#if defined(IFC_HAVE_AVX2)
constexpr Ops kAvx2Ops = {&avx2::sum, &avx2::dot, &avx2::poly_eval_batch,
                          &avx2::count_in_box, &avx2::dot_in_box};
#endif

bool cpu_has_avx2() {
#if defined(IFC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_backend() {
    const char* env = std::getenv("IFC_KERNELS");
    const std::string req = env ? env : "auto";
    if (req == "scalar") return Backend::scalar;
    if (req == "avx2") {
#if defined(IFC_HAVE_AVX2)
        if (cpu_has_avx2()) return Backend::avx2;
        throw std::runtime_error("IFC_KERNELS=avx2 but the CPU lacks AVX2");
#else
        throw std::runtime_error("IFC_KERNELS=avx2 but this build has no AVX2 kernels");
#endif
    }
    if (req != "auto")
        throw std::runtime_error("IFC_KERNELS must be scalar, avx2 or auto; got '" + req + "'");
#if defined(IFC_HAVE_AVX2)
    if (cpu_has_avx2()) return Backend::avx2;
#endif
    return Backend::scalar;
}

const Ops& dispatch() {
    static const Ops* ops = [] {
#if defined(IFC_HAVE_AVX2)
        if (pick_backend() == Backend::avx2) return &kAvx2Ops;
#else
        (void)pick_backend();
#endif
        return &kScalarOps;
    }();
    return *ops;
}

}  // namespace

Backend active() {
#if defined(IFC_HAVE_AVX2)
    return &dispatch() == &kAvx2Ops ? Backend::avx2 : Backend::scalar;
#else
    dispatch();
    return Backend::scalar;
#endif
}

std::string backend_name() { return active() == Backend::avx2 ? "avx2" : "scalar"; }

double sum(const double* x, std::size_t n) { return dispatch().sum(x, n); }

double dot(const double* a, const double* b, std::size_t n) {
    return dispatch().dot(a, b, n);
}

void poly_eval_batch(int dim, std::size_t nterms, const double* coeffs,
                     const int* exps, const double* const* coords,
                     std::size_t npts, double* out) {
    // The vector kernels keep per-point tail state on the stack; fall back
    // to the reference loop for dimensions beyond that.
    if (dim > 16) {
        scalar::poly_eval_batch(dim, nterms, coeffs, exps, coords, npts, out);
        return;
    }
    dispatch().poly_eval_batch(dim, nterms, coeffs, exps, coords, npts, out);
}

std::size_t count_in_box(int dim, const double* const* coords, std::size_t npts,
                         const double* lo, const double* hi) {
    if (dim > 16) return scalar::count_in_box(dim, coords, npts, lo, hi);
    return dispatch().count_in_box(dim, coords, npts, lo, hi);
}

double dot_in_box(int dim, const double* const* coords, std::size_t npts,
                  const double* lo, const double* hi, const double* w) {
    if (dim > 16) return scalar::dot_in_box(dim, coords, npts, lo, hi, w);
    return dispatch().dot_in_box(dim, coords, npts, lo, hi, w);
}

}  // namespace ifc::kernels
