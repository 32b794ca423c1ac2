#include "ifc/kernels.hpp"

namespace ifc::kernels::scalar {

double sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

// Exponentiation by squaring.  The AVX2 kernel runs the identical
// multiply sequence per lane so the two backends agree bit for bit.
static inline double ipow(double x, int e) {
    double r = 1.0;
    double p = x;
    while (e) {
        if (e & 1) r *= p;
        p *= p;
        e >>= 1;
    }
    return r;
}

void poly_eval_batch(int dim, std::size_t nterms, const double* coeffs,
                     const int* exps, const double* const* coords,
                     std::size_t npts, double* out) {
    for (std::size_t i = 0; i < npts; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < nterms; ++t) {
            double v = coeffs[t];
            const int* e = exps + t * static_cast<std::size_t>(dim);
            for (int a = 0; a < dim; ++a) v *= ipow(coords[a][i], e[a]);
            acc += v;
        }
        out[i] = acc;
    }
}

std::size_t count_in_box(int dim, const double* const* coords, std::size_t npts,
                         const double* lo, const double* hi) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < npts; ++i) {
        bool inside = true;
        for (int a = 0; a < dim; ++a) {
            const double c = coords[a][i];
            inside = inside && (c >= lo[a]) && (c <= hi[a]);
        }
        count += inside ? 1 : 0;
    }
    return count;
}

double dot_in_box(int dim, const double* const* coords, std::size_t npts,
                  const double* lo, const double* hi, const double* w) {
    double acc = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        bool inside = true;
        for (int a = 0; a < dim; ++a) {
            const double c = coords[a][i];
            inside = inside && (c >= lo[a]) && (c <= hi[a]);
        }
        if (inside) acc += w[i];
    }
    return acc;
}

}  // namespace ifc::kernels::scalar
