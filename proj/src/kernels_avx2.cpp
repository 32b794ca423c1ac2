#if defined(IFC_HAVE_AVX2)

#include <immintrin.h>

#include "ifc/kernels.hpp"

namespace ifc::kernels::avx2 {

namespace {

// Fixed-order horizontal reduction: (l0 + l1) + (l2 + l3).
inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const double l0 = _mm_cvtsd_f64(lo);
    const double l1 = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
    const double l2 = _mm_cvtsd_f64(hi);
    const double l3 = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
    return (l0 + l1) + (l2 + l3);
}

inline __m256d in_box_mask(int dim, const double* const* coords, std::size_t i,
                           const double* lo, const double* hi) {
    __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (int a = 0; a < dim; ++a) {
        const __m256d c = _mm256_loadu_pd(coords[a] + i);
        const __m256d ge = _mm256_cmp_pd(c, _mm256_set1_pd(lo[a]), _CMP_GE_OQ);
        const __m256d le = _mm256_cmp_pd(c, _mm256_set1_pd(hi[a]), _CMP_LE_OQ);
        mask = _mm256_and_pd(mask, _mm256_and_pd(ge, le));
    }
    return mask;
}

}  // namespace

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double r = hsum(acc);
    for (; i < n; ++i) r += x[i];
    return r;
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, prod);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

void poly_eval_batch(int dim, std::size_t nterms, const double* coeffs,
                     const int* exps, const double* const* coords,
                     std::size_t npts, double* out) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= npts; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < nterms; ++t) {
            __m256d v = _mm256_set1_pd(coeffs[t]);
            const int* e = exps + t * static_cast<std::size_t>(dim);
            for (int a = 0; a < dim; ++a) {
                int ex = e[a];
                __m256d p = _mm256_loadu_pd(coords[a] + i);
                __m256d r = one;
                while (ex) {
                    if (ex & 1) r = _mm256_mul_pd(r, p);
                    p = _mm256_mul_pd(p, p);
                    ex >>= 1;
                }
                v = _mm256_mul_pd(v, r);
            }
            acc = _mm256_add_pd(acc, v);
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < npts) {
        const double* tails[16];
        for (int a = 0; a < dim; ++a) tails[a] = coords[a] + i;
        scalar::poly_eval_batch(dim, nterms, coeffs, exps, tails, npts - i, out + i);
    }
}

std::size_t count_in_box(int dim, const double* const* coords, std::size_t npts,
                         const double* lo, const double* hi) {
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= npts; i += 4) {
        const int bits = _mm256_movemask_pd(in_box_mask(dim, coords, i, lo, hi));
        count += static_cast<std::size_t>(__builtin_popcount(bits));
    }
    if (i < npts) {
        const double* tails[16];
        for (int a = 0; a < dim; ++a) tails[a] = coords[a] + i;
        count += scalar::count_in_box(dim, tails, npts - i, lo, hi);
    }
    return count;
}

double dot_in_box(int dim, const double* const* coords, std::size_t npts,
                  const double* lo, const double* hi, const double* w) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= npts; i += 4) {
        const __m256d mask = in_box_mask(dim, coords, i, lo, hi);
        acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(w + i)));
    }
    double r = hsum(acc);
    if (i < npts) {
        const double* tails[16];
        for (int a = 0; a < dim; ++a) tails[a] = coords[a] + i;
        r += scalar::dot_in_box(dim, tails, npts - i, lo, hi, w + i);
    }
    return r;
}

}  // namespace ifc::kernels::avx2

#endif  // IFC_HAVE_AVX2
