#pragma once

#include <cstddef>
#include <string>

namespace ifc::kernels {

// Batch arithmetic kernels behind the quadrature and Monte Carlo loops.
// A scalar reference implementation always exists; an AVX2 variant is
// selected at runtime when the CPU supports it.  Override with
// IFC_KERNELS=scalar|avx2|auto (default auto).
enum class Backend { scalar, avx2 };

Backend active();
std::string backend_name();

double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);

// Evaluates a dense polynomial at a batch of points stored axis-major
// (coords[a][i] is coordinate a of point i).  exps holds nterms rows of
// dim exponents each.  out[i] = sum_t coeffs[t] * prod_a coords[a][i]^e.
void poly_eval_batch(int dim, std::size_t nterms, const double* coeffs,
                     const int* exps, const double* const* coords,
                     std::size_t npts, double* out);

// #{ i : lo[a] <= coords[a][i] <= hi[a] for all a }   (closed box)
std::size_t count_in_box(int dim, const double* const* coords, std::size_t npts,
                         const double* lo, const double* hi);

// sum of w[i] over the points inside the closed box
double dot_in_box(int dim, const double* const* coords, std::size_t npts,
                  const double* lo, const double* hi, const double* w);

// Reference kernels.  The dispatched entry points above must agree with
// these exactly for poly_eval_batch and count_in_box (identical per-point
// arithmetic) and to reduction-order roundoff for sum/dot/dot_in_box.
namespace scalar {
double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void poly_eval_batch(int dim, std::size_t nterms, const double* coeffs,
                     const int* exps, const double* const* coords,
                     std::size_t npts, double* out);
std::size_t count_in_box(int dim, const double* const* coords, std::size_t npts,
                         const double* lo, const double* hi);
double dot_in_box(int dim, const double* const* coords, std::size_t npts,
                  const double* lo, const double* hi, const double* w);
}  // namespace scalar

#if defined(IFC_HAVE_AVX2)
namespace avx2 {
double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void poly_eval_batch(int dim, std::size_t nterms, const double* coeffs,
                     const int* exps, const double* const* coords,
                     std::size_t npts, double* out);
std::size_t count_in_box(int dim, const double* const* coords, std::size_t npts,
                         const double* lo, const double* hi);
double dot_in_box(int dim, const double* const* coords, std::size_t npts,
                  const double* lo, const double* hi, const double* w);
}  // namespace avx2
#endif

}  // namespace ifc::kernels
