#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ifc {

// Small dense square matrix, row-major.
struct Mat {
    int n = 0;
    std::vector<double> a;

    Mat() = default;
    explicit Mat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
    static Mat identity(int size);

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

double det(const Mat& m);      // Gaussian elimination with partial pivoting
Mat inverse(const Mat& m);     // throws on singular input
std::vector<double> matvec(const Mat& m, const std::vector<double>& x);

struct JacobianResult {
    Mat matrix;
    double determinant = 0.0;
    std::string method;  // "analytic" | "central-difference"
    double step = 0.0;
};

using PointFn = std::function<void(const double*, double*)>;
using JacobianFn = std::function<Mat(const double*)>;

// Named mapping with optional inverse and analytic Jacobians.  All values
// are immutable after construction.
struct Mapping {
    std::string name;
    int dim = 0;
    PointFn forward;
    PointFn inverse;              // empty when absent
    JacobianFn analytic_jacobian; // empty when absent
    JacobianFn analytic_inverse_jacobian;

    bool has_inverse() const { return static_cast<bool>(inverse); }
    std::vector<double> apply(const std::vector<double>& x) const;
    std::vector<double> apply_inverse(const std::vector<double>& y) const;

    // The same mapping with the roles of forward and inverse swapped.
    Mapping inverted() const;
};

// Analytic Jacobian when present, central differences otherwise with step
// h_j = cbrt(eps) * max(1, |x_j|) per axis.
JacobianResult jacobian(const Mapping& t, const double* x);
JacobianResult jacobian(const Mapping& t, const std::vector<double>& x);

// Registry entries (names are part of the scenario-file contract):
//   identity         any dim (param: dim)
//   linear           any dim (param: matrix)
//   linear3d         3x3 matrix (param: matrix)
//   shear            (x, y + x^2)
//   cubic_degenerate (x^3, y); its Jacobian vanishes on the line x = 0
Mapping identity_mapping(int dim);
Mapping linear_mapping(const Mat& m);
Mapping shear_mapping();
Mapping cubic_degenerate_mapping();
bool is_registry_mapping(const std::string& name);
Mapping make_registry_mapping(const std::string& name, int dim,
                              const std::optional<Mat>& matrix);

}  // namespace ifc
