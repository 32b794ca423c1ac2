#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ifc/quadrature.hpp"

namespace ifc {

// Dense multivariate polynomial with real coefficients, held as a
// multi-index -> coefficient table.  Evaluation is exact polynomial
// arithmetic; the flattened arrays feed the batch kernels.
class PolyField {
public:
    PolyField() = default;
    explicit PolyField(int dim) : dim_(dim) {}
    PolyField(int dim, std::map<std::vector<int>, double> terms);

    static PolyField constant(int dim, double c);
    static PolyField monomial(int dim, std::vector<int> alpha, double c);

    int dim() const { return dim_; }
    const std::map<std::vector<int>, double>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(std::vector<int> alpha, double c);

    double eval(const double* x) const;
    double eval(const std::vector<double>& x) const { return eval(x.data()); }
    void eval_batch(const double* const* coords, std::size_t npts, double* out) const;

    PolyField derivative(int axis) const;
    PolyField scaled(double s) const;

    friend PolyField operator+(const PolyField& a, const PolyField& b);

private:
    int dim_ = 0;
    std::map<std::vector<int>, double> terms_;
    std::vector<double> coeffs_;
    std::vector<int> exps_;
};

double poly_eval(const PolyField& f, const std::vector<double>& x);

// Complex-valued polynomial over real variables, carried as re + i*im.
struct CPolyField {
    PolyField re, im;

    int dim() const { return re.dim(); }
    std::complex<double> eval(const double* x) const {
        return {re.eval(x), im.eval(x)};
    }
    std::complex<double> eval(const std::vector<double>& x) const { return eval(x.data()); }
    CPolyField derivative(int axis) const { return {re.derivative(axis), im.derivative(axis)}; }
};

CPolyField cpoly_from_real(const PolyField& f);

struct VectorField {
    std::vector<PolyField> components;

    int dim() const { return static_cast<int>(components.size()); }
};

VectorField make_vector_field(std::vector<PolyField> components);

double divergence_at(const VectorField& f, const double* x);
double divergence_at(const VectorField& f, const std::vector<double>& x);
PolyField divergence_field(const VectorField& f);

// curl of the 1-form P dx + Q dy: Q_x - P_y.
PolyField curl2_field(const PolyField& p, const PolyField& q);

// Area density of the contour integral of f dz: 2i * d f / d zbar,
// i.e. i*f_x - f_y.
std::complex<double> dbar_at(const CPolyField& f, const double* z);
CPolyField dbar_flux_density_field(const CPolyField& f);

// Quadrature of a polynomial over a cube / face via the batch kernels.
double integrate(const Cube& q, const QuadratureSpec& spec, const PolyField& f);
double integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                      const PolyField& f);
std::complex<double> integrate(const Cube& q, const QuadratureSpec& spec,
                               const CPolyField& f);
std::complex<double> integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                                    const CPolyField& f);

// Multi-index keys of scenario coefficient tables, e.g. "2,0".
std::vector<int> parse_multi_index(const std::string& key, int dim);

}  // namespace ifc
