#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ifc/geometry.hpp"

namespace ifc {

// Tensor-product Gauss-Legendre rule: `nodes` points per axis per panel,
// each axis split into 2^level equal panels.  Exact for polynomials of
// per-axis degree <= 2*nodes-1 at level 0.
struct QuadratureSpec {
    int nodes = 8;
    int level = 0;
};

struct GaussRule {
    std::vector<double> x;  // nodes on [-1,1], ascending
    std::vector<double> w;
};

// Cached and thread-safe.
const GaussRule& gauss_legendre(int n);

// Composite node layout along one axis of length `len` starting at `lo`.
struct AxisNodes {
    std::vector<double> pos;
    std::vector<double> w;
};
AxisNodes axis_nodes(double lo, double len, const QuadratureSpec& spec);

using RealIntegrand = std::function<double(const double*)>;
using ComplexIntegrand = std::function<std::complex<double>(const double*)>;

// Node-by-node accumulation in lexicographic node order (deterministic).
double integrate(const Cube& q, const QuadratureSpec& spec, const RealIntegrand& f);
std::complex<double> integrate(const Cube& q, const QuadratureSpec& spec,
                               const ComplexIntegrand& f);

// Integral of a scalar integrand over one face ((n-1)-dimensional).
double integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                      const RealIntegrand& f);
std::complex<double> integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                                    const ComplexIntegrand& f);

// Materialized tensor grid in axis-major storage for the batch kernels.
// coords[a][i] is coordinate a of node i; weights[i] the product weight.
struct NodeGrid {
    std::vector<std::vector<double>> coords;
    std::vector<double> weights;
    std::size_t size() const { return weights.size(); }
};

// Full-dimensional grid over a cube.
NodeGrid node_grid(const Cube& q, const QuadratureSpec& spec);

// Grid over a face; the fixed axis carries the constant plane coordinate so
// points are full-dimensional.
NodeGrid node_grid(const OrientedFace& face, const QuadratureSpec& spec);

}  // namespace ifc
