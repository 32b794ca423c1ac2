#pragma once

#include <cstdint>
#include <vector>

namespace ifc {

// Axis-aligned cube: lower corner plus one side length shared by all axes.
// Cubes are closed sets; containment includes the boundary.
struct Cube {
    std::vector<double> lower;
    double side = 1.0;

    int dim() const { return static_cast<int>(lower.size()); }
    double hi(int axis) const { return lower[axis] + side; }
    double measure() const;
    double diameter() const;
    std::vector<double> center() const;
    bool contains(const double* x) const;
    bool contains(const std::vector<double>& x) const { return contains(x.data()); }
};

Cube make_cube(std::vector<double> lower, double side);

struct CubeMetrics {
    double measure;
    double diameter;
};
CubeMetrics cube_metrics(const Cube& q);

// One of the 2n faces of a cube; the outward normal is sign * e_axis.
struct OrientedFace {
    Cube parent;
    int axis = 0;
    int sign = +1;

    double plane() const { return sign > 0 ? parent.hi(axis) : parent.lower[axis]; }
    double area() const;  // (n-1)-measure
};

// 2^n children of side/2, ordered lexicographically by corner offset.
std::vector<Cube> dyadic_children(const Cube& q);

// k^n cubes of side/k tiling q, lexicographic by corner offset (axis 0 most
// significant).
std::vector<Cube> grid_partition(const Cube& q, int k);

std::vector<OrientedFace> faces(const Cube& q);

// Placement family for density ladders: the cube centered at x, the 2^n
// cubes with x on a corner, and `extra` seeded uniform placements with the
// lower corner in [x-side, x]^n.  Every returned cube contains x.
std::vector<Cube> cubes_containing(const std::vector<double>& x, double side,
                                   int extra, std::uint64_t seed);

// Finite union of cubes with pairwise disjoint interiors.
struct Region {
    std::vector<Cube> cells;

    int dim() const { return cells.empty() ? 0 : cells.front().dim(); }
    double measure() const;
};

Region make_region(std::vector<Cube> cells);

// Faces left after removing exactly-matched opposite pairs.  Matching uses
// exact coordinate equality, so cells are expected on a common lattice.
std::vector<OrientedFace> boundary_faces(const Region& r);

struct Parallelepiped {
    std::vector<double> base;                // p' in R^3
    std::vector<std::vector<double>> spans;  // v1, v2, v3
};

Parallelepiped make_parallelepiped(std::vector<double> base,
                                   std::vector<double> v1,
                                   std::vector<double> v2,
                                   std::vector<double> v3);

// Signed volume det(v1, v2, v3).
double span_det(const Parallelepiped& p);

}  // namespace ifc
