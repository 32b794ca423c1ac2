#include "ifc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "ifc/rng.hpp"

namespace ifc {

double Cube::measure() const {
    double m = 1.0;
    for (int a = 0; a < dim(); ++a) m *= side;
    return m;
}

double Cube::diameter() const { return side * std::sqrt(static_cast<double>(dim())); }

std::vector<double> Cube::center() const {
    std::vector<double> c(lower);
    for (auto& v : c) v += side / 2.0;
    return c;
}

bool Cube::contains(const double* x) const {
    for (int a = 0; a < dim(); ++a)
        if (x[a] < lower[a] || x[a] > lower[a] + side) return false;
    return true;
}

Cube make_cube(std::vector<double> lower, double side) {
    if (lower.empty()) throw std::invalid_argument("cube: dimension must be >= 1");
    if (!(side > 0.0) || !std::isfinite(side))
        throw std::invalid_argument("cube: side must be positive and finite");
    for (double c : lower)
        if (!std::isfinite(c)) throw std::invalid_argument("cube: non-finite coordinate");
    return Cube{std::move(lower), side};
}

CubeMetrics cube_metrics(const Cube& q) { return {q.measure(), q.diameter()}; }

double OrientedFace::area() const {
    double m = 1.0;
    for (int a = 0; a < parent.dim() - 1; ++a) m *= parent.side;
    return m;
}

std::vector<Cube> dyadic_children(const Cube& q) { return grid_partition(q, 2); }

std::vector<Cube> grid_partition(const Cube& q, int k) {
    if (k < 1) throw std::invalid_argument("grid_partition: k must be >= 1");
    const int n = q.dim();
    const double child_side = q.side / k;
    std::size_t total = 1;
    for (int a = 0; a < n; ++a) total *= static_cast<std::size_t>(k);

    std::vector<Cube> out;
    out.reserve(total);
    std::vector<int> digit(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Cube child;
        child.side = child_side;
        child.lower.resize(n);
        for (int a = 0; a < n; ++a)
            child.lower[a] = q.lower[a] + (q.side * digit[a]) / k;
        out.push_back(std::move(child));
        // odometer with axis 0 most significant => lexicographic offsets
        for (int a = n - 1; a >= 0; --a) {
            if (++digit[a] < k) break;
            digit[a] = 0;
        }
    }
    return out;
}

std::vector<OrientedFace> faces(const Cube& q) {
    std::vector<OrientedFace> out;
    out.reserve(2 * static_cast<std::size_t>(q.dim()));
    for (int a = 0; a < q.dim(); ++a)
        for (int s : {-1, +1}) out.push_back(OrientedFace{q, a, s});
    return out;
}

std::vector<Cube> cubes_containing(const std::vector<double>& x, double side,
                                   int extra, std::uint64_t seed) {
    if (!(side > 0.0)) throw std::invalid_argument("cubes_containing: side must be positive");
    const int n = static_cast<int>(x.size());
    std::vector<Cube> out;
    out.reserve(1u + (1u << n) + static_cast<unsigned>(extra));

    Cube centered;
    centered.side = side;
    centered.lower.resize(n);
    for (int a = 0; a < n; ++a) centered.lower[a] = x[a] - side / 2.0;
    out.push_back(std::move(centered));

    const std::size_t corners = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < corners; ++mask) {
        Cube c;
        c.side = side;
        c.lower.resize(n);
        for (int a = 0; a < n; ++a) {
            const bool off = (mask >> (n - 1 - a)) & 1u;  // lexicographic offsets
            c.lower[a] = off ? x[a] - side : x[a];
        }
        out.push_back(std::move(c));
    }

    Xoshiro256 rng(mix_seed(seed, 0x706c6163656dULL));
    for (int i = 0; i < extra; ++i) {
        Cube c;
        c.side = side;
        c.lower.resize(n);
        for (int a = 0; a < n; ++a) c.lower[a] = x[a] - side * rng.uniform();
        out.push_back(std::move(c));
    }
    return out;
}

double Region::measure() const {
    double m = 0.0;
    for (const auto& c : cells) m += c.measure();
    return m;
}

namespace {

bool interiors_overlap(const Cube& a, const Cube& b) {
    for (int ax = 0; ax < a.dim(); ++ax)
        if (a.lower[ax] >= b.hi(ax) || b.lower[ax] >= a.hi(ax)) return false;
    return true;
}

}  // namespace

Region make_region(std::vector<Cube> cells) {
    if (cells.empty()) throw std::invalid_argument("region: needs at least one cell");
    const int n = cells.front().dim();
    for (const auto& c : cells)
        if (c.dim() != n) throw std::invalid_argument("region: mixed cell dimensions");
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (interiors_overlap(cells[i], cells[j]))
                throw std::invalid_argument("region: cells " + std::to_string(i) + " and " +
                                            std::to_string(j) + " have overlapping interiors");
    return Region{std::move(cells)};
}

std::vector<OrientedFace> boundary_faces(const Region& r) {
    const int n = r.dim();
    // Key: axis, plane coordinate, side length, lower corner on the other axes.
    using Key = std::vector<double>;
    struct Entry {
        std::size_t cell;
        int sign;
    };
    std::map<Key, std::vector<Entry>> table;

    auto face_key = [&](const Cube& c, int axis, int sign) {
        Key k;
        k.reserve(3 + static_cast<std::size_t>(n));
        k.push_back(static_cast<double>(axis));
        k.push_back((sign > 0 ? c.hi(axis) : c.lower[axis]) + 0.0);
        k.push_back(c.side);
        for (int a = 0; a < n; ++a)
            if (a != axis) k.push_back(c.lower[a] + 0.0);
        return k;
    };

    for (std::size_t i = 0; i < r.cells.size(); ++i)
        for (int a = 0; a < n; ++a)
            for (int s : {-1, +1})
                table[face_key(r.cells[i], a, s)].push_back({i, s});

    std::vector<char> matched(r.cells.size() * 2 * n, 0);
    auto slot = [&](std::size_t cell, int axis, int sign) {
        return cell * 2 * n + 2 * static_cast<std::size_t>(axis) + (sign > 0 ? 1 : 0);
    };
    for (const auto& [key, entries] : table) {
        if (entries.size() == 2 && entries[0].sign != entries[1].sign) {
            const int axis = static_cast<int>(key[0]);
            matched[slot(entries[0].cell, axis, entries[0].sign)] = 1;
            matched[slot(entries[1].cell, axis, entries[1].sign)] = 1;
        }
    }

    std::vector<OrientedFace> out;
    for (std::size_t i = 0; i < r.cells.size(); ++i)
        for (int a = 0; a < n; ++a)
            for (int s : {-1, +1})
                if (!matched[slot(i, a, s)]) out.push_back(OrientedFace{r.cells[i], a, s});
    return out;
}

Parallelepiped make_parallelepiped(std::vector<double> base, std::vector<double> v1,
                                   std::vector<double> v2, std::vector<double> v3) {
    if (base.size() != 3 || v1.size() != 3 || v2.size() != 3 || v3.size() != 3)
        throw std::invalid_argument("parallelepiped: expects 3-vectors");
    Parallelepiped p{std::move(base), {std::move(v1), std::move(v2), std::move(v3)}};
    double scale = 0.0;
    for (const auto& v : p.spans)
        for (double c : v) scale = std::max(scale, std::abs(c));
    if (std::abs(span_det(p)) <= 1e-12 * std::max(1.0, scale * scale * scale))
        throw std::invalid_argument("parallelepiped: degenerate spans");
    return p;
}

double span_det(const Parallelepiped& p) {
    const auto& a = p.spans[0];
    const auto& b = p.spans[1];
    const auto& c = p.spans[2];
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace ifc
