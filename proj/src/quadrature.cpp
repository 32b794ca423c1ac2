#include "ifc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ifc {

namespace {

GaussRule compute_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need >= 1 node");
    GaussRule rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Recompute dp at the converged node for the weight.
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Mirror: roots come out in descending order of |x| from the guess.
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.x[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

AxisNodes axis_nodes(double lo, double len, const QuadratureSpec& spec) {
    if (spec.nodes < 1 || spec.level < 0)
        throw std::invalid_argument("quadrature spec: nodes >= 1, level >= 0");
    const GaussRule& rule = gauss_legendre(spec.nodes);
    const int panels = 1 << spec.level;
    const double h = len / panels;
    AxisNodes out;
    out.pos.reserve(static_cast<std::size_t>(panels) * rule.x.size());
    out.w.reserve(out.pos.capacity());
    for (int p = 0; p < panels; ++p) {
        const double start = lo + h * p;
        for (std::size_t j = 0; j < rule.x.size(); ++j) {
            out.pos.push_back(start + h * (rule.x[j] + 1.0) / 2.0);
            out.w.push_back(rule.w[j] * h / 2.0);
        }
    }
    return out;
}

namespace {

// Iterates the tensor product in lexicographic node order (axis 0 most
// significant), invoking fn(point, weight).
template <typename Fn>
void for_each_node(const std::vector<AxisNodes>& axes, Fn&& fn) {
    const int n = static_cast<int>(axes.size());
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> pt(n);
    for (;;) {
        double w = 1.0;
        for (int a = 0; a < n; ++a) {
            pt[a] = axes[a].pos[idx[a]];
            w *= axes[a].w[idx[a]];
        }
        fn(pt.data(), w);
        int a = n - 1;
        for (; a >= 0; --a) {
            if (++idx[a] < axes[a].pos.size()) break;
            idx[a] = 0;
        }
        if (a < 0) break;
    }
}

std::vector<AxisNodes> cube_axes(const Cube& q, const QuadratureSpec& spec) {
    std::vector<AxisNodes> axes;
    axes.reserve(q.dim());
    for (int a = 0; a < q.dim(); ++a) axes.push_back(axis_nodes(q.lower[a], q.side, spec));
    return axes;
}

std::vector<AxisNodes> face_axes(const OrientedFace& face, const QuadratureSpec& spec) {
    const Cube& q = face.parent;
    std::vector<AxisNodes> axes;
    axes.reserve(q.dim());
    for (int a = 0; a < q.dim(); ++a) {
        if (a == face.axis) {
            AxisNodes fixed;
            fixed.pos.push_back(face.plane());
            fixed.w.push_back(1.0);
            axes.push_back(std::move(fixed));
        } else {
            axes.push_back(axis_nodes(q.lower[a], q.side, spec));
        }
    }
    return axes;
}

}  // namespace

double integrate(const Cube& q, const QuadratureSpec& spec, const RealIntegrand& f) {
    double acc = 0.0;
    for_each_node(cube_axes(q, spec), [&](const double* pt, double w) { acc += w * f(pt); });
    return acc;
}

std::complex<double> integrate(const Cube& q, const QuadratureSpec& spec,
                               const ComplexIntegrand& f) {
    std::complex<double> acc = 0.0;
    for_each_node(cube_axes(q, spec), [&](const double* pt, double w) { acc += w * f(pt); });
    return acc;
}

double integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                      const RealIntegrand& f) {
    double acc = 0.0;
    for_each_node(face_axes(face, spec), [&](const double* pt, double w) { acc += w * f(pt); });
    return acc;
}

std::complex<double> integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                                    const ComplexIntegrand& f) {
    std::complex<double> acc = 0.0;
    for_each_node(face_axes(face, spec), [&](const double* pt, double w) { acc += w * f(pt); });
    return acc;
}

namespace {

NodeGrid materialize(const std::vector<AxisNodes>& axes) {
    const int n = static_cast<int>(axes.size());
    std::size_t total = 1;
    for (const auto& ax : axes) total *= ax.pos.size();
    NodeGrid grid;
    grid.coords.assign(n, std::vector<double>(total));
    grid.weights.assign(total, 1.0);
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t i = 0; i < total; ++i) {
        double w = 1.0;
        for (int a = 0; a < n; ++a) {
            grid.coords[a][i] = axes[a].pos[idx[a]];
            w *= axes[a].w[idx[a]];
        }
        grid.weights[i] = w;
        for (int a = n - 1; a >= 0; --a) {
            if (++idx[a] < axes[a].pos.size()) break;
            idx[a] = 0;
        }
    }
    return grid;
}

}  // namespace

NodeGrid node_grid(const Cube& q, const QuadratureSpec& spec) {
    return materialize(cube_axes(q, spec));
}

NodeGrid node_grid(const OrientedFace& face, const QuadratureSpec& spec) {
    return materialize(face_axes(face, spec));
}

}  // namespace ifc
