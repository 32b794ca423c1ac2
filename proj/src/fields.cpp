#include "ifc/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "ifc/kernels.hpp"

namespace ifc {

PolyField::PolyField(int dim, std::map<std::vector<int>, double> terms) : dim_(dim) {
    for (auto& [alpha, c] : terms) add_term(alpha, c);
}

PolyField PolyField::constant(int dim, double c) {
    PolyField f(dim);
    f.add_term(std::vector<int>(dim, 0), c);
    return f;
}

PolyField PolyField::monomial(int dim, std::vector<int> alpha, double c) {
    PolyField f(dim);
    f.add_term(std::move(alpha), c);
    return f;
}

void PolyField::add_term(std::vector<int> alpha, double c) {
    if (static_cast<int>(alpha.size()) != dim_)
        throw std::invalid_argument("poly term: multi-index length != dim");
    for (int e : alpha)
        if (e < 0) throw std::invalid_argument("poly term: negative exponent");
    if (c == 0.0) return;
    auto [it, inserted] = terms_.emplace(std::move(alpha), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
    coeffs_.clear();
    exps_.clear();
    coeffs_.reserve(terms_.size());
    exps_.reserve(terms_.size() * static_cast<std::size_t>(dim_));
    for (const auto& [a, coeff] : terms_) {
        coeffs_.push_back(coeff);
        exps_.insert(exps_.end(), a.begin(), a.end());
    }
}

double PolyField::eval(const double* x) const {
    // Single-point call through the same kernel algorithm keeps scalar and
    // batch evaluations bitwise identical.
    double out = 0.0;
    if (dim_ <= 16) {
        const double* axis[16];
        for (int a = 0; a < dim_; ++a) axis[a] = x + a;
        kernels::scalar::poly_eval_batch(dim_, coeffs_.size(), coeffs_.data(), exps_.data(),
                                         axis, 1, &out);
    } else {
        std::vector<const double*> axis(dim_);
        for (int a = 0; a < dim_; ++a) axis[a] = x + a;
        kernels::scalar::poly_eval_batch(dim_, coeffs_.size(), coeffs_.data(), exps_.data(),
                                         axis.data(), 1, &out);
    }
    return out;
}

void PolyField::eval_batch(const double* const* coords, std::size_t npts,
                           double* out) const {
    kernels::poly_eval_batch(dim_, coeffs_.size(), coeffs_.data(), exps_.data(), coords,
                             npts, out);
}

PolyField PolyField::derivative(int axis) const {
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("derivative: bad axis");
    PolyField out(dim_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[axis] == 0) continue;
        std::vector<int> beta = alpha;
        beta[axis] -= 1;
        out.add_term(std::move(beta), c * alpha[axis]);
    }
    return out;
}

PolyField PolyField::scaled(double s) const {
    PolyField out(dim_);
    for (const auto& [alpha, c] : terms_) out.add_term(alpha, c * s);
    return out;
}

PolyField operator+(const PolyField& a, const PolyField& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("poly add: dim mismatch");
    PolyField out = a;
    for (const auto& [alpha, c] : b.terms_) out.add_term(alpha, c);
    return out;
}

double poly_eval(const PolyField& f, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != f.dim())
        throw std::invalid_argument("poly_eval: point dim != field dim");
    return f.eval(x.data());
}

CPolyField cpoly_from_real(const PolyField& f) { return {f, PolyField(f.dim())}; }

VectorField make_vector_field(std::vector<PolyField> components) {
    if (components.empty()) throw std::invalid_argument("vector field: no components");
    const int n = static_cast<int>(components.size());
    for (const auto& c : components)
        if (c.dim() != n)
            throw std::invalid_argument("vector field: component dims must equal count");
    return VectorField{std::move(components)};
}

double divergence_at(const VectorField& f, const double* x) {
    double acc = 0.0;
    for (int a = 0; a < f.dim(); ++a) acc += f.components[a].derivative(a).eval(x);
    return acc;
}

double divergence_at(const VectorField& f, const std::vector<double>& x) {
    return divergence_at(f, x.data());
}

PolyField divergence_field(const VectorField& f) {
    PolyField out(f.dim());
    for (int a = 0; a < f.dim(); ++a) out = out + f.components[a].derivative(a);
    return out;
}

PolyField curl2_field(const PolyField& p, const PolyField& q) {
    if (p.dim() != 2 || q.dim() != 2) throw std::invalid_argument("curl2: needs dim 2");
    return q.derivative(0) + p.derivative(1).scaled(-1.0);
}

std::complex<double> dbar_at(const CPolyField& f, const double* z) {
    if (f.dim() != 2) throw std::invalid_argument("dbar: needs dim 2");
    const std::complex<double> fx = f.derivative(0).eval(z);
    const std::complex<double> fy = f.derivative(1).eval(z);
    return std::complex<double>(0.0, 1.0) * fx - fy;
}

CPolyField dbar_flux_density_field(const CPolyField& f) {
    if (f.dim() != 2) throw std::invalid_argument("dbar: needs dim 2");
    const CPolyField fx = f.derivative(0);
    const CPolyField fy = f.derivative(1);
    // i*fx - fy
    return {fx.im.scaled(-1.0) + fy.re.scaled(-1.0), fx.re + fy.im.scaled(-1.0)};
}

namespace {

double grid_integral(const NodeGrid& grid, const PolyField& f) {
    const std::size_t n = grid.size();
    std::vector<double> values(n);
    std::vector<const double*> coords(grid.coords.size());
    for (std::size_t a = 0; a < grid.coords.size(); ++a) coords[a] = grid.coords[a].data();
    f.eval_batch(coords.data(), n, values.data());
    return kernels::dot(values.data(), grid.weights.data(), n);
}

}  // namespace

double integrate(const Cube& q, const QuadratureSpec& spec, const PolyField& f) {
    if (f.dim() != q.dim()) throw std::invalid_argument("integrate: dim mismatch");
    return grid_integral(node_grid(q, spec), f);
}

double integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                      const PolyField& f) {
    if (f.dim() != face.parent.dim())
        throw std::invalid_argument("integrate_face: dim mismatch");
    return grid_integral(node_grid(face, spec), f);
}

std::complex<double> integrate(const Cube& q, const QuadratureSpec& spec,
                               const CPolyField& f) {
    const NodeGrid grid = node_grid(q, spec);
    return {grid_integral(grid, f.re), grid_integral(grid, f.im)};
}

std::complex<double> integrate_face(const OrientedFace& face, const QuadratureSpec& spec,
                                    const CPolyField& f) {
    const NodeGrid grid = node_grid(face, spec);
    return {grid_integral(grid, f.re), grid_integral(grid, f.im)};
}

std::vector<int> parse_multi_index(const std::string& key, int dim) {
    std::vector<int> alpha;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        const std::size_t comma = key.find(',', pos);
        const std::string tok = key.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
        if (tok.empty()) throw std::invalid_argument("multi-index '" + key + "': empty entry");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("multi-index '" + key + "': bad integer '" + tok + "'");
        }
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("multi-index '" + key + "': bad entry '" + tok + "'");
        alpha.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(alpha.size()) != dim)
        throw std::invalid_argument("multi-index '" + key + "': expected " +
                                    std::to_string(dim) + " entries");
    return alpha;
}

}  // namespace ifc
