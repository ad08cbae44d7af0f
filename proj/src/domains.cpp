#include "holoiso/domains.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "holoiso/errors.hpp"

namespace holoiso {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require(bool ok, const std::string& what) {
    if (!ok) throw ShapeMismatch(what);
}

double largest_singular_value(const Matrix& z) {
    if (z.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Matrix>(z).singularValues()(0);
}

double det_defect(const Matrix& z) {
    const Eigen::Index q = z.cols();
    const Matrix a = Matrix::Identity(q, q) - z.adjoint() * z;
    return a.partialPivLu().determinant().real();
}

}  // namespace

DomainSpec DomainSpec::type_I(int p, int q) {
    require(p >= 1 && q >= 1, "type I needs p, q >= 1");
    DomainSpec s;
    s.kind = DomainKind::I;
    s.p = p;
    s.q = q;
    return s;
}

DomainSpec DomainSpec::type_II(int m) {
    require(m >= 2, "type II needs m >= 2");
    DomainSpec s;
    s.kind = DomainKind::II;
    s.m = m;
    return s;
}

DomainSpec DomainSpec::type_III(int m) {
    require(m >= 1, "type III needs m >= 1");
    DomainSpec s;
    s.kind = DomainKind::III;
    s.m = m;
    return s;
}

DomainSpec DomainSpec::type_IV(int n) {
    require(n >= 3, "type IV needs n >= 3");
    DomainSpec s;
    s.kind = DomainKind::IV;
    s.n = n;
    return s;
}

std::string DomainSpec::name() const {
    switch (kind) {
        case DomainKind::I: return "I(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case DomainKind::II: return "II(" + std::to_string(m) + ")";
        case DomainKind::III: return "III(" + std::to_string(m) + ")";
        case DomainKind::IV: return "IV(" + std::to_string(n) + ")";
    }
    return "?";
}

DomainPoint make_point(const DomainSpec& spec, Matrix z) {
    switch (spec.kind) {
        case DomainKind::I:
            require(z.rows() == spec.p && z.cols() == spec.q, "expected a " + spec.name() + " matrix");
            break;
        case DomainKind::II:
            require(z.rows() == spec.m && z.cols() == spec.m, "expected an m x m matrix");
            require((z + z.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol, "type II point must be antisymmetric");
            break;
        case DomainKind::III:
            require(z.rows() == spec.m && z.cols() == spec.m, "expected an m x m matrix");
            require((z - z.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol, "type III point must be symmetric");
            break;
        case DomainKind::IV:
            throw ShapeMismatch("type IV points are vectors");
    }
    DomainPoint p;
    p.spec = spec;
    p.matrix = std::move(z);
    return p;
}

DomainPoint make_point(const DomainSpec& spec, Vector z) {
    require(spec.kind == DomainKind::IV, "only type IV points are vectors");
    require(z.size() == spec.n, "expected a vector of length " + std::to_string(spec.n));
    DomainPoint p;
    p.spec = spec;
    p.vector = std::move(z);
    return p;
}

Membership membership(const DomainPoint& p) {
    Membership out;
    if (p.spec.kind == DomainKind::IV) {
        const double s = p.vector.squaredNorm();
        const double h = std::norm(0.5 * (p.vector.array() * p.vector.array()).sum());
        out.margin = std::min(2.0 - s, 1.0 + h - s);
    } else {
        const double sigma = largest_singular_value(p.matrix);
        out.margin = 1.0 - sigma * sigma;
    }
    out.member = out.margin > 0.0;
    return out;
}

double generic_norm(const DomainPoint& p) {
    if (!membership(p).member) throw NotMember("point lies outside " + p.spec.name());
    switch (p.spec.kind) {
        case DomainKind::I:
        case DomainKind::III:
            return det_defect(p.matrix);
        case DomainKind::II:
            return std::sqrt(std::max(0.0, det_defect(p.matrix)));
        case DomainKind::IV: {
            const Complex half = 0.5 * (p.vector.array() * p.vector.array()).sum();
            return 1.0 - p.vector.squaredNorm() + std::norm(half);
        }
    }
    return 0.0;
}

DomainPoint embed(const DomainSpec& spec, Complex w, std::span<const Complex> z) {
    const auto dim = static_cast<int>(z.size());
    switch (spec.kind) {
        case DomainKind::I: {
            require(spec.p >= 2, "type I embedding needs p >= 2");
            require(dim == spec.q - 1, "type I embedding needs dim z = q - 1");
            Matrix a = Matrix::Zero(spec.p, spec.q);
            a(0, 0) = w;
            for (int j = 0; j < dim; ++j) a(1, j + 1) = z[j];
            return make_point(spec, std::move(a));
        }
        case DomainKind::II: {
            require(spec.m >= 5, "type II embedding needs m >= 5");
            require(dim == spec.m - 3, "type II embedding needs dim z = m - 3");
            Matrix a = Matrix::Zero(spec.m, spec.m);
            a(0, 1) = w;
            a(1, 0) = -w;
            for (int j = 0; j < dim; ++j) {
                a(2, 3 + j) = z[j];
                a(3 + j, 2) = -z[j];
            }
            return make_point(spec, std::move(a));
        }
        case DomainKind::III:
            throw ShapeMismatch("type III points are built with block_join");
        case DomainKind::IV: {
            Vector v = Vector::Zero(spec.n);
            v(0) = Complex{0.0, 1.0} * w / 4.0;
            v(1) = std::sqrt(15.0) * w / 4.0;
            const Complex radicand = 1.0 - 7.0 / 8.0 * w * w;
            if (radicand.real() <= 0.0 && radicand.imag() == 0.0) {
                throw OutsideDomain("square root branch cut reached");
            }
            v(2) = 1.0 - std::sqrt(radicand);
            return make_point(spec, std::move(v));
        }
    }
    throw ShapeMismatch("unknown domain");
}

DomainPoint block_join(Complex w, const DomainPoint& z) {
    require(z.spec.kind == DomainKind::III, "block_join takes a type III point");
    const int m = z.spec.m + 1;
    Matrix a = Matrix::Zero(m, m);
    a(0, 0) = w;
    a.bottomRightCorner(m - 1, m - 1) = z.matrix;
    return make_point(DomainSpec::type_III(m), std::move(a));
}

double composite_residual(const DomainSpec& spec, const DiskIsometry* source, std::span<const Complex> grid,
                          Exec exec) {
    switch (spec.kind) {
        case DomainKind::I:
            require(source && source->ball_dim() == spec.q - 1, "type I composite needs n = q - 1");
            break;
        case DomainKind::II:
            require(source && source->ball_dim() == spec.m - 3, "type II composite needs n = m - 3");
            break;
        case DomainKind::III:
            throw ShapeMismatch("type III uses block_multiplicativity_residual");
        case DomainKind::IV:
            break;
    }
    const auto values = map_indices<double>(static_cast<int>(grid.size()), exec, [&](int i) {
        const Complex w = grid[i];
        DomainPoint pt;
        if (spec.kind == DomainKind::IV) {
            pt = embed(spec, w, {});
        } else {
            const TargetPoint f = evaluate(*source, w);
            pt = embed(spec, f.disk, f.ball);
        }
        return std::abs(generic_norm(pt) - (1.0 - std::norm(w)));
    });
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double block_multiplicativity_residual(std::span<const Complex> ws, std::span<const DomainPoint> zs) {
    require(ws.size() == zs.size(), "paired samples expected");
    double worst = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const double joined = generic_norm(block_join(ws[i], zs[i]));
        worst = std::max(worst, std::abs(joined - (1.0 - std::norm(ws[i])) * generic_norm(zs[i])));
    }
    return worst;
}

}  // namespace holoiso
