#pragma once

#include <span>
#include <string>
#include <vector>

#include "holoiso/germ.hpp"
#include "holoiso/kernels.hpp"

namespace holoiso {

enum class DomainKind { I, II, III, IV };

/// Classical domain descriptor. I(p,q): p x q matrices; II(m), III(m):
/// m x m antisymmetric / symmetric matrices; IV(n): vectors in C^n.
struct DomainSpec {
    DomainKind kind = DomainKind::I;
    int p = 1;
    int q = 1;
    int m = 1;
    int n = 3;

    static DomainSpec type_I(int p, int q);
    static DomainSpec type_II(int m);
    static DomainSpec type_III(int m);
    static DomainSpec type_IV(int n);

    [[nodiscard]] std::string name() const;
};

struct DomainPoint {
    DomainSpec spec;
    Matrix matrix;  // I, II, III
    Vector vector;  // IV
};

/// Validates shape and (anti)symmetry within 1e-12. Throws ShapeMismatch.
DomainPoint make_point(const DomainSpec& spec, Matrix z);
DomainPoint make_point(const DomainSpec& spec, Vector z);

struct Membership {
    bool member = false;
    double margin = 0.0;
};

Membership membership(const DomainPoint& p);

/// det(I - Z^* Z) for I and III, its positive square root for II, and
/// 1 - sum |z|^2 + |sum z^2 / 2|^2 for IV. Throws NotMember.
double generic_norm(const DomainPoint& p);

/// The block embeddings: I(p,q) takes dim z = q - 1, II(m) takes
/// dim z = m - 3 (m >= 5), IV(n) ignores z. III is built by block_join.
/// Throws ShapeMismatch.
DomainPoint embed(const DomainSpec& spec, Complex w, std::span<const Complex> z);

/// diag(w, Z) for a point Z of III(m - 1).
DomainPoint block_join(Complex w, const DomainPoint& z);

/// max over the grid of |N(embed(f(w))) - (1 - |w|^2)|. For IV the source
/// is ignored (pass nullptr). Throws ShapeMismatch when the source ball
/// dimension does not fit the spec.
double composite_residual(const DomainSpec& spec, const DiskIsometry* source, std::span<const Complex> grid,
                          Exec exec = Exec::Parallel);

/// max |N(diag(w, Z)) - (1 - |w|^2) N(Z)| over paired samples.
double block_multiplicativity_residual(std::span<const Complex> ws, std::span<const DomainPoint> zs);

}  // namespace holoiso
