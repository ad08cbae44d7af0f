#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "holoiso/poly.hpp"

namespace holoiso {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct FrameFlags {
    /// Entries strictly below the diagonal of the lower-right n x n block
    /// vanish (|u| < 1e-14).
    bool lower_block_upper_triangular = false;
    /// Diagonal entries u_22..u_{n+1,n+1} coincide within 1e-12.
    bool constant_diagonal = false;
    /// The common diagonal value, set only when it lies in the punctured
    /// unit disk.
    std::optional<Complex> zeta;
};

/// A validated (n+1) x (n+1) unitary matrix; n = dim - 1 is the ball
/// dimension of the target.
class UnitaryFrame {
public:
    [[nodiscard]] int dim() const { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] int ball_dim() const { return dim() - 1; }
    [[nodiscard]] const Matrix& entries() const { return entries_; }
    [[nodiscard]] const FrameFlags& flags() const { return flags_; }
    [[nodiscard]] Complex operator()(int i, int j) const { return entries_(i, j); }

    /// Lower-right n x n block U''.
    [[nodiscard]] Matrix lower_block() const { return entries_.bottomRightCorner(dim() - 1, dim() - 1); }
    /// max |U U^* - I|.
    [[nodiscard]] double unitarity_residual() const;

    friend UnitaryFrame check_unitary(const Matrix& m);

private:
    Matrix entries_;
    FrameFlags flags_;
};

inline constexpr double kUnitaryTolerance = 1e-10;

/// Validates unitarity (residual < 1e-10) and detects the structure flags.
/// Throws NotUnitary.
UnitaryFrame check_unitary(const Matrix& m);

/// diag(1,B) U diag(1,B^*) with B U'' B^* upper triangular (complex Schur),
/// diagonal ordered by ascending argument then ascending modulus.
std::pair<UnitaryFrame, Matrix> schur_normalize(const UnitaryFrame& u);

/// Structured element of U(n+1), n >= 2, with an upper-triangular lower
/// block and 0 < |u_jj| < 1. Seed 0 reproduces the canonical construction
/// (starting from the explicit 3x3 matrix); other seeds randomize the free
/// parameters of every extension step.
UnitaryFrame build_hessenberg_unitary(int n, std::uint64_t seed);

/// The constant-diagonal frame of the one-parameter family, with row 1
/// rephased so that u_11 = conj(zeta)^n. Throws InvalidZeta unless
/// 0 < |zeta| < 1.
UnitaryFrame build_family_unitary(Complex zeta, int n);

/// One extension step U(m) -> U(m+1): inserts a zero column after the first,
/// keeps rows 2..m of v, and fills the first two rows from an orthonormal
/// basis of span{e_2, (v_11, 0, v_12, ..., v_1m)} parametrized by
/// u_22 = a and a phase on row 1.
Matrix extend_structured(const Matrix& v, Complex a, double row1_phase);

/// Embeds a frame of size k into size k+1 by inserting row/column 2 with
/// diagonal entry `unit` (|unit| = 1) and zeros elsewhere.
Matrix insert_unit_slot(const Matrix& v, Complex unit);

}  // namespace holoiso
