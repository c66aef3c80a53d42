#pragma once

#include <string>
#include <vector>

#include "atlas/hurwitz.hpp"
#include "atlas/liealg.hpp"

namespace atlas {

/// A 3x3 hermitean matrix over a Hurwitz algebra: three scalar diagonal
/// entries and three off-diagonal entries stored once,
///
///   [ alpha   a      bbar ]
///   [ abar    beta   c    ]
///   [ b       cbar   gamma].
struct JordanElement {
    std::array<FieldScalar, 3> diag;
    std::array<HurwitzElement, 3> off;  // a, b, c
};

/// The Jordan algebra J3^n of hermitean 3x3 matrices over the Hurwitz
/// algebra of dimension n, under x o y = (xy + yx)/2. Elements are handled
/// as exact coordinate vectors on the basis {E1,E2,E3} followed by the
/// off-diagonal slots a(u_t), b(u_t), c(u_t); dimension 3 + 3n.
class JordanAlgebra {
public:
    explicit JordanAlgebra(int hurwitz_dim);

    int hurwitz_dim() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vec unit() const;
    Vec basis_vec(int index) const;
    Vec coords_of(const JordanElement& e) const;
    JordanElement element_of(const Vec& coords) const;

    /// x o y = (xy + yx)/2; the free matrix product is symmetrized and the
    /// result is asserted hermitean.
    Vec circ(const Vec& x, const Vec& y) const;

    /// Left multiplication L(x): y -> x o y.
    Mat left_mult(const Vec& x) const;
    const Mat& basis_left_mult(int index) const { return left_ops_[index]; }

    FieldScalar trace_of(const Vec& x) const;
    Vec traceless(const Vec& x) const;
    /// Trace form <x,y> = T(x o y).
    FieldScalar trace_form(const Vec& x, const Vec& y) const;
    /// Basis of the traceless subspace J0 (dimension 2 + 3n).
    std::vector<Vec> traceless_basis() const;

    /// U_x = 2 L(x)^2 - L(x o x).
    Mat quadratic_U(const Vec& x) const;
    /// V_{x,y} z = (U_{x+z} - U_x - U_z) y, assembled as the operator
    /// 2 (L_x L_y - L_y L_x + L_{x o y}).
    Mat linearized_V(const Vec& x, const Vec& y) const;
    /// The defining polarization, column by column; the independent route
    /// used to validate linearized_V.
    Mat linearized_V_by_polarization(const Vec& x, const Vec& y) const;

private:
    int n_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> circ_table_;  // [i][j] -> coords
    std::vector<Mat> left_ops_;
};

/// Der(J) = [L(J), L(J)] with exact structure constants; dimensions
/// 3, 8, 21, 52 for n = 1, 2, 4, 8.
class JordanDerivationAlgebra {
public:
    explicit JordanDerivationAlgebra(const JordanAlgebra& jordan);

    const std::vector<Mat>& ops() const { return ops_; }
    const LieAlgebra& algebra() const { return algebra_; }
    int dim() const { return (int)ops_.size(); }

    /// Exact coordinates over ops(); throws when outside the span.
    std::vector<FieldScalar> express(const Mat& op) const;
    /// Coordinates of [L_i, L_j] for basis indices, precomputed.
    const std::vector<FieldScalar>& left_commutator_coords(int i, int j) const;

private:
    int jordan_dim_;
    std::vector<Mat> ops_;
    LieAlgebra algebra_{std::vector<std::string>{}};
    SpanBasis span_{0};
    std::vector<std::vector<std::vector<FieldScalar>>> pair_coords_;  // i<j
    std::vector<FieldScalar> zero_;
};

/// Dimension of str0(J) = L(J0) + Der(J): 8, 16, 35, 78 for n = 1,2,4,8.
int reduced_structure_dim(const JordanAlgebra& jordan, const JordanDerivationAlgebra& der);

/// The three-graded Lie algebra J + str(J) + Jbar. Basis order: the x-copy
/// of J (grade +1), then L(e_i), then the derivation basis (grade 0), then
/// the y-copy (grade -1). The bracket [x, ybar] = L_{x o y} + [L_x, L_y];
/// the trilinear V of the quadratic theory equals twice the double bracket.
class TkkAlgebra {
public:
    explicit TkkAlgebra(int hurwitz_dim);

    const LieAlgebra& algebra() const { return algebra_; }
    const JordanAlgebra& jordan() const { return jordan_; }
    const JordanDerivationAlgebra& derivations() const { return der_; }

    int x_index(int i) const { return i; }
    int left_index(int i) const { return jordan_.dim() + i; }
    int der_index(int t) const { return 2 * jordan_.dim() + t; }
    int y_index(int i) const { return 2 * jordan_.dim() + der_.dim() + i; }

    /// ad of this element grades the algebra (+1, 0, -1): L(unit).
    SparseVec grading_element() const;

    SparseVec embed_x(const Vec& coords) const;
    SparseVec embed_y(const Vec& coords) const;

    /// V_{x,y} z computed through double brackets; equals
    /// jordan().linearized_V(x,y) applied to z, divided by the documented
    /// normalization constant 2.
    Vec v_by_brackets(const Vec& x, const Vec& y, const Vec& z) const;

private:
    JordanAlgebra jordan_;
    JordanDerivationAlgebra der_;
    LieAlgebra algebra_{std::vector<std::string>{}};
};

/// Relating the two trilinear routes: linearized_V == this constant times
/// the bracket route, fixed here once and regression-tested.
inline const Rational kVBracketNormalization = Rational(2);

}  // namespace atlas
