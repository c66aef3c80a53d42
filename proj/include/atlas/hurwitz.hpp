#pragma once

#include <array>
#include <string>
#include <vector>

#include "atlas/liealg.hpp"
#include "atlas/linalg.hpp"

namespace atlas {

/// Element of a composition algebra over the scalars, of dimension 1 (R),
/// 2 (C), 4 (Q) or 8 (octonions), on the basis {1, u_1, ..., u_{dim-1}}.
///
/// The octonion multiplication table is the one induced by the Zorn-matrix
/// model with rho_pm = (1 pm i u_7)/2: the quaternions sit on {1,u_1,u_2,u_3}
/// with u_1 u_2 = u_3, and u_k u_7 = u_{3+k} for k = 1,2,3. Conjugation
/// negates u_1..u_7 but never the complex i of the scalar field.
class HurwitzElement {
public:
    HurwitzElement() : dim_(8), coords_(8) {}
    explicit HurwitzElement(int dim) : dim_(dim), coords_(dim) {}
    HurwitzElement(int dim, std::vector<FieldScalar> coords) : dim_(dim), coords_(std::move(coords)) {}

    static HurwitzElement unit(int dim) {
        HurwitzElement x(dim);
        x.coords_[0] = FieldScalar::one();
        return x;
    }
    static HurwitzElement basis(int dim, int index) {
        HurwitzElement x(dim);
        x.coords_[index] = FieldScalar::one();
        return x;
    }
    /// rho_{+-} = (1 +- i u_7)/2, octonions only.
    static HurwitzElement rho(int sign);
    /// epsilon_k^{+-} = rho^{+-} u_k, k = 1,2,3.
    static HurwitzElement epsilon(int k, int sign);
    /// i u_7.
    static HurwitzElement i_u7();

    int dim() const { return dim_; }
    const FieldScalar& coord(int index) const { return coords_[index]; }
    FieldScalar& coord(int index) { return coords_[index]; }
    Vec to_vec() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const HurwitzElement& x, const HurwitzElement& y) {
        return x.dim_ == y.dim_ && x.coords_ == y.coords_;
    }
    friend HurwitzElement operator+(const HurwitzElement& x, const HurwitzElement& y);
    friend HurwitzElement operator-(const HurwitzElement& x, const HurwitzElement& y);
    friend HurwitzElement operator-(const HurwitzElement& x);
    friend HurwitzElement operator*(const FieldScalar& s, const HurwitzElement& x);
    /// Algebra product via the structure-constant table.
    friend HurwitzElement operator*(const HurwitzElement& x, const HurwitzElement& y);

    std::string to_string() const;

private:
    int dim_;
    std::vector<FieldScalar> coords_;
};

/// Octonionic conjugation x -> xbar (negates the imaginary units only).
HurwitzElement conj_oct(const HurwitzElement& x);
/// n(x) = x xbar, a scalar; composition law n(xy) = n(x) n(y).
FieldScalar norm(const HurwitzElement& x);
/// t(x) = x + xbar = 2 x_0.
FieldScalar trace(const HurwitzElement& x);
/// Symmetric trace pairing t(x y).
FieldScalar trace_pairing(const HurwitzElement& x, const HurwitzElement& y);

HurwitzElement commutator(const HurwitzElement& x, const HurwitzElement& y);
/// (x,y,z) = (xy)z - x(yz).
HurwitzElement associator(const HurwitzElement& x, const HurwitzElement& y, const HurwitzElement& z);

/// The 2x2 block model of the octonions: scalar diagonal, C^3 off-diagonal,
/// multiplied with the dot pairing A.B = -sum a_k b_k and the cross product.
struct ZornMatrix {
    FieldScalar alpha_plus, alpha_minus;
    std::array<FieldScalar, 3> a_plus{}, a_minus{};

    friend bool operator==(const ZornMatrix& x, const ZornMatrix& y) {
        return x.alpha_plus == y.alpha_plus && x.alpha_minus == y.alpha_minus && x.a_plus == y.a_plus &&
               x.a_minus == y.a_minus;
    }
    std::string to_string() const;
};

ZornMatrix to_zorn(const HurwitzElement& x);            // octonions only
HurwitzElement from_zorn(const ZornMatrix& z);
ZornMatrix zorn_mul(const ZornMatrix& x, const ZornMatrix& y);

/// D_{a,b} c = [[a,b],c]/3 - (a,b,c), as an exact matrix on coordinates.
/// Defined for dim 4 and 8.
Mat derivation(const HurwitzElement& a, const HurwitzElement& b);

/// Leibniz rule D(xy) = D(x)y + x D(y) over all basis pairs.
bool leibniz_holds(const Mat& op, int dim);

/// The span of the inner derivations D_{u_i,u_j} with structure constants:
/// a1 (dimension 3) over the quaternions, g2 (dimension 14) over the
/// octonions.
class DerivationAlgebra {
public:
    int hurwitz_dim = 0;
    std::vector<Mat> ops;  // independent spanning operators
    LieAlgebra algebra{std::vector<std::string>{}};

    /// Exact coordinates of an operator over ops; throws when outside.
    std::vector<FieldScalar> express(const Mat& op) const;

private:
    friend DerivationAlgebra make_derivation_algebra(int, std::vector<Mat>, std::vector<std::string>);
    SpanBasis span_{0};
};

DerivationAlgebra derivation_algebra(int dim);

/// g2 on the Zorn-adapted basis: eight derivations fixing u_7 (the a2
/// subalgebra D_7) followed by D_k^{+-} = +-(3/2) D_{i u_7, epsilon_k^{+-}}.
/// Basis order: D7(0..7), D+(1..3), D-(1..3).
DerivationAlgebra g2_zorn_adapted();

/// The diagonal derivation with epsilon_k^{+-} -> +- c_k epsilon_k^{+-} and
/// rho^{+-} fixed; requires c1 + c2 + c3 = 0.
Mat charge_derivation(std::array<long long, 3> charges);

/// g2 in a fully graded basis: the charge Cartan h(1,0,-1), h(0,1,-1), the
/// six root elements of the u_7-stabilizer a2, then D+(1..3), D-(1..3).
/// Every charge derivation acts diagonally on this basis.
DerivationAlgebra g2_graded();

}  // namespace atlas
