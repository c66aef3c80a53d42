#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "atlas/hurwitz.hpp"
#include "atlas/jordan.hpp"
#include "atlas/liealg.hpp"

namespace atlas {

/// Scalars in front of the derivation-valued and [L,L]-valued terms of the
/// bracket of two H0 x J0 elements,
///   [a@x, b@y] = lambda T(x o y) D_{a,b} + (a*b)@(x*y) + mu t(ab) [L_x, L_y].
/// Fixed by requiring the Jacobi identity; see fit_tits_normalization().
struct TitsNormalization {
    Rational lambda;
    Rational mu;
};

/// The frozen constants; fit_tits_normalization() re-derives them as a
/// regression check.
inline const TitsNormalization kTitsNormalization{Rational(1, 4), Rational(1, 2)};

/// Scans a small rational grid for the unique (lambda, mu) making the
/// construction over (Q, J3^1) a Lie algebra; exhaustive Jacobi is the
/// arbiter.
TitsNormalization fit_tits_normalization();

/// The Tits construction Der(H) + (H0 x J0) + Der(J) for a Hurwitz algebra
/// of dimension 1, 2, 4 or 8 and the Jordan algebra J3^n.
///
/// For H of dimension 8 the traceless basis is Zorn-adapted:
/// i u7 (weight 0) and the nilpotents epsilon_k^{+-}, and Der(H) = g2 comes
/// in the matching basis (Cartan + root elements of the u7-stabilizer a2,
/// then D_k^{+-}), so the charge operator below acts diagonally.
class TitsAlgebra {
public:
    TitsAlgebra(int h_dim, int j_n, TitsNormalization norm = kTitsNormalization);

    const LieAlgebra& algebra() const { return algebra_; }
    int h_dim() const { return h_dim_; }
    int j_n() const { return j_n_; }

    int der_h_dim() const { return der_h_dim_; }
    int h0_dim() const { return h0_dim_; }
    int j0_dim() const { return j0_dim_; }
    int der_j_dim() const { return der_j_dim_; }

    int derh_index(int t) const { return t; }
    int middle_index(int i, int p) const { return der_h_dim_ + i * j0_dim_ + p; }
    int derj_index(int t) const { return der_h_dim_ + h0_dim_ * j0_dim_ + t; }

    /// Cartan derivation of the u7-stabilizer a2 with charges (c1,c2,c3),
    /// sum zero, as an element of the Der(H) block; its ad is diagonal on
    /// the whole basis. Octonion rows only.
    SparseVec charge_element(std::array<long long, 3> charges) const;

private:
    int h_dim_, j_n_;
    int der_h_dim_ = 0, h0_dim_ = 0, j0_dim_ = 0, der_j_dim_ = 0;
    LieAlgebra algebra_{std::vector<std::string>{}};
    std::vector<FieldScalar> charge_coords_base_;  // coords of the three unit-charge generators
};

struct MagicSquareEntry {
    int dim = 0;
    int rank = 0;
    std::string type;
};

struct MagicSquareReport {
    std::array<std::array<MagicSquareEntry, 4>, 4> grid;  // [H row][J column]
    bool dimension_symmetric = false;
};

/// Construct all sixteen entries, recording dimension, exact rank (minimal
/// nullity of ad over seeded generic elements) and the identified type
/// (dimension + rank matched against the published grid). Jacobi checking
/// is done separately by the caller/acceptance suite.
MagicSquareReport magic_square();

/// Dimension bookkeeping for the rewriting chain from the Tits form of e8
/// down to four a2 blocks plus six Jordan pairs. Every step must total 248.
struct ChainStep {
    std::string display;
    std::vector<std::pair<std::string, int>> parts;
    int total() const {
        int sum = 0;
        for (const auto& [name, d] : parts) sum += d;
        return sum;
    }
};
struct ChainDecomposition {
    std::vector<ChainStep> steps;
    /// leaf name -> (algebra dimension, root count)
    std::vector<std::pair<std::string, std::pair<int, int>>> leaves;
};
ChainDecomposition chain_decompose_e8();

}  // namespace atlas
