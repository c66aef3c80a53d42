#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "atlas/linalg.hpp"

namespace atlas {

/// Sparse vector in a fixed basis, terms sorted by index.
struct SparseTerm {
    int index;
    FieldScalar coef;
};
using SparseVec = std::vector<SparseTerm>;

SparseVec sparse_unit(int index);
SparseVec to_sparse(const Vec& dense);
Vec to_dense(const SparseVec& v, size_t dim);

/// A finite-dimensional Lie algebra given by a basis with provenance labels
/// and exact sparse structure constants. Antisymmetry is structural: the
/// table stores both orientations, built from the upper triangle.
class LieAlgebra {
public:
    explicit LieAlgebra(std::vector<std::string> labels);

    int dim() const { return (int)labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Provenance blocks ("Der(H)", "H0xJ0", "Der(J)", grade names...).
    void set_block(int index, int block) { blocks_[index] = block; }
    int block(int index) const { return blocks_[index]; }

    /// Define [e_i, e_j] for i < j; the opposite orientation is implied.
    void set_bracket(int i, int j, SparseVec value);
    const SparseVec& bracket_basis(int i, int j) const;  // any orientation

    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    /// Structure constant c_{ij}^k.
    FieldScalar structure_constant(int i, int j, int k) const;
    /// Test/negative-control hook: perturb one stored constant in place.
    void perturb_constant(int i, int j, int k, const FieldScalar& delta);

    /// All (i<j, k, c) triples with c != 0, deterministic order.
    struct ConstantEntry {
        int i, j, k;
        FieldScalar c;
    };
    std::vector<ConstantEntry> nonzero_constants() const;

private:
    std::vector<std::string> labels_;
    std::vector<int> blocks_;
    std::vector<SparseVec> table_;  // dim*dim, row-major
    SparseVec zero_;

    SparseVec& slot(int i, int j) { return table_[(size_t)i * labels_.size() + j]; }
    const SparseVec& slot(int i, int j) const { return table_[(size_t)i * labels_.size() + j]; }
};

struct JacobiReport {
    size_t triples_checked = 0;
    std::vector<std::array<int, 3>> violations;
    bool ok() const { return violations.empty(); }
};

enum class JacobiMode { exhaustive, sampled };

/// Verifies [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over basis triples i<j<k,
/// either all of them or a seeded random sample.
JacobiReport jacobi_check(const LieAlgebra& L, JacobiMode mode, size_t samples = 2000, uint64_t seed = 1);

/// Exhaustive Jacobi over the triples lying inside one provenance block,
/// for every block.
JacobiReport jacobi_check_blocks(const LieAlgebra& L);

/// Antisymmetry c_ij^k = -c_ji^k over all stored entries (structural here,
/// but re-verified for reports and negative controls).
bool antisymmetry_holds(const LieAlgebra& L);

/// Partition of the basis by the exact eigenvalue of ad(h), which must act
/// diagonally on the basis; verifies [L_a, L_b] lands in L_{a+b}. Eigenvalues
/// are required to be rational. Throws when the action is not diagonal.
struct Grading {
    std::vector<Rational> eigenvalue;         // per basis element
    std::map<std::string, std::vector<int>> parts;  // eigenvalue string -> indices
};
Grading grading_decompose(const LieAlgebra& L, const SparseVec& h);

/// ad(g) as a dense matrix in the given basis.
Mat adjoint_matrix(const LieAlgebra& L, const SparseVec& g);

/// Rank of the algebra as the minimal nullity of ad over a few seeded
/// generic elements (exact arithmetic throughout).
int rank_by_generic_nullity(const LieAlgebra& L, uint64_t seed = 12345, int attempts = 3);

/// Killing form kappa(x,y) = tr(ad x ad y) on the basis.
Mat killing_form(const LieAlgebra& L);

}  // namespace atlas
