#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlas/rootspace.hpp"

namespace atlas {

/// A linear or affine subspace of R^8. The stored basis is orthogonalized
/// exactly on construction and the offset is canonicalized to lie in the
/// orthogonal complement of the span, so parallelism and distances are
/// well-defined.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::vector<RootVector> basis, RootVector offset);
    static Subspace linear(std::vector<RootVector> basis) { return Subspace(std::move(basis), RootVector::zero()); }

    const std::vector<RootVector>& orthogonal_basis() const { return basis_; }
    const RootVector& offset() const { return offset_; }
    size_t dimension() const { return basis_.size(); }
    bool is_linear() const { return offset_.is_zero(); }

    /// Orthogonal projection onto the span (ignores the offset).
    RootVector project_span(const RootVector& v) const;

    bool contains(const RootVector& v) const;
    bool parallel_to(const Subspace& other) const;

private:
    std::vector<RootVector> basis_;  // pairwise orthogonal, not normalized
    RootVector offset_;              // orthogonal to every basis vector
};

/// The plane spanned by the a2 roots (k_i - k_j) over a coordinate triple.
Subspace pi_plane(std::array<int, 3> triple = {1, 2, 3});

/// Orthogonal projection of v onto a linear subspace; throws on affine input.
RootVector project(const RootVector& v, const Subspace& s);

/// Exact squared distance between parallel subspaces, and the distance itself
/// when it lies in the scalar field. Throws on non-parallel inputs.
struct Distance {
    FieldScalar squared;
    std::optional<FieldScalar> value;
};
Distance distance_to(const Subspace& affine, const Subspace& linear);

/// Square root within the field of a nonnegative rational scalar, when it
/// exists (q = s^2 * m with m in {1,2,3,6}).
std::optional<FieldScalar> sqrt_in_field(const FieldScalar& x);

enum class PartTag { outer_a2, g0, jordan, jordan_bar };
std::string part_tag_to_string(PartTag tag, int axis);

struct DecompositionPart {
    PartTag tag;
    int axis = 0;  // k-index in {triple} for jordan parts, 0 otherwise
    std::vector<RootVector> roots;
};

/// Partition of a root system by projection on the triple's a2 plane:
/// the outer hexagon, the zero fiber g0, and three Jordan pairs along the
/// axes 1/3(k_p + k_q - 2 k_m). Throws if any root projects elsewhere, and
/// hard-fails if the highest-weight sets disagree with the published lists.
struct Decomposition {
    AlgebraName name;
    std::array<int, 3> triple;
    std::vector<DecompositionPart> parts;

    const DecompositionPart& part(PartTag tag, int axis = 0) const;
    const DecompositionPart& highest_weight() const { return part(PartTag::jordan, triple[0]); }
};

Decomposition decompose(AlgebraName name);
Decomposition decompose_set(AlgebraName name, const std::vector<RootVector>& roots, std::array<int, 3> triple);

/// The published highest-weight Jordan root lists (axis = first triple
/// index); used as the decompose() cross-check and exposed for tests.
std::vector<RootVector> highest_weight_list(AlgebraName name);

/// Coordinate permutation of the triple indices applied to every root of a
/// part; cyclic shifts map J(axis m) onto J(axis perm(m)).
DecompositionPart cyclic_image(const DecompositionPart& part, const std::array<int, 3>& triple, int shift);
DecompositionPart negate_part(const DecompositionPart& part);

/// The named planes and vectors of the Jordan-pair geometry, keyed by the
/// paper-facing names used in reports ("Pi0", "Sigma+", "Pi+(1)2", ...).
struct PlaneSet {
    std::vector<std::pair<std::string, Subspace>> planes;
    std::vector<std::pair<std::string, RootVector>> vectors;

    const Subspace& plane(const std::string& name) const;
    const RootVector& vector(const std::string& name) const;
};
PlaneSet build_planes(AlgebraName name);

/// One row of the table of a2+a2 quantum numbers of the h.w. 9-element
/// Jordan set: the root lies on the affine planes u_{p1} + span(Pi0_1) and
/// v_{p2} + span(Pi0_2) with exact in-plane coordinates (s,t) and (s',t').
struct QuantumNumberRow {
    RootVector root;
    int plane1_index;
    int plane2_index;
    FieldScalar s, t;
    FieldScalar s_prime, t_prime;
};
std::vector<QuantumNumberRow> table3_quantum_numbers();

enum class EtaTarget { a5_in_e6, d6_in_e7 };

/// The eta-basis presentations: a5 root images eta_i - eta_j inside e6 and
/// d6 root images +-eta_i +- eta_j inside e7.
struct EtaEmbedding {
    EtaTarget target;
    /// a5: difference potentials p_i with image(eta_i - eta_j) = p_i - p_j;
    /// d6: the six explicit vectors, exactly orthonormal.
    std::vector<RootVector> eta;
    std::vector<RootVector> images;  // 30 or 60 distinct roots
};
EtaEmbedding eta_embedding(EtaTarget target);

/// Exact coordinate substitution identifying the e6 (resp. e7) subsystem
/// inside e8: the g0 roots of e8 (resp. g0 plus the axis-1 Jordan pair).
struct RecognitionWitness {
    AlgebraName sub;
    std::string reading;                  // which index reading succeeded
    std::vector<RootVector> basis_image;  // images of the primed basis vectors
    std::vector<RootVector> image_roots;  // mapped table roots, as a set
};
RecognitionWitness recognize_inside_e8(AlgebraName sub);

/// Leaves of the fully nested decomposition of e8:
/// four a2 blocks, three (27, 27bar) pairs and three (9, 9bar) pairs.
struct NestedLeaf {
    std::string label;  // "a2^c", "J8(1)", "J2bar(5)", "a2^g1", ...
    std::vector<RootVector> roots;
};
struct NestedDecomposition {
    std::vector<NestedLeaf> leaves;
};
NestedDecomposition nested_decomposition(AlgebraName name);

enum class ParticleKind { quark, antiquark, lepton, antilepton, a2_c, a2_f, a2_g1, a2_g2 };
std::string particle_kind_to_string(ParticleKind kind);

struct ParticleLabel {
    RootVector root;
    ParticleKind kind;
    int index = 0;  // color 1..3 or family 4..6 where applicable
};

/// One label per e8 root: quarks/antiquarks in three colors, leptons and
/// antileptons in three families, and the four a2 blocks. Which member of a
/// pair is the particle follows the sign convention of the source lists.
std::vector<ParticleLabel> label_particles();

}  // namespace atlas
