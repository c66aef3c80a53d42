#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "atlas/linalg.hpp"

namespace atlas {

enum class AlgebraName { g2, f4, e6, e7, e8, a1, a2, a2a2, a5, c3, d6 };

std::string algebra_to_string(AlgebraName name);
AlgebraName algebra_from_string(const std::string& text);

/// A vector of the common 8-dimensional ambient space, on the orthonormal
/// basis {k_1,...,k_8}. Coordinates are exact and purely real.
struct RootVector {
    std::array<FieldScalar, 8> coords{};

    static RootVector zero() { return {}; }
    /// Unit basis vector k_i, 1-based as in the tables.
    static RootVector k(int i) {
        RootVector v;
        v.coords[i - 1] = FieldScalar::one();
        return v;
    }

    friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords == b.coords; }
    friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
    friend RootVector operator+(const RootVector& a, const RootVector& b) {
        RootVector r;
        for (int i = 0; i < 8; ++i) r.coords[i] = a.coords[i] + b.coords[i];
        return r;
    }
    friend RootVector operator-(const RootVector& a, const RootVector& b) {
        RootVector r;
        for (int i = 0; i < 8; ++i) r.coords[i] = a.coords[i] - b.coords[i];
        return r;
    }
    friend RootVector operator-(const RootVector& a) {
        RootVector r;
        for (int i = 0; i < 8; ++i) r.coords[i] = -a.coords[i];
        return r;
    }
    friend RootVector operator*(const FieldScalar& s, const RootVector& a) {
        RootVector r;
        for (int i = 0; i < 8; ++i) r.coords[i] = s * a.coords[i];
        return r;
    }

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    Vec to_vec() const { return Vec(coords.begin(), coords.end()); }

    size_t hash() const noexcept {
        size_t h = 14695981039346656037ull;
        for (const auto& c : coords) h = (h ^ c.hash()) * 1099511628211ull;
        return h;
    }

    /// Canonical deterministic order: lexicographic over the coordinates,
    /// each compared as its rational 4-tuple in the {1,r2,r3,r6} expansion.
    friend bool tuple_less(const RootVector& a, const RootVector& b) {
        for (int i = 0; i < 8; ++i) {
            if (FieldScalar::tuple_less(a.coords[i], b.coords[i])) return true;
            if (FieldScalar::tuple_less(b.coords[i], a.coords[i])) return false;
        }
        return false;
    }

    std::string to_string() const;
};

struct RootVectorHash {
    size_t operator()(const RootVector& v) const noexcept { return v.hash(); }
};

using RootSet = std::unordered_set<RootVector, RootVectorHash>;

FieldScalar inner(const RootVector& u, const RootVector& v);

/// Reflection of beta through the hyperplane orthogonal to alpha.
RootVector reflect(const RootVector& alpha, const RootVector& beta);

/// A named finite root system, canonically ordered, in ambient R^8.
class RootSystem {
public:
    RootSystem() = default;
    RootSystem(AlgebraName name, std::vector<RootVector> roots);

    AlgebraName name() const { return name_; }
    const std::vector<RootVector>& roots() const { return roots_; }
    size_t size() const { return roots_.size(); }
    int rank() const { return rank_; }
    bool contains(const RootVector& v) const { return lookup_.count(v) > 0; }
    const RootSet& root_set() const { return lookup_; }

private:
    AlgebraName name_ = AlgebraName::g2;
    std::vector<RootVector> roots_;
    RootSet lookup_;
    int rank_ = 0;
};

/// The five exceptional systems, row by row from the classical tables.
/// Throws std::invalid_argument for other names.
RootSystem generate_roots(AlgebraName name);

/// How the sign-parity conditions on the half-sum rows were resolved:
/// true when the scaled term (r3 k6 for e6, r2 k7 for e7) participates in
/// the parity count. Determined by generating both readings and keeping the
/// one that yields a valid root system; see the README.
bool e6_parity_counts_radical_term();
bool e7_parity_counts_radical_term();

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive root-system axioms: reflection closure, integral Cartan
/// pairings, no multiples beyond -1, negation closure, no zero vector.
/// Violations are data, not errors.
ValidationReport validate_root_set(const std::vector<RootVector>& roots);
ValidationReport validate_root_system(const RootSystem& rs);

/// Dimension of the exact linear span.
int span_rank(const std::vector<RootVector>& roots);

struct CartanData {
    std::vector<RootVector> simple_roots;
    std::vector<std::vector<long long>> matrix;  // 2<ai,aj>/<aj,aj>
};

/// Simple roots picked by the fixed generic functional (8^7,...,8,1) and the
/// resulting Cartan matrix. Throws std::invalid_argument if the set fails
/// validation.
CartanData cartan_integers(const std::vector<RootVector>& roots);

/// Cartan type from a Cartan matrix plus the simple-root norms, rendered as
/// e.g. "G2", "C3", "A2+A2". Direct sums are sorted alphabetically.
std::string classify_cartan(const CartanData& data);

}  // namespace atlas
