#include "atlas/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace atlas {

namespace {

// splitmix64; deterministic across platforms
struct Rng {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// Dense accumulator with a touched-index list; the workhorse for sparse
/// bracket arithmetic.
class Accumulator {
public:
    explicit Accumulator(size_t dim) : values_(dim) {}
    void add(int index, const FieldScalar& coef, const FieldScalar& scale) {
        if (values_[index].is_zero() && !std::count(touched_.begin(), touched_.end(), index))
            touched_.push_back(index);
        values_[index].add_mul(coef, scale);
    }
    SparseVec take() {
        std::sort(touched_.begin(), touched_.end());
        SparseVec out;
        for (int idx : touched_) {
            if (!values_[idx].is_zero()) out.push_back({idx, values_[idx]});
            values_[idx] = FieldScalar();
        }
        touched_.clear();
        return out;
    }

private:
    std::vector<FieldScalar> values_;
    std::vector<int> touched_;
};

}  // namespace

SparseVec sparse_unit(int index) { return {{index, FieldScalar::one()}}; }

SparseVec to_sparse(const Vec& dense) {
    SparseVec out;
    for (size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) out.push_back({(int)i, dense[i]});
    return out;
}

Vec to_dense(const SparseVec& v, size_t dim) {
    Vec out(dim);
    for (const auto& t : v) out[t.index] = t.coef;
    return out;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), blocks_(labels_.size(), 0), table_(labels_.size() * labels_.size()) {}

void LieAlgebra::set_bracket(int i, int j, SparseVec value) {
    if (i == j) throw std::invalid_argument("set_bracket expects i != j");
    SparseVec negated;
    for (const auto& t : value) negated.push_back({t.index, -t.coef});
    slot(i, j) = std::move(value);
    slot(j, i) = std::move(negated);
}

const SparseVec& LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return zero_;
    return slot(i, j);
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    Accumulator acc(labels_.size());
    for (const auto& xt : x)
        for (const auto& yt : y) {
            if (xt.index == yt.index) continue;
            FieldScalar scale = xt.coef * yt.coef;
            for (const auto& t : slot(xt.index, yt.index)) acc.add(t.index, t.coef, scale);
        }
    return acc.take();
}

FieldScalar LieAlgebra::structure_constant(int i, int j, int k) const {
    for (const auto& t : bracket_basis(i, j))
        if (t.index == k) return t.coef;
    return FieldScalar::zero();
}

void LieAlgebra::perturb_constant(int i, int j, int k, const FieldScalar& delta) {
    if (i > j) {
        std::swap(i, j);
    }
    for (auto* vec : {&slot(i, j), &slot(j, i)}) {
        bool found = false;
        FieldScalar d = (vec == &slot(i, j)) ? delta : -delta;
        for (auto& t : *vec)
            if (t.index == k) {
                t.coef += d;
                found = true;
            }
        if (!found) vec->push_back({k, d});
        std::sort(vec->begin(), vec->end(), [](const SparseTerm& a, const SparseTerm& b) { return a.index < b.index; });
    }
}

std::vector<LieAlgebra::ConstantEntry> LieAlgebra::nonzero_constants() const {
    std::vector<ConstantEntry> out;
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            for (const auto& t : bracket_basis(i, j))
                if (!t.coef.is_zero()) out.push_back({i, j, t.index, t.coef});
    return out;
}

namespace {

bool jacobi_triple_holds(const LieAlgebra& L, int i, int j, int k, Accumulator& acc) {
    for (const auto& t : L.bracket_basis(j, k))
        for (const auto& u : L.bracket_basis(i, t.index)) acc.add(u.index, u.coef, t.coef);
    for (const auto& t : L.bracket_basis(k, i))
        for (const auto& u : L.bracket_basis(j, t.index)) acc.add(u.index, u.coef, t.coef);
    for (const auto& t : L.bracket_basis(i, j))
        for (const auto& u : L.bracket_basis(k, t.index)) acc.add(u.index, u.coef, t.coef);
    return acc.take().empty();
}

}  // namespace

JacobiReport jacobi_check(const LieAlgebra& L, JacobiMode mode, size_t samples, uint64_t seed) {
    JacobiReport report;
    Accumulator acc(L.dim());
    if (mode == JacobiMode::exhaustive) {
        for (int i = 0; i < L.dim(); ++i)
            for (int j = i + 1; j < L.dim(); ++j)
                for (int k = j + 1; k < L.dim(); ++k) {
                    ++report.triples_checked;
                    if (!jacobi_triple_holds(L, i, j, k, acc)) report.violations.push_back({i, j, k});
                }
    } else {
        Rng rng{seed};
        int n = L.dim();
        for (size_t s = 0; s < samples; ++s) {
            int i = (int)(rng.next() % n), j = (int)(rng.next() % n), k = (int)(rng.next() % n);
            if (i == j || j == k || i == k) continue;
            ++report.triples_checked;
            if (!jacobi_triple_holds(L, i, j, k, acc)) report.violations.push_back({i, j, k});
        }
    }
    return report;
}

JacobiReport jacobi_check_blocks(const LieAlgebra& L) {
    JacobiReport report;
    Accumulator acc(L.dim());
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < L.dim(); ++i) blocks[L.block(i)].push_back(i);
    for (const auto& [id, members] : blocks) {
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                for (size_t c = b + 1; c < members.size(); ++c) {
                    ++report.triples_checked;
                    if (!jacobi_triple_holds(L, members[a], members[b], members[c], acc))
                        report.violations.push_back({members[a], members[b], members[c]});
                }
    }
    return report;
}

bool antisymmetry_holds(const LieAlgebra& L) {
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
            const SparseVec& fwd = L.bracket_basis(i, j);
            const SparseVec& bwd = L.bracket_basis(j, i);
            if (fwd.size() != bwd.size()) return false;
            for (size_t t = 0; t < fwd.size(); ++t) {
                if (fwd[t].index != bwd[t].index) return false;
                if (fwd[t].coef != -bwd[t].coef) return false;
            }
        }
    return true;
}

Grading grading_decompose(const LieAlgebra& L, const SparseVec& h) {
    Grading g;
    g.eigenvalue.resize(L.dim());
    for (int j = 0; j < L.dim(); ++j) {
        SparseVec image = L.bracket(h, sparse_unit(j));
        Rational lambda(0);
        if (!image.empty()) {
            if (image.size() != 1 || image[0].index != j)
                throw std::domain_error("grading element does not act diagonally on basis element " +
                                        L.labels()[j]);
            if (!image[0].coef.is_rational())
                throw std::domain_error("grading eigenvalue is not rational on " + L.labels()[j]);
            lambda = image[0].coef.rational_part();
        }
        g.eigenvalue[j] = lambda;
        g.parts[lambda.to_string()].push_back(j);
    }
    // bracket compatibility: [L_a, L_b] subset L_{a+b}
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            Rational target = g.eigenvalue[i] + g.eigenvalue[j];
            for (const auto& t : L.bracket_basis(i, j))
                if (g.eigenvalue[t.index] != target)
                    throw std::domain_error("grading incompatibility at bracket [" + L.labels()[i] + ", " +
                                            L.labels()[j] + "]");
        }
    return g;
}

Mat adjoint_matrix(const LieAlgebra& L, const SparseVec& g) {
    Mat ad((size_t)L.dim(), (size_t)L.dim());
    for (int j = 0; j < L.dim(); ++j) {
        SparseVec col = L.bracket(g, sparse_unit(j));
        for (const auto& t : col) ad((size_t)t.index, (size_t)j) = t.coef;
    }
    return ad;
}

int rank_by_generic_nullity(const LieAlgebra& L, uint64_t seed, int attempts) {
    Rng rng{seed};
    int best = L.dim();
    for (int a = 0; a < attempts; ++a) {
        SparseVec g;
        for (int i = 0; i < L.dim(); ++i) {
            long long c = (long long)(rng.next() % 7) - 3;
            if (c != 0) g.push_back({i, FieldScalar(c)});
        }
        if (g.empty()) continue;
        int n = (int)nullity(adjoint_matrix(L, g));
        best = std::min(best, n);
    }
    return best;
}

Mat killing_form(const LieAlgebra& L) {
    int n = L.dim();
    // kappa_ij = sum_{a,b} c_{ia}^b c_{jb}^a
    Mat kappa((size_t)n, (size_t)n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            FieldScalar sum;
            for (int a = 0; a < n; ++a) {
                for (const auto& t : L.bracket_basis(i, a)) {
                    // t: c_{ia}^b with b = t.index
                    FieldScalar back = L.structure_constant(j, t.index, a);
                    if (!back.is_zero()) sum.add_mul(t.coef, back);
                }
            }
            kappa((size_t)i, (size_t)j) = sum;
            kappa((size_t)j, (size_t)i) = sum;
        }
    return kappa;
}

}  // namespace atlas
