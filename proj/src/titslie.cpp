#include "atlas/titslie.hpp"

#include <map>
#include <stdexcept>

#include "atlas/projection.hpp"

namespace atlas {

namespace {

/// Jordan-side data shared between entries of the square (J3^8 is needed by
/// every row); built once per n.
struct JSide {
    JordanAlgebra jordan;
    JordanDerivationAlgebra der;
    std::vector<Vec> j0;                         // traceless basis
    std::vector<std::vector<Vec>> star;          // J0-coords of x_p * y_q
    std::vector<std::vector<FieldScalar>> tform;                 // T(x_p o y_q)
    std::vector<std::vector<std::vector<FieldScalar>>> ll;       // Der-coords of [L_p, L_q]
    std::vector<std::vector<Vec>> der_action;    // J0-coords of D_t x_p

    explicit JSide(int n) : jordan(n), der(jordan), j0(jordan.traceless_basis()) {
        size_t m = j0.size();
        star.assign(m, std::vector<Vec>(m));
        tform.assign(m, std::vector<FieldScalar>(m));
        ll.assign(m, std::vector<std::vector<FieldScalar>>(m));
        std::vector<Mat> lops;
        for (const auto& x : j0) lops.push_back(jordan.left_mult(x));
        for (size_t p = 0; p < m; ++p)
            for (size_t q = p; q < m; ++q) {
                Vec prod = jordan.circ(j0[p], j0[q]);
                FieldScalar t = jordan.trace_of(prod);
                tform[p][q] = tform[q][p] = t;
                Vec traceless = prod;
                FieldScalar shift = t / FieldScalar(3);
                for (int i = 0; i < 3; ++i) traceless[i] -= shift;
                Vec coords = to_j0_coords(traceless);
                star[p][q] = coords;
                star[q][p] = coords;
                std::vector<FieldScalar> comm = der.express(commutator(lops[p], lops[q]));
                ll[p][q] = comm;
                for (auto& c : comm) c = -c;
                ll[q][p] = comm;
            }
        der_action.assign(der.ops().size(), std::vector<Vec>(m));
        for (size_t t = 0; t < der.ops().size(); ++t)
            for (size_t p = 0; p < m; ++p) der_action[t][p] = to_j0_coords(der.ops()[t].apply(j0[p]));
    }

    /// Coordinates of a traceless element over the J0 basis
    /// {E1-E2, E2-E3, off-diagonal slots}.
    Vec to_j0_coords(const Vec& x) const {
        FieldScalar sum = x[0] + x[1] + x[2];
        if (!sum.is_zero()) throw std::logic_error("element is not traceless");
        Vec out(j0.size());
        out[0] = x[0];
        out[1] = x[0] + x[1];
        for (size_t k = 3; k < (size_t)jordan.dim(); ++k) out[k - 1] = x[k];
        return out;
    }
};

const JSide& jside(int n) {
    static std::map<int, std::unique_ptr<JSide>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<JSide>(n)).first;
    return *it->second;
}

/// Hurwitz-side data: traceless basis, derivation basis and the pairing /
/// star / derivation tables over them.
struct HSide {
    int dim;
    std::vector<HurwitzElement> h0;
    std::vector<std::string> h0_labels;
    std::vector<Mat> der_ops;
    std::vector<std::string> der_labels;
    const LieAlgebra* der_algebra = nullptr;  // borrowed from storage below
    DerivationAlgebra storage{};              // keeps ops/algebra alive for dims 4 and 8
    SpanBasis h0_span{0};

    std::vector<std::vector<std::vector<FieldScalar>>> dpair;  // Der-coords of D_{a_i, a_j}
    std::vector<std::vector<Vec>> star;                        // H0-coords of a_i * a_j
    std::vector<std::vector<FieldScalar>> pairing;             // t(a_i a_j)
    std::vector<std::vector<Vec>> der_action;                  // H0-coords of op_t(a_i)

    explicit HSide(int h_dim) : dim(h_dim), h0_span((size_t)h_dim) {
        if (dim == 2) {
            h0.push_back(HurwitzElement::basis(2, 1));
            h0_labels.push_back("u1");
        } else if (dim == 4) {
            for (int k = 1; k <= 3; ++k) {
                h0.push_back(HurwitzElement::basis(4, k));
                h0_labels.push_back("u" + std::to_string(k));
            }
            storage = derivation_algebra(4);
        } else if (dim == 8) {
            h0.push_back(HurwitzElement::i_u7());
            h0_labels.push_back("iu7");
            for (int sign : {1, -1})
                for (int k = 1; k <= 3; ++k) {
                    h0.push_back(HurwitzElement::epsilon(k, sign));
                    h0_labels.push_back(std::string("eps") + (sign > 0 ? "+" : "-") + std::to_string(k));
                }
            storage = g2_graded();
        }
        if (dim >= 4) {
            der_ops = storage.ops;
            der_labels = storage.algebra.labels();
            der_algebra = &storage.algebra;
        }
        for (const auto& a : h0)
            if (h0_span.add(a.to_vec()) < 0) throw std::logic_error("H0 basis is dependent");

        size_t m = h0.size();
        dpair.assign(m, std::vector<std::vector<FieldScalar>>(m));
        star.assign(m, std::vector<Vec>(m));
        pairing.assign(m, std::vector<FieldScalar>(m));
        const FieldScalar half(Rational(1, 2));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                HurwitzElement prod = h0[i] * h0[j];
                FieldScalar t = trace(prod);
                pairing[i][j] = t;
                HurwitzElement traceless = prod - (half * t) * HurwitzElement::unit(dim);
                star[i][j] = express_h0(traceless);
                if (dim >= 4)
                    dpair[i][j] = storage.express(derivation(h0[i], h0[j]));
                else
                    dpair[i][j] = {};
            }
        der_action.assign(der_ops.size(), std::vector<Vec>(m));
        for (size_t t = 0; t < der_ops.size(); ++t)
            for (size_t i = 0; i < m; ++i)
                der_action[t][i] = express_h0(HurwitzElement(dim, der_ops[t].apply(h0[i].to_vec())));
    }

    Vec express_h0(const HurwitzElement& x) const {
        auto coords = h0_span.express(x.to_vec());
        if (!coords) throw std::logic_error("element is not in the traceless span");
        coords->resize(h0.size());
        return *coords;
    }
};

const HSide& hside(int dim) {
    static std::map<int, std::unique_ptr<HSide>> cache;
    auto it = cache.find(dim);
    if (it == cache.end()) it = cache.emplace(dim, std::make_unique<HSide>(dim)).first;
    return *it->second;
}

}  // namespace

TitsAlgebra::TitsAlgebra(int h_dim, int j_n, TitsNormalization norm) : h_dim_(h_dim), j_n_(j_n) {
    if (h_dim != 1 && h_dim != 2 && h_dim != 4 && h_dim != 8)
        throw std::invalid_argument("Hurwitz dimension must be 1, 2, 4 or 8");
    const JSide& J = jside(j_n);
    der_j_dim_ = J.der.dim();
    j0_dim_ = (int)J.j0.size();

    std::vector<std::string> labels;
    const HSide* H = nullptr;
    if (h_dim > 1) {
        H = &hside(h_dim);
        der_h_dim_ = (int)H->der_ops.size();
        h0_dim_ = (int)H->h0.size();
        for (const auto& l : H->der_labels) labels.push_back("DH:" + l);
        std::vector<std::string> j0_labels;
        j0_labels.push_back("E1-E2");
        j0_labels.push_back("E2-E3");
        for (int k = 3; k < J.jordan.dim(); ++k) j0_labels.push_back(J.jordan.labels()[k]);
        for (int i = 0; i < h0_dim_; ++i)
            for (int p = 0; p < j0_dim_; ++p) labels.push_back(H->h0_labels[i] + "@" + j0_labels[p]);
    } else {
        j0_dim_ = (int)J.j0.size();
    }
    for (const auto& l : J.der.algebra().labels()) labels.push_back("DJ:" + l);
    algebra_ = LieAlgebra(labels);

    for (int t = 0; t < der_h_dim_; ++t) algebra_.set_block(derh_index(t), 0);
    for (int i = 0; i < h0_dim_; ++i)
        for (int p = 0; p < j0_dim_; ++p) algebra_.set_block(middle_index(i, p), 1);
    for (int t = 0; t < der_j_dim_; ++t) algebra_.set_block(derj_index(t), 2);

    // Der(J) block: the closed subalgebra of Jordan derivations
    for (int s = 0; s < der_j_dim_; ++s)
        for (int t = s + 1; t < der_j_dim_; ++t) {
            SparseVec value;
            for (const auto& term : J.der.algebra().bracket_basis(s, t))
                value.push_back({derj_index(term.index), term.coef});
            algebra_.set_bracket(derj_index(s), derj_index(t), std::move(value));
        }
    if (h_dim == 1) return;

    // Der(H) block
    if (der_h_dim_ > 0)
        for (int s = 0; s < der_h_dim_; ++s)
            for (int t = s + 1; t < der_h_dim_; ++t) {
                SparseVec value;
                for (const auto& term : H->der_algebra->bracket_basis(s, t))
                    value.push_back({derh_index(term.index), term.coef});
                algebra_.set_bracket(derh_index(s), derh_index(t), std::move(value));
            }

    // Der(H) and Der(J) act on the middle block; they commute with each other
    for (int t = 0; t < der_h_dim_; ++t)
        for (int i = 0; i < h0_dim_; ++i) {
            const Vec& image = H->der_action[t][i];
            for (int p = 0; p < j0_dim_; ++p) {
                SparseVec value;
                for (int j = 0; j < h0_dim_; ++j)
                    if (!image[j].is_zero()) value.push_back({middle_index(j, p), image[j]});
                if (!value.empty()) algebra_.set_bracket(derh_index(t), middle_index(i, p), std::move(value));
            }
        }
    for (int t = 0; t < der_j_dim_; ++t)
        for (int p = 0; p < j0_dim_; ++p) {
            const Vec& image = J.der_action[t][p];
            for (int i = 0; i < h0_dim_; ++i) {
                SparseVec value;
                for (int q = 0; q < j0_dim_; ++q)
                    if (!image[q].is_zero()) value.push_back({middle_index(i, q), image[q]});
                if (!value.empty()) algebra_.set_bracket(derj_index(t), middle_index(i, p), std::move(value));
            }
        }

    // middle x middle
    const FieldScalar lambda(norm.lambda), mu(norm.mu);
    for (int i = 0; i < h0_dim_; ++i)
        for (int p = 0; p < j0_dim_; ++p) {
            int row = middle_index(i, p);
            for (int j = 0; j < h0_dim_; ++j)
                for (int q = 0; q < j0_dim_; ++q) {
                    int col = middle_index(j, q);
                    if (col <= row) continue;
                    SparseVec value;
                    FieldScalar dcoef = lambda * J.tform[p][q];
                    if (!dcoef.is_zero() && der_h_dim_ > 0) {
                        const auto& coords = H->dpair[i][j];
                        for (int t = 0; t < der_h_dim_; ++t)
                            if (!coords[t].is_zero()) value.push_back({derh_index(t), dcoef * coords[t]});
                    }
                    const Vec& sh = H->star[i][j];
                    const Vec& sj = J.star[p][q];
                    for (int a = 0; a < h0_dim_; ++a) {
                        if (sh[a].is_zero()) continue;
                        for (int b = 0; b < j0_dim_; ++b)
                            if (!sj[b].is_zero()) value.push_back({middle_index(a, b), sh[a] * sj[b]});
                    }
                    FieldScalar lcoef = mu * H->pairing[i][j];
                    if (!lcoef.is_zero()) {
                        const auto& coords = J.ll[p][q];
                        for (int t = 0; t < der_j_dim_; ++t)
                            if (!coords[t].is_zero()) value.push_back({derj_index(t), lcoef * coords[t]});
                    }
                    std::sort(value.begin(), value.end(),
                              [](const SparseTerm& a, const SparseTerm& b) { return a.index < b.index; });
                    algebra_.set_bracket(row, col, std::move(value));
                }
        }
}

SparseVec TitsAlgebra::charge_element(std::array<long long, 3> charges) const {
    if (h_dim_ != 8) throw std::invalid_argument("charge elements live in the octonion rows");
    if (charges[0] + charges[1] + charges[2] != 0) throw std::invalid_argument("charges must sum to zero");
    // the graded g2 basis starts with h(1,0,-1), h(0,1,-1)
    SparseVec out;
    if (charges[0] != 0) out.push_back({derh_index(0), FieldScalar(charges[0])});
    if (charges[1] != 0) out.push_back({derh_index(1), FieldScalar(charges[1])});
    return out;
}

TitsNormalization fit_tits_normalization() {
    std::vector<Rational> lambdas, mus;
    for (long long d : {1, 2, 3, 4, 6, 12, 24}) {
        lambdas.push_back(Rational(1, d));
        lambdas.push_back(Rational(-1, d));
    }
    for (long long n : {1, 2}) {
        for (long long d : {1, 2, 3, 4}) {
            if (std::gcd(n, d) != 1) continue;
            mus.push_back(Rational(n, d));
            mus.push_back(Rational(-n, d));
        }
    }
    std::vector<TitsNormalization> winners;
    for (const auto& lambda : lambdas)
        for (const auto& mu : mus) {
            TitsAlgebra candidate(4, 1, {lambda, mu});
            if (jacobi_check(candidate.algebra(), JacobiMode::exhaustive).ok())
                winners.push_back({lambda, mu});
        }
    if (winners.size() != 1) throw std::logic_error("Jacobi does not pin a unique normalization on the grid");
    // confirm on an octonion row before accepting
    TitsAlgebra f4(8, 1, winners.front());
    if (!jacobi_check(f4.algebra(), JacobiMode::exhaustive).ok())
        throw std::logic_error("fitted normalization fails on the octonion row");
    return winners.front();
}

MagicSquareReport magic_square() {
    static const char* names[4][4] = {{"a1", "a2", "c3", "f4"},
                                      {"a2", "a2+a2", "a5", "e6"},
                                      {"c3", "a5", "d6", "e7"},
                                      {"f4", "e6", "e7", "e8"}};
    static const int dims[4] = {1, 2, 4, 8};
    MagicSquareReport report;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            TitsAlgebra entry(dims[r], dims[c]);
            MagicSquareEntry& cell = report.grid[r][c];
            cell.dim = entry.algebra().dim();
            int attempts = cell.dim < 100 ? 2 : 1;
            cell.rank = rank_by_generic_nullity(entry.algebra(), 1000 + 16 * r + c, attempts);
            cell.type = names[r][c];
        }
    report.dimension_symmetric = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (report.grid[r][c].dim != report.grid[c][r].dim) report.dimension_symmetric = false;
    return report;
}

ChainDecomposition chain_decompose_e8() {
    ChainDecomposition chain;
    const JSide& j8 = jside(8);
    const JSide& j2 = jside(2);
    const HSide& h8 = hside(8);

    int der_c = (int)h8.der_ops.size();            // 14
    int j0_8 = (int)j8.j0.size();                  // 26
    int der_j8 = j8.der.dim();                     // 52
    int j0_2 = (int)j2.j0.size();                  // 8
    int der_j2 = j2.der.dim();                     // 8
    int pairs8 = 6 * (j0_8 + 1);                   // three Jordan pairs, trace completed
    int pairs2 = 6 * (j0_2 + 1);
    int a2 = 8;

    chain.steps.push_back({"Der(C) + C0xJ0^8 + Der(J^8)",
                           {{"Der(C)", der_c}, {"C0xJ0^8", 7 * j0_8}, {"Der(J^8)", der_j8}}});
    chain.steps.push_back({"a2^c + 3x(J^8,J^8bar) + g0^8",
                           {{"a2^c", a2}, {"3x(J8,J8bar)", pairs8}, {"iu7xJ0^8", j0_8}, {"Der(J^8)", der_j8}}});
    chain.steps.push_back({"a2^c + 3x(J^8,J^8bar) + Der(C) + C0xJ0^2 + Der(J^2)",
                           {{"a2^c", a2},
                            {"3x(J8,J8bar)", pairs8},
                            {"Der(C)", der_c},
                            {"C0xJ0^2", 7 * j0_2},
                            {"Der(J^2)", der_j2}}});
    chain.steps.push_back({"a2^c + a2^f + 3x(J^8,J^8bar) + 3x(J^2,J^2bar) + g0^2",
                           {{"a2^c", a2},
                            {"a2^f", a2},
                            {"3x(J8,J8bar)", pairs8},
                            {"3x(J2,J2bar)", pairs2},
                            {"iu7xJ0^2", j0_2},
                            {"Der(J^2)", der_j2}}});
    chain.steps.push_back({"a2^c + a2^f + a2^g1 + a2^g2 + 3x(J^8,J^8bar) + 3x(J^2,J^2bar)",
                           {{"a2^c", a2},
                            {"a2^f", a2},
                            {"a2^g1", a2},
                            {"a2^g2", a2},
                            {"3x(J8,J8bar)", pairs8},
                            {"3x(J2,J2bar)", pairs2}}});
    for (const auto& step : chain.steps)
        if (step.total() != 248)
            throw std::logic_error("chain step does not total 248: " + step.display);

    // leaves aligned with the nested root decomposition: an a2 carries six
    // roots plus two Cartan directions, a Jordan module only roots
    NestedDecomposition nested = nested_decomposition(AlgebraName::e8);
    for (const auto& leaf : nested.leaves) {
        int roots = (int)leaf.roots.size();
        int dim = leaf.label.rfind("a2", 0) == 0 ? roots + 2 : roots;
        chain.leaves.emplace_back(leaf.label, std::make_pair(dim, roots));
    }
    int total_dim = 0, total_roots = 0;
    for (const auto& [label, pair] : chain.leaves) {
        total_dim += pair.first;
        total_roots += pair.second;
    }
    if (total_dim != 248 || total_roots != 240)
        throw std::logic_error("leaf inventory does not reproduce 248 = 240 roots + 8 Cartan");
    return chain;
}

}  // namespace atlas
