#include "atlas/jordan.hpp"

#include <stdexcept>

namespace atlas {

namespace {

using Matrix3H = std::array<std::array<HurwitzElement, 3>, 3>;

Matrix3H expand(const JordanAlgebra& jordan, const JordanElement& e, int n) {
    Matrix3H m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = HurwitzElement(n);
    for (int i = 0; i < 3; ++i) m[i][i] = e.diag[i] * HurwitzElement::unit(n);
    m[0][1] = e.off[0];
    m[1][0] = conj_oct(e.off[0]);
    m[2][0] = e.off[1];
    m[0][2] = conj_oct(e.off[1]);
    m[1][2] = e.off[2];
    m[2][1] = conj_oct(e.off[2]);
    (void)jordan;
    return m;
}

Matrix3H mul3(const Matrix3H& x, const Matrix3H& y, int n) {
    Matrix3H out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            HurwitzElement sum(n);
            for (int k = 0; k < 3; ++k) sum = sum + x[i][k] * y[k][j];
            out[i][j] = sum;
        }
    return out;
}

JordanElement contract(const Matrix3H& m, int n) {
    JordanElement e;
    for (int i = 0; i < 3; ++i) {
        const HurwitzElement& d = m[i][i];
        for (int t = 1; t < n; ++t)
            if (!d.coord(t).is_zero()) throw std::logic_error("Jordan product has a non-scalar diagonal");
        e.diag[i] = d.coord(0);
    }
    if (!(m[1][0] == conj_oct(m[0][1])) || !(m[0][2] == conj_oct(m[2][0])) || !(m[2][1] == conj_oct(m[1][2])))
        throw std::logic_error("Jordan product is not hermitean");
    e.off[0] = m[0][1];
    e.off[1] = m[2][0];
    e.off[2] = m[1][2];
    return e;
}

}  // namespace

JordanAlgebra::JordanAlgebra(int hurwitz_dim) : n_(hurwitz_dim), dim_(3 + 3 * hurwitz_dim) {
    if (n_ != 1 && n_ != 2 && n_ != 4 && n_ != 8) throw std::invalid_argument("J3^n requires n in {1,2,4,8}");
    for (int i = 1; i <= 3; ++i) labels_.push_back("E" + std::to_string(i));
    const char* slots = "abc";
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < n_; ++t)
            labels_.push_back(std::string(1, slots[s]) + "(u" + std::to_string(t) + ")");

    // structure constants of o through the free matrix product
    const FieldScalar half(Rational(1, 2));
    circ_table_.assign(dim_, std::vector<SparseVec>(dim_));
    std::vector<Matrix3H> basis_mats;
    for (int b = 0; b < dim_; ++b) basis_mats.push_back(expand(*this, element_of(basis_vec(b)), n_));
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            Matrix3H xy = mul3(basis_mats[i], basis_mats[j], n_);
            Matrix3H yx = mul3(basis_mats[j], basis_mats[i], n_);
            Matrix3H sym;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) sym[r][c] = half * (xy[r][c] + yx[r][c]);
            Vec coords = coords_of(contract(sym, n_));
            circ_table_[i][j] = to_sparse(coords);
            circ_table_[j][i] = circ_table_[i][j];
        }

    for (int i = 0; i < dim_; ++i) {
        Mat L((size_t)dim_, (size_t)dim_);
        for (int j = 0; j < dim_; ++j)
            for (const auto& t : circ_table_[i][j]) L((size_t)t.index, (size_t)j) = t.coef;
        left_ops_.push_back(std::move(L));
    }
}

Vec JordanAlgebra::unit() const {
    Vec u(dim_);
    u[0] = u[1] = u[2] = FieldScalar::one();
    return u;
}

Vec JordanAlgebra::basis_vec(int index) const {
    Vec v(dim_);
    v[index] = FieldScalar::one();
    return v;
}

Vec JordanAlgebra::coords_of(const JordanElement& e) const {
    Vec v(dim_);
    for (int i = 0; i < 3; ++i) v[i] = e.diag[i];
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < n_; ++t) v[3 + s * n_ + t] = e.off[s].coord(t);
    return v;
}

JordanElement JordanAlgebra::element_of(const Vec& coords) const {
    JordanElement e;
    for (int i = 0; i < 3; ++i) e.diag[i] = coords[i];
    for (int s = 0; s < 3; ++s) {
        HurwitzElement h(n_);
        for (int t = 0; t < n_; ++t) h.coord(t) = coords[3 + s * n_ + t];
        e.off[s] = h;
    }
    return e;
}

Vec JordanAlgebra::circ(const Vec& x, const Vec& y) const {
    Vec out(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            FieldScalar scale = x[i] * y[j];
            for (const auto& t : circ_table_[i][j]) out[t.index].add_mul(t.coef, scale);
        }
    }
    return out;
}

Mat JordanAlgebra::left_mult(const Vec& x) const {
    Mat L((size_t)dim_, (size_t)dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        L = L + x[i] * left_ops_[i];
    }
    return L;
}

FieldScalar JordanAlgebra::trace_of(const Vec& x) const { return x[0] + x[1] + x[2]; }

Vec JordanAlgebra::traceless(const Vec& x) const {
    FieldScalar shift = trace_of(x) / FieldScalar(3);
    Vec out = x;
    for (int i = 0; i < 3; ++i) out[i] -= shift;
    return out;
}

FieldScalar JordanAlgebra::trace_form(const Vec& x, const Vec& y) const { return trace_of(circ(x, y)); }

std::vector<Vec> JordanAlgebra::traceless_basis() const {
    std::vector<Vec> out;
    Vec d1(dim_), d2(dim_);
    d1[0] = FieldScalar::one();
    d1[1] = -FieldScalar::one();
    d2[1] = FieldScalar::one();
    d2[2] = -FieldScalar::one();
    out.push_back(d1);
    out.push_back(d2);
    for (int b = 3; b < dim_; ++b) out.push_back(basis_vec(b));
    return out;
}

Mat JordanAlgebra::quadratic_U(const Vec& x) const {
    Mat L = left_mult(x);
    return FieldScalar(2) * (L * L) - left_mult(circ(x, x));
}

Mat JordanAlgebra::linearized_V(const Vec& x, const Vec& y) const {
    Mat Lx = left_mult(x), Ly = left_mult(y);
    Mat out = Lx * Ly - Ly * Lx + left_mult(circ(x, y));
    return FieldScalar(2) * out;
}

Mat JordanAlgebra::linearized_V_by_polarization(const Vec& x, const Vec& y) const {
    Mat Ux = quadratic_U(x);
    Mat out((size_t)dim_, (size_t)dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec ej = basis_vec(j);
        Vec xz = add(x, ej);
        Vec column = sub(sub(quadratic_U(xz).apply(y), Ux.apply(y)), quadratic_U(ej).apply(y));
        for (int i = 0; i < dim_; ++i) out((size_t)i, (size_t)j) = column[i];
    }
    return out;
}

JordanDerivationAlgebra::JordanDerivationAlgebra(const JordanAlgebra& jordan) : jordan_dim_(jordan.dim()) {
    int d = jordan.dim();
    span_ = SpanBasis((size_t)d * d);
    std::vector<std::string> labels;
    pair_coords_.assign(d, std::vector<std::vector<FieldScalar>>(d));

    std::vector<std::pair<int, int>> pending;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Mat comm = commutator(jordan.basis_left_mult(i), jordan.basis_left_mult(j));
            if (span_.add(comm.flatten()) >= 0) {
                ops_.push_back(comm);
                labels.push_back("[L(" + jordan.labels()[i] + "),L(" + jordan.labels()[j] + ")]");
            }
            pending.emplace_back(i, j);
        }
    for (auto [i, j] : pending) {
        Mat comm = commutator(jordan.basis_left_mult(i), jordan.basis_left_mult(j));
        auto coords = span_.express(comm.flatten());
        if (!coords) throw std::logic_error("left-multiplication commutator escapes the derivation span");
        pair_coords_[i][j] = *coords;
        pair_coords_[i][j].resize(ops_.size());
    }
    zero_.assign(ops_.size(), FieldScalar());

    algebra_ = LieAlgebra(labels);
    for (size_t s = 0; s < ops_.size(); ++s)
        for (size_t t = s + 1; t < ops_.size(); ++t) {
            Mat comm = commutator(ops_[s], ops_[t]);
            auto coords = span_.express(comm.flatten());
            if (!coords) throw std::logic_error("derivation algebra is not closed under bracket");
            algebra_.set_bracket((int)s, (int)t, to_sparse(*coords));
        }
}

std::vector<FieldScalar> JordanDerivationAlgebra::express(const Mat& op) const {
    auto coords = span_.express(op.flatten());
    if (!coords) throw std::domain_error("operator outside Der(J)");
    coords->resize(ops_.size());
    return *coords;
}

const std::vector<FieldScalar>& JordanDerivationAlgebra::left_commutator_coords(int i, int j) const {
    if (i == j) return zero_;
    return pair_coords_[std::min(i, j)][std::max(i, j)];  // caller handles the sign for i > j
}

int reduced_structure_dim(const JordanAlgebra& jordan, const JordanDerivationAlgebra& der) {
    int d = jordan.dim();
    SpanBasis span((size_t)d * d);
    for (const auto& x : jordan.traceless_basis()) span.add(jordan.left_mult(x).flatten());
    for (const auto& op : der.ops()) span.add(op.flatten());
    return (int)span.rank();
}

TkkAlgebra::TkkAlgebra(int hurwitz_dim) : jordan_(hurwitz_dim), der_(jordan_) {
    int d = jordan_.dim();
    int dd = der_.dim();
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("x(" + jordan_.labels()[i] + ")");
    for (int i = 0; i < d; ++i) labels.push_back("L(" + jordan_.labels()[i] + ")");
    for (int t = 0; t < dd; ++t) labels.push_back("der" + std::to_string(t));
    for (int i = 0; i < d; ++i) labels.push_back("y(" + jordan_.labels()[i] + ")");
    algebra_ = LieAlgebra(labels);
    for (int i = 0; i < d; ++i) {
        algebra_.set_block(x_index(i), 1);
        algebra_.set_block(left_index(i), 0);
        algebra_.set_block(y_index(i), -1);
    }
    for (int t = 0; t < dd; ++t) algebra_.set_block(der_index(t), 0);

    auto sparse_x = [&](const Vec& v) {
        SparseVec out;
        for (int i = 0; i < d; ++i)
            if (!v[i].is_zero()) out.push_back({x_index(i), v[i]});
        return out;
    };
    auto sparse_y = [&](const Vec& v) {
        SparseVec out;
        for (int i = 0; i < d; ++i)
            if (!v[i].is_zero()) out.push_back({y_index(i), v[i]});
        return out;
    };

    // [x_i, y_j] = L_{e_i o e_j} + [L_i, L_j]
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SparseVec value;
            Vec prod = jordan_.circ(jordan_.basis_vec(i), jordan_.basis_vec(j));
            for (int k = 0; k < d; ++k)
                if (!prod[k].is_zero()) value.push_back({left_index(k), prod[k]});
            const auto& comm = der_.left_commutator_coords(i, j);
            for (size_t t = 0; t < comm.size(); ++t) {
                FieldScalar c = i < j ? comm[t] : -comm[t];
                if (!c.is_zero()) value.push_back({der_index((int)t), c});
            }
            algebra_.set_bracket(x_index(i), y_index(j), std::move(value));
        }

    // [L_i, x_j] = (e_i o e_j) as a grade +1 element; [L_i, y_j] = -(e_i o e_j)bar
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec prod = jordan_.circ(jordan_.basis_vec(i), jordan_.basis_vec(j));
            algebra_.set_bracket(left_index(i), x_index(j), sparse_x(prod));
            SparseVec minus;
            for (int k = 0; k < d; ++k)
                if (!prod[k].is_zero()) minus.push_back({y_index(k), -prod[k]});
            algebra_.set_bracket(left_index(i), y_index(j), std::move(minus));
        }

    // [D_t, x_j] = (D_t e_j); [D_t, y_j] = (D_t e_j)bar
    for (int t = 0; t < dd; ++t) {
        const Mat& op = der_.ops()[t];
        for (int j = 0; j < d; ++j) {
            Vec image = op.apply(jordan_.basis_vec(j));
            algebra_.set_bracket(der_index(t), x_index(j), sparse_x(image));
            algebra_.set_bracket(der_index(t), y_index(j), sparse_y(image));
        }
    }

    // grade 0 brackets: [L_i, L_j] in Der; [L_i, D_t] = -L_{D_t e_i}; [D_s, D_t] in Der
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            SparseVec value;
            const auto& comm = der_.left_commutator_coords(i, j);
            for (size_t t = 0; t < comm.size(); ++t)
                if (!comm[t].is_zero()) value.push_back({der_index((int)t), comm[t]});
            algebra_.set_bracket(left_index(i), left_index(j), std::move(value));
        }
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < dd; ++t) {
            Vec image = der_.ops()[t].apply(jordan_.basis_vec(i));
            SparseVec value;
            for (int k = 0; k < d; ++k)
                if (!image[k].is_zero()) value.push_back({left_index(k), -image[k]});
            algebra_.set_bracket(left_index(i), der_index(t), std::move(value));
        }
    for (int s = 0; s < dd; ++s)
        for (int t = s + 1; t < dd; ++t) {
            SparseVec value;
            for (const auto& term : der_.algebra().bracket_basis(s, t))
                value.push_back({der_index(term.index), term.coef});
            algebra_.set_bracket(der_index(s), der_index(t), std::move(value));
        }
}

SparseVec TkkAlgebra::grading_element() const {
    SparseVec h;
    for (int i = 0; i < 3; ++i) h.push_back({left_index(i), FieldScalar::one()});
    return h;
}

SparseVec TkkAlgebra::embed_x(const Vec& coords) const {
    SparseVec out;
    for (int i = 0; i < jordan_.dim(); ++i)
        if (!coords[i].is_zero()) out.push_back({x_index(i), coords[i]});
    return out;
}

SparseVec TkkAlgebra::embed_y(const Vec& coords) const {
    SparseVec out;
    for (int i = 0; i < jordan_.dim(); ++i)
        if (!coords[i].is_zero()) out.push_back({y_index(i), coords[i]});
    return out;
}

Vec TkkAlgebra::v_by_brackets(const Vec& x, const Vec& y, const Vec& z) const {
    SparseVec inner = algebra_.bracket(embed_x(x), embed_y(y));
    SparseVec result = algebra_.bracket(inner, embed_x(z));
    Vec out(jordan_.dim());
    for (const auto& t : result) {
        if (t.index >= jordan_.dim()) throw std::logic_error("double bracket left grade +1");
        out[t.index] = t.coef;
    }
    return out;
}

}  // namespace atlas
