#include "atlas/hurwitz.hpp"

#include <stdexcept>

namespace atlas {

namespace {

const FieldScalar kHalfScalar(Rational(1, 2));

// Zorn block forms of the basis octonions; the source of the product table.
ZornMatrix zorn_basis(int index) {
    ZornMatrix z;
    const FieldScalar i = FieldScalar::imaginary_unit();
    if (index == 0) {
        z.alpha_plus = z.alpha_minus = FieldScalar::one();
    } else if (index <= 3) {
        z.a_plus[index - 1] = FieldScalar::one();
        z.a_minus[index - 1] = FieldScalar::one();
    } else if (index <= 6) {
        z.a_plus[index - 4] = i;
        z.a_minus[index - 4] = -i;
    } else {
        z.alpha_plus = -i;
        z.alpha_minus = i;
    }
    return z;
}

struct TableEntry {
    int sign;   // 0 when the product vanishes (never happens here)
    int index;  // basis index of the product
};

// u_i u_j = sign * u_index, derived once from the Zorn product.
const std::array<std::array<TableEntry, 8>, 8>& oct_table() {
    static const auto table = [] {
        std::array<std::array<TableEntry, 8>, 8> t{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                HurwitzElement p = from_zorn(zorn_mul(zorn_basis(i), zorn_basis(j)));
                int found = -1, sign = 0;
                for (int k = 0; k < 8; ++k) {
                    const FieldScalar& c = p.coord(k);
                    if (c.is_zero()) continue;
                    if (found >= 0 || (c != FieldScalar::one() && c != -FieldScalar::one()))
                        throw std::logic_error("octonion basis product is not a signed basis element");
                    found = k;
                    sign = c == FieldScalar::one() ? 1 : -1;
                }
                if (found < 0) throw std::logic_error("octonion basis product vanished");
                t[i][j] = {sign, found};
            }
        return t;
    }();
    return table;
}

void require_same_dim(const HurwitzElement& x, const HurwitzElement& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("Hurwitz algebra dimension mismatch");
}

}  // namespace

HurwitzElement HurwitzElement::rho(int sign) {
    HurwitzElement x(8);
    x.coords_[0] = kHalfScalar;
    x.coords_[7] = (sign > 0 ? kHalfScalar : -kHalfScalar) * FieldScalar::imaginary_unit();
    return x;
}

HurwitzElement HurwitzElement::epsilon(int k, int sign) { return rho(sign) * basis(8, k); }

HurwitzElement HurwitzElement::i_u7() {
    HurwitzElement x(8);
    x.coords_[7] = FieldScalar::imaginary_unit();
    return x;
}

HurwitzElement operator+(const HurwitzElement& x, const HurwitzElement& y) {
    require_same_dim(x, y);
    HurwitzElement r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r.coords_[i] = x.coords_[i] + y.coords_[i];
    return r;
}

HurwitzElement operator-(const HurwitzElement& x, const HurwitzElement& y) {
    require_same_dim(x, y);
    HurwitzElement r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r.coords_[i] = x.coords_[i] - y.coords_[i];
    return r;
}

HurwitzElement operator-(const HurwitzElement& x) {
    HurwitzElement r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r.coords_[i] = -x.coords_[i];
    return r;
}

HurwitzElement operator*(const FieldScalar& s, const HurwitzElement& x) {
    HurwitzElement r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r.coords_[i] = s * x.coords_[i];
    return r;
}

HurwitzElement operator*(const HurwitzElement& x, const HurwitzElement& y) {
    require_same_dim(x, y);
    const auto& table = oct_table();
    HurwitzElement r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) {
        if (x.coords_[i].is_zero()) continue;
        for (int j = 0; j < x.dim_; ++j) {
            if (y.coords_[j].is_zero()) continue;
            const TableEntry& e = table[i][j];
            FieldScalar p = x.coords_[i] * y.coords_[j];
            if (e.sign < 0)
                r.coords_[e.index] -= p;
            else
                r.coords_[e.index] += p;
        }
    }
    return r;
}

std::string HurwitzElement::to_string() const {
    std::string out;
    bool empty = true;
    for (int i = 0; i < dim_; ++i) {
        if (coords_[i].is_zero()) continue;
        if (!empty) out += " + ";
        out += "(" + coords_[i].to_string() + ")";
        if (i > 0) out += "*u" + std::to_string(i);
        empty = false;
    }
    return empty ? "0" : out;
}

HurwitzElement conj_oct(const HurwitzElement& x) {
    HurwitzElement r(x.dim());
    r.coord(0) = x.coord(0);
    for (int i = 1; i < x.dim(); ++i) r.coord(i) = -x.coord(i);
    return r;
}

FieldScalar norm(const HurwitzElement& x) {
    HurwitzElement p = x * conj_oct(x);
    for (int i = 1; i < x.dim(); ++i)
        if (!p.coord(i).is_zero()) throw std::logic_error("norm is not a scalar");
    return p.coord(0);
}

FieldScalar trace(const HurwitzElement& x) { return FieldScalar(2) * x.coord(0); }

FieldScalar trace_pairing(const HurwitzElement& x, const HurwitzElement& y) { return trace(x * y); }

HurwitzElement commutator(const HurwitzElement& x, const HurwitzElement& y) { return x * y - y * x; }

HurwitzElement associator(const HurwitzElement& x, const HurwitzElement& y, const HurwitzElement& z) {
    return (x * y) * z - x * (y * z);
}

ZornMatrix to_zorn(const HurwitzElement& x) {
    if (x.dim() != 8) throw std::invalid_argument("Zorn form requires an octonion");
    const FieldScalar i = FieldScalar::imaginary_unit();
    ZornMatrix z;
    z.alpha_plus = x.coord(0) - i * x.coord(7);
    z.alpha_minus = x.coord(0) + i * x.coord(7);
    for (int k = 0; k < 3; ++k) {
        z.a_plus[k] = x.coord(1 + k) + i * x.coord(4 + k);
        z.a_minus[k] = x.coord(1 + k) - i * x.coord(4 + k);
    }
    return z;
}

HurwitzElement from_zorn(const ZornMatrix& z) {
    const FieldScalar ihalf = kHalfScalar * FieldScalar::imaginary_unit();
    HurwitzElement x(8);
    x.coord(0) = kHalfScalar * (z.alpha_plus + z.alpha_minus);
    x.coord(7) = ihalf * (z.alpha_plus - z.alpha_minus);
    for (int k = 0; k < 3; ++k) {
        x.coord(1 + k) = kHalfScalar * (z.a_plus[k] + z.a_minus[k]);
        x.coord(4 + k) = -ihalf * (z.a_plus[k] - z.a_minus[k]);
    }
    return x;
}

namespace {

// A.B = -sum a_k b_k; the sign makes u_k^2 = -1 under the bijection.
FieldScalar zorn_dot(const std::array<FieldScalar, 3>& a, const std::array<FieldScalar, 3>& b) {
    FieldScalar s;
    for (int k = 0; k < 3; ++k) s.add_mul(a[k], b[k]);
    return -s;
}

std::array<FieldScalar, 3> zorn_cross(const std::array<FieldScalar, 3>& a, const std::array<FieldScalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<FieldScalar, 3> combine3(const FieldScalar& c1, const std::array<FieldScalar, 3>& v1,
                                    const FieldScalar& c2, const std::array<FieldScalar, 3>& v2,
                                    const std::array<FieldScalar, 3>& cross) {
    std::array<FieldScalar, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = c1 * v1[k] + c2 * v2[k] + cross[k];
    return out;
}

}  // namespace

ZornMatrix zorn_mul(const ZornMatrix& x, const ZornMatrix& y) {
    ZornMatrix r;
    r.alpha_plus = x.alpha_plus * y.alpha_plus + zorn_dot(x.a_plus, y.a_minus);
    r.alpha_minus = x.alpha_minus * y.alpha_minus + zorn_dot(x.a_minus, y.a_plus);
    r.a_plus = combine3(x.alpha_plus, y.a_plus, y.alpha_minus, x.a_plus, zorn_cross(x.a_minus, y.a_minus));
    r.a_minus = combine3(x.alpha_minus, y.a_minus, y.alpha_plus, x.a_minus, zorn_cross(x.a_plus, y.a_plus));
    return r;
}

std::string ZornMatrix::to_string() const {
    auto row = [](const FieldScalar& a, const std::array<FieldScalar, 3>& v) {
        return "[" + a.to_string() + " | (" + v[0].to_string() + ", " + v[1].to_string() + ", " +
               v[2].to_string() + ")]";
    };
    return row(alpha_plus, a_plus) + "\n" + row(alpha_minus, a_minus);
}

Mat derivation(const HurwitzElement& a, const HurwitzElement& b) {
    require_same_dim(a, b);
    int dim = a.dim();
    if (dim != 4 && dim != 8) throw std::invalid_argument("derivations require dimension 4 or 8");
    const FieldScalar third(Rational(1, 3));
    HurwitzElement comm = commutator(a, b);
    Mat op((size_t)dim, (size_t)dim);
    for (int j = 0; j < dim; ++j) {
        HurwitzElement ej = HurwitzElement::basis(dim, j);
        HurwitzElement image = third * commutator(comm, ej) - associator(a, b, ej);
        for (int i = 0; i < dim; ++i) op((size_t)i, (size_t)j) = image.coord(i);
    }
    return op;
}

bool leibniz_holds(const Mat& op, int dim) {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            HurwitzElement x = HurwitzElement::basis(dim, i), y = HurwitzElement::basis(dim, j);
            HurwitzElement lhs(dim, op.apply((x * y).to_vec()));
            HurwitzElement rhs = HurwitzElement(dim, op.apply(x.to_vec())) * y +
                                 x * HurwitzElement(dim, op.apply(y.to_vec()));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

std::vector<FieldScalar> DerivationAlgebra::express(const Mat& op) const {
    auto coords = span_.express(op.flatten());
    if (!coords) throw std::domain_error("operator outside the derivation algebra");
    return *coords;
}

DerivationAlgebra make_derivation_algebra(int dim, std::vector<Mat> ops, std::vector<std::string> labels) {
    DerivationAlgebra out;
    out.hurwitz_dim = dim;
    out.span_ = SpanBasis((size_t)dim * dim);
    std::vector<Mat> independent;
    std::vector<std::string> kept;
    for (size_t t = 0; t < ops.size(); ++t) {
        if (out.span_.add(ops[t].flatten()) >= 0) {
            independent.push_back(ops[t]);
            kept.push_back(labels[t]);
        }
    }
    out.ops = std::move(independent);
    out.algebra = LieAlgebra(kept);
    for (size_t i = 0; i < out.ops.size(); ++i)
        for (size_t j = i + 1; j < out.ops.size(); ++j) {
            Mat comm = commutator(out.ops[i], out.ops[j]);
            auto coords = out.span_.express(comm.flatten());
            if (!coords) throw std::logic_error("derivation span is not closed under bracket");
            out.algebra.set_bracket((int)i, (int)j, to_sparse(*coords));
        }
    return out;
}

DerivationAlgebra derivation_algebra(int dim) {
    if (dim != 4 && dim != 8) throw std::invalid_argument("derivation_algebra requires dimension 4 or 8");
    std::vector<Mat> ops;
    std::vector<std::string> labels;
    for (int i = 1; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            ops.push_back(derivation(HurwitzElement::basis(dim, i), HurwitzElement::basis(dim, j)));
            labels.push_back("D(u" + std::to_string(i) + ",u" + std::to_string(j) + ")");
        }
    return make_derivation_algebra(dim, std::move(ops), std::move(labels));
}

DerivationAlgebra g2_zorn_adapted() {
    DerivationAlgebra generic = derivation_algebra(8);
    if (generic.ops.size() != 14) throw std::logic_error("Der of the octonions should have dimension 14");

    // D_7: derivations killing u_7, i.e. the kernel of D -> D(u_7)
    Mat action_on_u7(8, 14);
    for (size_t t = 0; t < generic.ops.size(); ++t)
        for (int r = 0; r < 8; ++r) action_on_u7((size_t)r, t) = generic.ops[t]((size_t)r, 7);
    std::vector<Vec> kernel = kernel_basis(action_on_u7);
    if (kernel.size() != 8) throw std::logic_error("the u_7 stabilizer in g2 should have dimension 8");

    std::vector<Mat> ops;
    std::vector<std::string> labels;
    for (size_t n = 0; n < kernel.size(); ++n) {
        Mat op(8, 8);
        for (size_t t = 0; t < generic.ops.size(); ++t) {
            if (kernel[n][t].is_zero()) continue;
            op = op + kernel[n][t] * generic.ops[t];
        }
        ops.push_back(op);
        labels.push_back("D7(" + std::to_string(n) + ")");
    }
    const FieldScalar three_half(Rational(3, 2));
    for (int sign : {1, -1})
        for (int k = 1; k <= 3; ++k) {
            Mat op = (sign > 0 ? three_half : -three_half) *
                     derivation(HurwitzElement::i_u7(), HurwitzElement::epsilon(k, sign));
            ops.push_back(op);
            labels.push_back(std::string("D") + (sign > 0 ? "+" : "-") + "(" + std::to_string(k) + ")");
        }
    DerivationAlgebra adapted = make_derivation_algebra(8, std::move(ops), std::move(labels));
    if (adapted.ops.size() != 14) throw std::logic_error("Zorn-adapted g2 basis is not independent");
    return adapted;
}

Mat charge_derivation(std::array<long long, 3> charges) {
    if (charges[0] + charges[1] + charges[2] != 0)
        throw std::invalid_argument("charge derivation requires traceless charges");
    // h(u_k) = -i c_k u_{3+k}, h(u_{3+k}) = i c_k u_k, h(1) = h(u_7) = 0
    const FieldScalar i = FieldScalar::imaginary_unit();
    Mat h(8, 8);
    for (int k = 0; k < 3; ++k) {
        FieldScalar c((long long)charges[k]);
        h((size_t)(4 + k), (size_t)(1 + k)) = -(i * c);
        h((size_t)(1 + k), (size_t)(4 + k)) = i * c;
    }
    return h;
}

DerivationAlgebra g2_graded() {
    DerivationAlgebra adapted = g2_zorn_adapted();

    // ad of a generic charge element on the u7 stabilizer D7; its root
    // elements are the one-dimensional eigenspaces.
    Mat h0 = charge_derivation({1, 5, -6});
    SpanBasis d7_span(64);
    for (int n = 0; n < 8; ++n) d7_span.add(adapted.ops[n].flatten());
    Mat ad_h0(8, 8);
    for (int n = 0; n < 8; ++n) {
        Mat comm = commutator(h0, adapted.ops[n]);
        auto coords = d7_span.express(comm.flatten());
        if (!coords) throw std::logic_error("charge element does not normalize D7");
        for (int r = 0; r < 8; ++r) ad_h0((size_t)r, (size_t)n) = (*coords)[r];
    }

    std::vector<Mat> ops;
    std::vector<std::string> labels;
    ops.push_back(charge_derivation({1, 0, -1}));
    ops.push_back(charge_derivation({0, 1, -1}));
    labels.push_back("h(1,0,-1)");
    labels.push_back("h(0,1,-1)");
    for (long long w : {-4, 4, 7, -7, 11, -11}) {
        Mat shifted = ad_h0 - FieldScalar(w) * Mat::identity(8);
        std::vector<Vec> kern = kernel_basis(shifted);
        if (kern.size() != 1) throw std::logic_error("charge eigenvalue multiplicity is not one on D7");
        Mat op(8, 8);
        for (int n = 0; n < 8; ++n)
            if (!kern[0][n].is_zero()) op = op + kern[0][n] * adapted.ops[n];
        ops.push_back(op);
        labels.push_back("a2root(" + std::to_string(w) + ")");
    }
    for (size_t t = 8; t < 14; ++t) {
        ops.push_back(adapted.ops[t]);
        labels.push_back(adapted.algebra.labels()[t]);
    }
    DerivationAlgebra graded = make_derivation_algebra(8, std::move(ops), std::move(labels));
    if (graded.ops.size() != 14) throw std::logic_error("graded g2 basis is not independent");
    return graded;
}

}  // namespace atlas
