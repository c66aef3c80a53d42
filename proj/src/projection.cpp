#include "atlas/projection.hpp"

#include <algorithm>
#include <stdexcept>

namespace atlas {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

RootVector combo(std::initializer_list<std::pair<int, FieldScalar>> terms) {
    RootVector v;
    for (const auto& [idx, c] : terms) v.coords[idx - 1] += c;
    return v;
}

FieldScalar rat(long long n, long long d = 1) { return FieldScalar(Rational(n, d)); }

void sort_roots(std::vector<RootVector>& roots) {
    std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) { return tuple_less(a, b); });
}

bool same_set(const std::vector<RootVector>& a, const std::vector<RootVector>& b) {
    if (a.size() != b.size()) return false;
    RootSet set(a.begin(), a.end());
    for (const auto& r : b)
        if (!set.count(r)) return false;
    return true;
}

}  // namespace

Subspace::Subspace(std::vector<RootVector> basis, RootVector offset) {
    // exact Gram-Schmidt, unnormalized; dependent input is a caller bug
    for (const auto& b : basis) {
        RootVector r = b;
        for (const auto& prev : basis_) {
            FieldScalar c = inner(r, prev) / inner(prev, prev);
            r = r - c * prev;
        }
        if (r.is_zero()) throw std::invalid_argument("Subspace basis is linearly dependent");
        basis_.push_back(r);
    }
    offset_ = offset;
    for (const auto& b : basis_) {
        FieldScalar c = inner(offset_, b) / inner(b, b);
        offset_ = offset_ - c * b;
    }
}

RootVector Subspace::project_span(const RootVector& v) const {
    RootVector out;
    for (const auto& b : basis_) {
        FieldScalar c = inner(v, b) / inner(b, b);
        out = out + c * b;
    }
    return out;
}

bool Subspace::contains(const RootVector& v) const {
    RootVector d = v - offset_;
    return project_span(d) == d;
}

bool Subspace::parallel_to(const Subspace& other) const {
    if (dimension() != other.dimension()) return false;
    for (const auto& b : basis_)
        if (other.project_span(b) != b) return false;
    return true;
}

Subspace pi_plane(std::array<int, 3> triple) {
    return Subspace::linear({RootVector::k(triple[0]) - RootVector::k(triple[1]),
                             RootVector::k(triple[1]) - RootVector::k(triple[2])});
}

RootVector project(const RootVector& v, const Subspace& s) {
    if (!s.is_linear()) throw std::invalid_argument("project requires a linear subspace");
    return s.project_span(v);
}

std::optional<FieldScalar> sqrt_in_field(const FieldScalar& x) {
    if (!x.is_rational()) return std::nullopt;
    const Rational& q = x.rational_part();
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return FieldScalar::zero();
    mpq_class value = q.to_mpq();
    mpz_class n = value.get_num() * value.get_den();
    if (!n.fits_slong_p()) return std::nullopt;
    long long product = n.get_si();  // sqrt(q) = sqrt(num*den)/den
    if (product > 1000000000000LL) return std::nullopt;  // keep trial division cheap
    long long square = 1, squarefree = 1;
    for (long long p = 2; p * p <= product; ++p) {
        while (product % (p * p) == 0) {
            product /= p * p;
            square *= p;
        }
        if (product % p == 0) {
            product /= p;
            squarefree *= p;
        }
    }
    squarefree *= product;
    Rational scale = Rational(square) / Rational::from_mpq(mpq_class(value.get_den()));
    switch (squarefree) {
        case 1: return FieldScalar(scale);
        case 2: return FieldScalar(scale) * FieldScalar::sqrt2();
        case 3: return FieldScalar(scale) * FieldScalar::sqrt3();
        case 6: return FieldScalar(scale) * FieldScalar::sqrt6();
        default: return std::nullopt;
    }
}

Distance distance_to(const Subspace& affine, const Subspace& linear) {
    if (!affine.parallel_to(linear)) throw std::invalid_argument("distance_to requires parallel subspaces");
    RootVector d = affine.offset() - linear.offset();
    Distance out;
    out.squared = inner(d, d);
    out.value = sqrt_in_field(out.squared);
    return out;
}

std::string part_tag_to_string(PartTag tag, int axis) {
    switch (tag) {
        case PartTag::outer_a2: return "outer_a2";
        case PartTag::g0: return "g0";
        case PartTag::jordan: return "J(" + std::to_string(axis) + ")";
        case PartTag::jordan_bar: return "Jbar(" + std::to_string(axis) + ")";
    }
    return "?";
}

const DecompositionPart& Decomposition::part(PartTag tag, int axis) const {
    for (const auto& p : parts)
        if (p.tag == tag && (tag == PartTag::outer_a2 || tag == PartTag::g0 || p.axis == axis)) return p;
    throw std::out_of_range("no such decomposition part");
}

std::vector<RootVector> highest_weight_list(AlgebraName name) {
    const FieldScalar h = FieldScalar(kHalf);
    const FieldScalar hr3 = h * FieldScalar::sqrt3();
    const FieldScalar hr2 = h * FieldScalar::sqrt2();
    std::vector<RootVector> out;
    auto half_prefix = [&](std::initializer_list<int> tail_signs, FieldScalar last, int last_idx) {
        RootVector v = combo({{1, -h}, {2, h}, {3, h}});
        int idx = 4;
        for (int s : tail_signs) v.coords[idx++ - 1] = s > 0 ? h : -h;
        v.coords[last_idx - 1] = last;
        return v;
    };
    switch (name) {
        case AlgebraName::f4:
            out = {combo({{1, rat(-1)}}),
                   combo({{1, rat(-1)}, {4, rat(1)}}),
                   combo({{1, rat(-1)}, {4, rat(-1)}}),
                   combo({{1, -h}, {2, h}, {3, h}, {4, h}}),
                   combo({{1, -h}, {2, h}, {3, h}, {4, -h}}),
                   combo({{2, rat(1)}, {3, rat(1)}})};
            break;
        case AlgebraName::e6:
            for (int j : {4, 5})
                for (int s : {1, -1}) out.push_back(combo({{1, rat(-1)}, {j, rat(s)}}));
            out.push_back(combo({{2, rat(1)}, {3, rat(1)}}));
            out.push_back(half_prefix({1, -1}, -hr3, 6));
            out.push_back(half_prefix({1, 1}, hr3, 6));
            out.push_back(half_prefix({-1, 1}, -hr3, 6));
            out.push_back(half_prefix({-1, -1}, hr3, 6));
            break;
        case AlgebraName::e7:
            for (int j : {4, 5, 6})
                for (int s : {1, -1}) out.push_back(combo({{1, rat(-1)}, {j, rat(s)}}));
            out.push_back(combo({{2, rat(1)}, {3, rat(1)}}));
            for (int s7 : {1, -1}) {
                FieldScalar last = s7 > 0 ? hr2 : -hr2;
                out.push_back(half_prefix({-1, -1, -1}, last, 7));
                out.push_back(half_prefix({-1, 1, 1}, last, 7));
                out.push_back(half_prefix({1, -1, 1}, last, 7));
                out.push_back(half_prefix({1, 1, -1}, last, 7));
            }
            break;
        case AlgebraName::e8:
            for (int j = 4; j <= 8; ++j)
                for (int s : {1, -1}) out.push_back(combo({{1, rat(-1)}, {j, rat(s)}}));
            out.push_back(combo({{2, rat(1)}, {3, rat(1)}}));
            for (int mask = 0; mask < 32; ++mask) {
                if (__builtin_popcount(mask) % 2 != 0) continue;  // even number of + signs
                RootVector v = combo({{1, -h}, {2, h}, {3, h}});
                for (int i = 0; i < 5; ++i) v.coords[3 + i] = (mask >> i & 1) ? h : -h;
                out.push_back(v);
            }
            break;
        default: throw std::invalid_argument("no highest-weight list for " + algebra_to_string(name));
    }
    sort_roots(out);
    return out;
}

namespace {

size_t jordan_size(AlgebraName name) {
    switch (name) {
        case AlgebraName::f4: return 6;
        case AlgebraName::e6: return 9;
        case AlgebraName::e7: return 15;
        case AlgebraName::e8: return 27;
        default: throw std::invalid_argument("decompose: unsupported algebra " + algebra_to_string(name));
    }
}

size_t g0_size(AlgebraName name) {
    switch (name) {
        case AlgebraName::f4: return 6;
        case AlgebraName::e6: return 12;
        case AlgebraName::e7: return 30;
        case AlgebraName::e8: return 72;
        default: return 0;
    }
}

}  // namespace

Decomposition decompose_set(AlgebraName name, const std::vector<RootVector>& roots, std::array<int, 3> triple) {
    size_t jsize = jordan_size(name);
    Subspace plane = pi_plane(triple);

    Decomposition out;
    out.name = name;
    out.triple = triple;
    out.parts.push_back({PartTag::outer_a2, 0, {}});
    out.parts.push_back({PartTag::g0, 0, {}});

    // the seven admissible fibers: zero, the hexagon, the six Jordan points
    std::vector<std::pair<RootVector, DecompositionPart*>> fibers;
    auto axis_point = [&](int m) {
        int p = 0, q = 0;
        for (int t : triple)
            if (t != m) (p ? q : p) = t;
        return FieldScalar(kThird) *
               (RootVector::k(p) + RootVector::k(q) - FieldScalar(2) * RootVector::k(m));
    };
    for (int m : triple) {
        out.parts.push_back({PartTag::jordan, m, {}});
        out.parts.push_back({PartTag::jordan_bar, m, {}});
    }
    std::vector<RootVector> hexagon;
    for (int a : triple)
        for (int b : triple)
            if (a != b) hexagon.push_back(RootVector::k(a) - RootVector::k(b));

    for (const auto& r : roots) {
        RootVector p = plane.project_span(r);
        DecompositionPart* target = nullptr;
        if (p.is_zero()) {
            target = &out.parts[1];
        } else {
            for (const auto& h : hexagon)
                if (p == h) target = &out.parts[0];
            if (!target)
                for (size_t m = 0; m < 3; ++m) {
                    RootVector ax = axis_point(triple[m]);
                    if (p == ax) target = &out.parts[2 + 2 * m];
                    if (p == -ax) target = &out.parts[3 + 2 * m];
                }
        }
        if (!target)
            throw std::logic_error("root " + r.to_string() + " projects to an unexpected point " + p.to_string());
        target->roots.push_back(r);
    }
    for (auto& part : out.parts) sort_roots(part.roots);

    if (out.parts[0].roots.size() != 6)
        throw std::logic_error("outer a2 has " + std::to_string(out.parts[0].roots.size()) + " roots");
    if (out.parts[1].roots.size() != g0_size(name)) throw std::logic_error("g0 part has unexpected size");
    for (size_t m = 0; m < 3; ++m) {
        if (out.parts[2 + 2 * m].roots.size() != jsize || out.parts[3 + 2 * m].roots.size() != jsize)
            throw std::logic_error("Jordan part has unexpected size");
    }

    // cross-check the highest-weight set against the published lists
    if (triple == std::array<int, 3>{1, 2, 3}) {
        if (!same_set(out.highest_weight().roots, highest_weight_list(name)))
            throw std::logic_error("highest-weight set disagrees with the published list for " +
                                   algebra_to_string(name));
    }
    return out;
}

Decomposition decompose(AlgebraName name) {
    RootSystem rs = generate_roots(name);
    return decompose_set(name, rs.roots(), {1, 2, 3});
}

DecompositionPart cyclic_image(const DecompositionPart& part, const std::array<int, 3>& triple, int shift) {
    shift = ((shift % 3) + 3) % 3;
    std::array<int, 8> perm;
    for (int i = 0; i < 8; ++i) perm[i] = i;
    for (int t = 0; t < 3; ++t) perm[triple[t] - 1] = triple[(t + shift) % 3] - 1;
    DecompositionPart out;
    out.tag = part.tag;
    out.axis = part.axis ? perm[part.axis - 1] + 1 : 0;
    for (const auto& r : part.roots) {
        RootVector v;
        for (int i = 0; i < 8; ++i) v.coords[perm[i]] = r.coords[i];
        out.roots.push_back(v);
    }
    sort_roots(out.roots);
    return out;
}

DecompositionPart negate_part(const DecompositionPart& part) {
    DecompositionPart out;
    out.axis = part.axis;
    switch (part.tag) {
        case PartTag::jordan: out.tag = PartTag::jordan_bar; break;
        case PartTag::jordan_bar: out.tag = PartTag::jordan; break;
        default: out.tag = part.tag; break;
    }
    for (const auto& r : part.roots) out.roots.push_back(-r);
    sort_roots(out.roots);
    return out;
}

const Subspace& PlaneSet::plane(const std::string& name) const {
    for (const auto& [n, s] : planes)
        if (n == name) return s;
    throw std::out_of_range("no plane named " + name);
}

const RootVector& PlaneSet::vector(const std::string& name) const {
    for (const auto& [n, v] : vectors)
        if (n == name) return v;
    throw std::out_of_range("no vector named " + name);
}

namespace {

RootVector sum_k(int from, int to) {
    RootVector v;
    for (int i = from; i <= to; ++i) v.coords[i - 1] = FieldScalar::one();
    return v;
}

RootVector hw_axis() {
    return FieldScalar(kThird) * combo({{2, rat(1)}, {3, rat(1)}, {1, rat(-2)}});
}

// e6 plane frame: orthonormal basis vectors of Pi0(1) and Pi0(2)
RootVector e6_b1() { return (FieldScalar(kHalf) * FieldScalar::sqrt2()) * combo({{4, rat(1)}, {5, rat(1)}}); }
RootVector e6_b2() {
    return FieldScalar(Rational(1, 6)) * FieldScalar::sqrt6() *
           (sum_k(1, 3) - FieldScalar::sqrt3() * RootVector::k(6));
}
RootVector e6_b1p() { return (FieldScalar(kHalf) * FieldScalar::sqrt2()) * combo({{4, rat(1)}, {5, rat(-1)}}); }
RootVector e6_b2p() {
    return FieldScalar(Rational(1, 6)) * FieldScalar::sqrt6() *
           (sum_k(1, 3) + FieldScalar::sqrt3() * RootVector::k(6));
}

std::array<RootVector, 3> e6_u_vectors() {
    const FieldScalar s = FieldScalar::sqrt3();
    return {FieldScalar(Rational(1, 6)) *
                combo({{1, rat(-5)}, {2, rat(1)}, {3, rat(1)}, {4, rat(3)}, {5, rat(-3)}, {6, -s}}),
            FieldScalar(kThird) * combo({{1, rat(-1)}, {2, rat(2)}, {3, rat(2)}, {6, s}}),
            FieldScalar(Rational(1, 6)) *
                combo({{1, rat(-5)}, {2, rat(1)}, {3, rat(1)}, {4, rat(-3)}, {5, rat(3)}, {6, -s}})};
}

std::array<RootVector, 3> e6_v_vectors() {
    const FieldScalar s = FieldScalar::sqrt3();
    return {FieldScalar(Rational(1, 6)) *
                combo({{1, rat(-5)}, {2, rat(1)}, {3, rat(1)}, {4, rat(3)}, {5, rat(3)}, {6, s}}),
            FieldScalar(kThird) * combo({{1, rat(-1)}, {2, rat(2)}, {3, rat(2)}, {6, -s}}),
            FieldScalar(Rational(1, 6)) *
                combo({{1, rat(-5)}, {2, rat(1)}, {3, rat(1)}, {4, rat(-3)}, {5, rat(-3)}, {6, s}})};
}

}  // namespace

PlaneSet build_planes(AlgebraName name) {
    PlaneSet out;
    RootVector axis = hw_axis();
    switch (name) {
        case AlgebraName::f4: {
            const FieldScalar t3 = FieldScalar(kThird) * FieldScalar::sqrt3();
            std::vector<RootVector> span = {RootVector::k(4), t3 * sum_k(1, 3)};
            out.planes.emplace_back("Pi0", Subspace::linear(span));
            out.planes.emplace_back("Pi+", Subspace(span, axis));
            out.planes.emplace_back("Pi-", Subspace(span, -axis));
            break;
        }
        case AlgebraName::e6: {
            std::vector<RootVector> span1 = {e6_b1(), e6_b2()};
            std::vector<RootVector> span2 = {e6_b1p(), e6_b2p()};
            out.planes.emplace_back("Pi0(1)", Subspace::linear(span1));
            out.planes.emplace_back("Pi0(2)", Subspace::linear(span2));
            auto us = e6_u_vectors();
            auto vs = e6_v_vectors();
            for (int i = 0; i < 3; ++i) {
                out.vectors.emplace_back("u" + std::to_string(i + 1), us[i]);
                out.vectors.emplace_back("v" + std::to_string(i + 1), vs[i]);
                out.planes.emplace_back("Pi+(1)" + std::to_string(i + 1), Subspace(span1, us[i]));
                out.planes.emplace_back("Pi-(1)" + std::to_string(i + 1), Subspace(span1, -us[i]));
                out.planes.emplace_back("Pi+(2)" + std::to_string(i + 1), Subspace(span2, vs[i]));
                out.planes.emplace_back("Pi-(2)" + std::to_string(i + 1), Subspace(span2, -vs[i]));
            }
            std::vector<RootVector> sigma = {e6_b1(), e6_b2(), e6_b1p(), e6_b2p()};
            out.planes.emplace_back("Sigma0", Subspace::linear(sigma));
            out.planes.emplace_back("Sigma+", Subspace(sigma, axis));
            out.planes.emplace_back("Sigma-", Subspace(sigma, -axis));
            break;
        }
        case AlgebraName::e7: {
            std::vector<RootVector> sigma = {RootVector::k(4), RootVector::k(5), RootVector::k(6), RootVector::k(7),
                                             sum_k(1, 3)};
            out.planes.emplace_back("Sigma0", Subspace::linear(sigma));
            out.planes.emplace_back("Sigma+", Subspace(sigma, axis));
            out.planes.emplace_back("Sigma-", Subspace(sigma, -axis));
            break;
        }
        case AlgebraName::e8: {
            std::vector<RootVector> sigma = {RootVector::k(4), RootVector::k(5), RootVector::k(6),
                                             RootVector::k(7), RootVector::k(8), sum_k(1, 3)};
            out.planes.emplace_back("Sigma0", Subspace::linear(sigma));
            out.planes.emplace_back("Sigma+", Subspace(sigma, axis));
            out.planes.emplace_back("Sigma-", Subspace(sigma, -axis));
            break;
        }
        default: throw std::invalid_argument("build_planes: unsupported algebra " + algebra_to_string(name));
    }
    return out;
}

std::vector<QuantumNumberRow> table3_quantum_numbers() {
    auto us = e6_u_vectors();
    auto vs = e6_v_vectors();
    Subspace plane1 = Subspace::linear({e6_b1(), e6_b2()});
    Subspace plane2 = Subspace::linear({e6_b1p(), e6_b2p()});
    RootVector b1 = e6_b1(), b2 = e6_b2(), b1p = e6_b1p(), b2p = e6_b2p();

    std::vector<QuantumNumberRow> rows;
    for (const auto& root : highest_weight_list(AlgebraName::e6)) {
        QuantumNumberRow row;
        row.root = root;
        row.plane1_index = row.plane2_index = 0;
        for (int i = 0; i < 3; ++i) {
            RootVector d = root - us[i];
            if (plane1.project_span(d) == d) {
                row.plane1_index = i + 1;
                row.s = inner(d, b1);
                row.t = inner(d, b2);
            }
            RootVector dp = root - vs[i];
            if (plane2.project_span(dp) == dp) {
                row.plane2_index = i + 1;
                row.s_prime = inner(dp, b1p);
                row.t_prime = inner(dp, b2p);
            }
        }
        if (!row.plane1_index || !row.plane2_index)
            throw std::logic_error("h.w. root " + root.to_string() + " fits no plane pair");
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const QuantumNumberRow& a, const QuantumNumberRow& b) {
        if (a.plane1_index != b.plane1_index) return a.plane1_index < b.plane1_index;
        return a.plane2_index < b.plane2_index;
    });
    return rows;
}

EtaEmbedding eta_embedding(EtaTarget target) {
    const FieldScalar h = FieldScalar(kHalf);
    const FieldScalar hr3 = h * FieldScalar::sqrt3();
    const FieldScalar hr2 = h * FieldScalar::sqrt2();
    EtaEmbedding out;
    out.target = target;

    if (target == EtaTarget::a5_in_e6) {
        // difference potentials p_i reproducing the published assignments
        RootVector p1 = RootVector::zero();
        RootVector p2 = -combo({{4, rat(1)}, {5, rat(1)}});
        RootVector p3 = combo({{1, h}, {2, h}, {3, h}, {4, -h}, {5, -h}, {6, -hr3}});
        RootVector p4 = combo({{1, rat(1)}, {4, rat(-1)}});
        RootVector p5 = -combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, h}, {6, hr3}});
        RootVector p6 = combo({{1, rat(1)}, {5, rat(-1)}});
        out.eta = {p1, p2, p3, p4, p5, p6};

        // verify consistency with every published assignment
        struct Entry {
            int i, j;
            RootVector value;
        };
        const std::vector<Entry> published = {
            {1, 2, combo({{4, rat(1)}, {5, rat(1)}})},
            {3, 1, combo({{1, h}, {2, h}, {3, h}, {4, -h}, {5, -h}, {6, -hr3}})},
            {2, 3, combo({{1, -h}, {2, -h}, {3, -h}, {4, -h}, {5, -h}, {6, hr3}})},
            {4, 5, combo({{1, h}, {2, h}, {3, h}, {4, -h}, {5, h}, {6, hr3}})},
            {6, 4, combo({{4, rat(1)}, {5, rat(-1)}})},
            {5, 6, combo({{1, -h}, {2, -h}, {3, -h}, {4, -h}, {5, h}, {6, -hr3}})},
            {1, 4, combo({{1, rat(-1)}, {4, rat(1)}})},
            {1, 5, combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, h}, {6, hr3}})},
            {1, 6, combo({{1, rat(-1)}, {5, rat(1)}})},
            {2, 4, combo({{1, rat(-1)}, {5, rat(-1)}})},
            {2, 5, combo({{1, -h}, {2, h}, {3, h}, {4, -h}, {5, -h}, {6, hr3}})},
            {2, 6, combo({{1, rat(-1)}, {4, rat(-1)}})},
            {3, 4, combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, -h}, {6, -hr3}})},
            {3, 5, combo({{2, rat(1)}, {3, rat(1)}})},
            {3, 6, combo({{1, -h}, {2, h}, {3, h}, {4, -h}, {5, h}, {6, -hr3}})},
        };
        for (const auto& e : published) {
            if (out.eta[e.i - 1] - out.eta[e.j - 1] != e.value)
                throw std::logic_error("eta assignment mismatch at eta" + std::to_string(e.i) + "-eta" +
                                       std::to_string(e.j));
        }
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i != j) out.images.push_back(out.eta[i] - out.eta[j]);
    } else {
        out.eta = {combo({{1, -h}, {4, -h}, {5, -h}, {6, -h}}), combo({{1, -h}, {4, -h}, {5, h}, {6, h}}),
                   combo({{1, -h}, {4, h}, {5, -h}, {6, h}}),   combo({{1, -h}, {4, h}, {5, h}, {6, -h}}),
                   combo({{2, h}, {3, h}, {7, hr2}}),           combo({{2, h}, {3, h}, {7, -hr2}})};
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1})
                        out.images.push_back(FieldScalar(si) * out.eta[i] + FieldScalar(sj) * out.eta[j]);
    }
    sort_roots(out.images);

    // images must land inside the ambient root system
    RootSystem ambient = generate_roots(target == EtaTarget::a5_in_e6 ? AlgebraName::e6 : AlgebraName::e7);
    for (const auto& r : out.images)
        if (!ambient.contains(r)) throw std::logic_error("eta image escapes the ambient system: " + r.to_string());
    return out;
}

RecognitionWitness recognize_inside_e8(AlgebraName sub) {
    if (sub != AlgebraName::e6 && sub != AlgebraName::e7)
        throw std::invalid_argument("recognize_inside_e8 expects e6 or e7");

    Decomposition d8 = decompose(AlgebraName::e8);
    RootSet target;
    for (const auto& r : d8.part(PartTag::g0).roots) target.insert(r);
    if (sub == AlgebraName::e7) {
        for (const auto& r : d8.part(PartTag::jordan, 1).roots) target.insert(r);
        for (const auto& r : d8.part(PartTag::jordan_bar, 1).roots) target.insert(r);
    }

    const FieldScalar t3 = FieldScalar(kThird) * FieldScalar::sqrt3();
    const FieldScalar h2 = FieldScalar(kHalf) * FieldScalar::sqrt2();
    auto image_basis = [&](bool shifted) {
        std::vector<RootVector> img(8);
        for (int i = 1; i <= 5; ++i) img[i - 1] = RootVector::k(shifted ? i + 3 : i);
        if (sub == AlgebraName::e6) {
            img[5] = -(t3 * sum_k(1, 3));
        } else {
            img[5] = RootVector::k(1);
            img[6] = h2 * combo({{2, rat(1)}, {3, rat(1)}});
        }
        return img;
    };

    RootSystem table = generate_roots(sub);
    for (bool shifted : {true, false}) {
        auto img = image_basis(shifted);
        std::vector<RootVector> mapped;
        for (const auto& r : table.roots()) {
            RootVector m;
            for (int i = 0; i < 8; ++i) {
                if (r.coords[i].is_zero()) continue;
                m = m + r.coords[i] * img[i];
            }
            mapped.push_back(m);
        }
        RootSet mapped_set(mapped.begin(), mapped.end());
        if (mapped_set.size() == target.size() && mapped_set == target) {
            RecognitionWitness w;
            w.sub = sub;
            w.reading = shifted ? "k'_i = k_{i+3}" : "k'_i = k_i";
            w.basis_image = img;
            w.image_roots = std::move(mapped);
            sort_roots(w.image_roots);
            return w;
        }
    }
    throw std::logic_error("no index reading maps " + algebra_to_string(sub) + " onto the e8 subsystem");
}

namespace {

// Terminal split of the six-root a2 inside f4: project on the line spanned
// by k1+k2+k3; the zero fiber is an a1, the +-1/2 fibers a (2, 2bar) pair.
NestedDecomposition nested_f4() {
    NestedDecomposition out;
    Decomposition level1 = decompose(AlgebraName::f4);
    out.leaves.push_back({"a2", level1.part(PartTag::outer_a2).roots});
    for (int m : level1.triple) {
        out.leaves.push_back({"J1(" + std::to_string(m) + ")", level1.part(PartTag::jordan, m).roots});
        out.leaves.push_back({"J1bar(" + std::to_string(m) + ")", level1.part(PartTag::jordan_bar, m).roots});
    }
    RootVector axis = FieldScalar(kThird) * sum_k(1, 3);
    std::vector<RootVector> a1, pair_plus, pair_minus;
    for (const auto& r : level1.part(PartTag::g0).roots) {
        FieldScalar coord = inner(r, axis);
        if (coord.is_zero())
            a1.push_back(r);
        else if (coord.real_sign() > 0)
            pair_plus.push_back(r);
        else
            pair_minus.push_back(r);
    }
    if (a1.size() != 2 || pair_plus.size() != 2 || pair_minus.size() != 2)
        throw std::logic_error("f4 terminal a2 does not split as a1 plus a (2,2bar) pair");
    sort_roots(a1);
    sort_roots(pair_plus);
    sort_roots(pair_minus);
    out.leaves.push_back({"a1", a1});
    out.leaves.push_back({"pair2", pair_plus});
    out.leaves.push_back({"pair2bar", pair_minus});
    return out;
}

}  // namespace

NestedDecomposition nested_decomposition(AlgebraName name) {
    if (name == AlgebraName::f4) return nested_f4();
    if (name != AlgebraName::e8)
        throw std::invalid_argument("nested_decomposition is defined for e8 (and the f4 terminal split)");

    NestedDecomposition out;
    Decomposition level1 = decompose(AlgebraName::e8);
    out.leaves.push_back({"a2^c", level1.part(PartTag::outer_a2).roots});
    for (int m : level1.triple) {
        out.leaves.push_back({"J8(" + std::to_string(m) + ")", level1.part(PartTag::jordan, m).roots});
        out.leaves.push_back({"J8bar(" + std::to_string(m) + ")", level1.part(PartTag::jordan_bar, m).roots});
    }

    // g0 of e8 is an e6 system living on k4..k8 and (k1+k2+k3); its own a2
    // plane is spanned by differences of k4, k5, k6
    Decomposition level2 = decompose_set(AlgebraName::e6, level1.part(PartTag::g0).roots, {4, 5, 6});
    out.leaves.push_back({"a2^f", level2.part(PartTag::outer_a2).roots});
    for (int m : level2.triple) {
        out.leaves.push_back({"J2(" + std::to_string(m) + ")", level2.part(PartTag::jordan, m).roots});
        out.leaves.push_back({"J2bar(" + std::to_string(m) + ")", level2.part(PartTag::jordan_bar, m).roots});
    }

    // terminal g0: a2 + a2, split by orthogonality; no further a2-plane
    const auto& g0 = level2.part(PartTag::g0).roots;
    if (g0.size() != 12) throw std::logic_error("terminal g0 should have 12 roots");
    std::vector<int> component(g0.size(), -1);
    for (size_t start = 0, comp = 0; start < g0.size(); ++start) {
        if (component[start] >= 0) continue;
        std::vector<size_t> stack{start};
        component[start] = (int)comp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t next = 0; next < g0.size(); ++next)
                if (component[next] < 0 && !inner(g0[cur], g0[next]).is_zero()) {
                    component[next] = (int)comp;
                    stack.push_back(next);
                }
        }
        ++comp;
    }
    std::vector<RootVector> block_a, block_b;
    for (size_t i = 0; i < g0.size(); ++i) (component[i] == 0 ? block_a : block_b).push_back(g0[i]);
    if (block_a.size() != 6 || block_b.size() != 6)
        throw std::logic_error("terminal g0 does not split into two a2 blocks");
    // the block containing k7 + k8 is labeled g1
    RootVector marker = combo({{7, rat(1)}, {8, rat(1)}});
    bool a_has_marker = std::find(block_a.begin(), block_a.end(), marker) != block_a.end();
    sort_roots(block_a);
    sort_roots(block_b);
    out.leaves.push_back({"a2^g1", a_has_marker ? block_a : block_b});
    out.leaves.push_back({"a2^g2", a_has_marker ? block_b : block_a});
    return out;
}

std::string particle_kind_to_string(ParticleKind kind) {
    switch (kind) {
        case ParticleKind::quark: return "quark";
        case ParticleKind::antiquark: return "antiquark";
        case ParticleKind::lepton: return "lepton";
        case ParticleKind::antilepton: return "antilepton";
        case ParticleKind::a2_c: return "a2^c";
        case ParticleKind::a2_f: return "a2^f";
        case ParticleKind::a2_g1: return "a2^g1";
        case ParticleKind::a2_g2: return "a2^g2";
    }
    return "?";
}

std::vector<ParticleLabel> label_particles() {
    NestedDecomposition nested = nested_decomposition(AlgebraName::e8);
    std::vector<ParticleLabel> out;
    auto emit = [&](const std::vector<RootVector>& roots, ParticleKind kind, int index) {
        for (const auto& r : roots) out.push_back({r, kind, index});
    };
    for (const auto& leaf : nested.leaves) {
        if (leaf.label == "a2^c") emit(leaf.roots, ParticleKind::a2_c, 0);
        else if (leaf.label == "a2^f") emit(leaf.roots, ParticleKind::a2_f, 0);
        else if (leaf.label == "a2^g1") emit(leaf.roots, ParticleKind::a2_g1, 0);
        else if (leaf.label == "a2^g2") emit(leaf.roots, ParticleKind::a2_g2, 0);
        else {
            int axis = leaf.label[leaf.label.size() - 2] - '0';
            bool bar = leaf.label.find("bar") != std::string::npos;
            if (leaf.label[1] == '8')
                emit(leaf.roots, bar ? ParticleKind::antiquark : ParticleKind::quark, axis);
            else
                emit(leaf.roots, bar ? ParticleKind::antilepton : ParticleKind::lepton, axis);
        }
    }

    // exactly one label per e8 root
    RootSystem e8 = generate_roots(AlgebraName::e8);
    RootSet seen;
    for (const auto& label : out) {
        if (!e8.contains(label.root)) throw std::logic_error("label on a non-root");
        if (!seen.insert(label.root).second) throw std::logic_error("root labeled twice: " + label.root.to_string());
    }
    if (seen.size() != e8.size()) throw std::logic_error("labeling does not cover e8");
    return out;
}

}  // namespace atlas
