#include <doctest.h>

#include <map>

#include "atlas/projection.hpp"

using namespace atlas;

namespace {

const FieldScalar h = FieldScalar(Rational(1, 2));
const FieldScalar hr3 = h * FieldScalar::sqrt3();
const FieldScalar hr2 = h * FieldScalar::sqrt2();

FieldScalar rat(long long n, long long d = 1) { return FieldScalar(Rational(n, d)); }

RootVector combo(std::initializer_list<std::pair<int, FieldScalar>> terms) {
    RootVector v;
    for (const auto& [idx, c] : terms) v.coords[idx - 1] += c;
    return v;
}

RootVector hw_point() { return rat(1, 3) * combo({{2, rat(1)}, {3, rat(1)}, {1, rat(-2)}}); }

bool same_set(const std::vector<RootVector>& a, const std::vector<RootVector>& b) {
    if (a.size() != b.size()) return false;
    RootSet set(a.begin(), a.end());
    for (const auto& r : b)
        if (!set.count(r)) return false;
    return true;
}

std::vector<RootVector> union_roots(std::initializer_list<const std::vector<RootVector>*> parts) {
    std::vector<RootVector> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

}  // namespace

TEST_CASE("pi plane") {
    Subspace plane = pi_plane();
    CHECK(plane.dimension() == 2);
    CHECK(plane.contains(RootVector::k(1) - RootVector::k(2)));
    RootVector sum123 = combo({{1, rat(1)}, {2, rat(1)}, {3, rat(1)}});
    CHECK(plane.project_span(sum123).is_zero());
    CHECK(plane.project_span(RootVector::k(7)).is_zero());
}

TEST_CASE("projection examples") {
    Subspace plane = pi_plane();
    CHECK(project(-RootVector::k(1), plane) == hw_point());
    RootVector in_plane = RootVector::k(1) - RootVector::k(2);
    CHECK(project(in_plane, plane) == in_plane);
    CHECK(project(combo({{2, rat(1)}, {3, rat(1)}}), plane) == hw_point());
    // idempotence
    for (int i = 1; i <= 8; ++i) {
        RootVector p = project(RootVector::k(i), plane);
        CHECK(project(p, plane) == p);
    }
}

TEST_CASE("decomposition part sizes") {
    auto sizes = std::map<AlgebraName, std::pair<size_t, size_t>>{
        {AlgebraName::f4, {6, 6}}, {AlgebraName::e6, {9, 12}}, {AlgebraName::e7, {15, 30}}, {AlgebraName::e8, {27, 72}}};
    for (auto [name, expect] : sizes) {
        Decomposition d = decompose(name);
        CHECK(d.part(PartTag::outer_a2).roots.size() == 6);
        CHECK(d.part(PartTag::g0).roots.size() == expect.second);
        for (int m : {1, 2, 3}) {
            CHECK(d.part(PartTag::jordan, m).roots.size() == expect.first);
            CHECK(d.part(PartTag::jordan_bar, m).roots.size() == expect.first);
        }
        // partition: disjoint cover of the whole system
        size_t total = 0;
        RootSet seen;
        for (const auto& part : d.parts) {
            total += part.roots.size();
            for (const auto& r : part.roots) CHECK(seen.insert(r).second);
        }
        CHECK(total == generate_roots(name).size());
    }
}

TEST_CASE("highest-weight sets match the published lists") {
    // the lists are cross-checked inside decompose(); spot-check content here
    Decomposition e7 = decompose(AlgebraName::e7);
    const auto& hw = e7.highest_weight().roots;
    RootSet set(hw.begin(), hw.end());
    CHECK(set.count(combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, -h}, {6, h}, {7, hr2}})));
    // sign pattern (+,-,-) on k4..k6 is not an e7 root at all
    CHECK(!set.count(combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, -h}, {6, -h}, {7, hr2}})));
    CHECK(set.count(combo({{2, rat(1)}, {3, rat(1)}})));

    Decomposition e8 = decompose(AlgebraName::e8);
    CHECK(same_set(e8.highest_weight().roots, highest_weight_list(AlgebraName::e8)));
}

TEST_CASE("projection fibers are single points") {
    for (auto name : {AlgebraName::f4, AlgebraName::e6, AlgebraName::e7, AlgebraName::e8}) {
        Decomposition d = decompose(name);
        Subspace plane = pi_plane();
        for (const auto& part : d.parts) {
            if (part.tag != PartTag::jordan && part.tag != PartTag::jordan_bar) continue;
            RootVector point = plane.project_span(part.roots.front());
            for (const auto& r : part.roots) CHECK(plane.project_span(r) == point);
        }
        RootVector hw_fiber = plane.project_span(d.highest_weight().roots.front());
        CHECK(hw_fiber == hw_point());
        RootVector bar_fiber = plane.project_span(d.part(PartTag::jordan_bar, 1).roots.front());
        CHECK(bar_fiber == -hw_point());
    }
}

TEST_CASE("cyclic images and conjugates") {
    Decomposition f4 = decompose(AlgebraName::f4);
    const DecompositionPart& hw = f4.highest_weight();

    DecompositionPart shifted = cyclic_image(hw, f4.triple, 1);
    CHECK(shifted.axis == 2);
    CHECK(same_set(shifted.roots, f4.part(PartTag::jordan, 2).roots));

    DecompositionPart thrice = cyclic_image(cyclic_image(shifted, f4.triple, 1), f4.triple, 1);
    CHECK(same_set(thrice.roots, hw.roots));
    CHECK(thrice.axis == 1);

    DecompositionPart negated = negate_part(hw);
    CHECK(negated.tag == PartTag::jordan_bar);
    CHECK(same_set(negated.roots, f4.part(PartTag::jordan_bar, 1).roots));
}

TEST_CASE("plane geometry of f4") {
    PlaneSet planes = build_planes(AlgebraName::f4);
    Decomposition d = decompose(AlgebraName::f4);
    for (const auto& r : d.highest_weight().roots) CHECK(planes.plane("Pi+").contains(r));
    for (const auto& r : d.part(PartTag::g0).roots) CHECK(planes.plane("Pi0").contains(r));
    for (const auto& r : d.part(PartTag::jordan_bar, 1).roots) CHECK(planes.plane("Pi-").contains(r));

    Distance dist = distance_to(planes.plane("Pi+"), planes.plane("Pi0"));
    CHECK(dist.squared == rat(2, 3));
    REQUIRE(dist.value.has_value());
    CHECK(*dist.value == rat(1, 3) * FieldScalar::sqrt6());
    CHECK(distance_to(planes.plane("Pi+"), planes.plane("Pi+")).squared == FieldScalar::zero());
    CHECK_THROWS_AS(distance_to(planes.plane("Pi+"), pi_plane()), std::invalid_argument);
}

TEST_CASE("plane geometry of e6") {
    PlaneSet planes = build_planes(AlgebraName::e6);
    RootVector u1_expected =
        rat(1, 6) * combo({{1, rat(-5)}, {2, rat(1)}, {3, rat(1)}, {4, rat(3)}, {5, rat(-3)}, {6, -FieldScalar::sqrt3()}});
    CHECK(planes.vector("u1") == u1_expected);
    for (int i = 1; i <= 3; ++i) {
        const RootVector& u = planes.vector("u" + std::to_string(i));
        const RootVector& v = planes.vector("v" + std::to_string(i));
        for (const auto& b : planes.plane("Pi0(1)").orthogonal_basis()) CHECK(inner(u, b).is_zero());
        for (const auto& b : planes.plane("Pi0(2)").orthogonal_basis()) CHECK(inner(v, b).is_zero());
    }
    // each h.w. root lies on one Pi+(1)i and one Pi+(2)j plane, and on Sigma+
    Decomposition d = decompose(AlgebraName::e6);
    for (const auto& r : d.highest_weight().roots) {
        int hits1 = 0, hits2 = 0;
        for (int i = 1; i <= 3; ++i) {
            if (planes.plane("Pi+(1)" + std::to_string(i)).contains(r)) ++hits1;
            if (planes.plane("Pi+(2)" + std::to_string(i)).contains(r)) ++hits2;
        }
        CHECK(hits1 == 1);
        CHECK(hits2 == 1);
        CHECK(planes.plane("Sigma+").contains(r));
    }
    CHECK(distance_to(planes.plane("Sigma+"), planes.plane("Sigma0")).squared == rat(2, 3));
}

TEST_CASE("sigma spaces of e7 and e8") {
    for (auto name : {AlgebraName::e7, AlgebraName::e8}) {
        PlaneSet planes = build_planes(name);
        Decomposition d = decompose(name);
        for (const auto& r : d.highest_weight().roots) CHECK(planes.plane("Sigma+").contains(r));
        for (const auto& r : d.part(PartTag::g0).roots) CHECK(planes.plane("Sigma0").contains(r));
        Distance dist = distance_to(planes.plane("Sigma+"), planes.plane("Sigma0"));
        CHECK(dist.squared == rat(2, 3));
        CHECK(*dist.value == rat(1, 3) * FieldScalar::sqrt6());
    }
}

TEST_CASE("every Jordan subset sits at squared distance 2/3 from the g0 span") {
    for (auto name : {AlgebraName::f4, AlgebraName::e6, AlgebraName::e7, AlgebraName::e8}) {
        Decomposition d = decompose(name);
        std::vector<RootVector> g0_basis;
        SpanBasis span(8);
        for (const auto& r : d.part(PartTag::g0).roots)
            if (span.add(r.to_vec()) >= 0) g0_basis.push_back(r);
        Subspace g0_span = Subspace::linear(g0_basis);
        Subspace plane = pi_plane();
        for (const auto& part : d.parts) {
            if (part.tag != PartTag::jordan && part.tag != PartTag::jordan_bar) continue;
            RootVector point = plane.project_span(part.roots.front());
            Subspace affine(g0_basis, point);
            for (const auto& r : part.roots) CHECK(affine.contains(r));
            CHECK(distance_to(affine, g0_span).squared == rat(2, 3));
        }
    }
}

TEST_CASE("three-plane unions classify as C3 / A5 / D6 / E7") {
    auto expect = std::map<AlgebraName, std::string>{{AlgebraName::f4, "C3"},
                                                     {AlgebraName::e6, "A5"},
                                                     {AlgebraName::e7, "D6"},
                                                     {AlgebraName::e8, "E7"}};
    for (auto [name, type] : expect) {
        Decomposition d = decompose(name);
        auto all = union_roots({&d.part(PartTag::g0).roots, &d.part(PartTag::jordan, 1).roots,
                                &d.part(PartTag::jordan_bar, 1).roots});
        CHECK(validate_root_set(all).ok());
        CHECK(classify_cartan(cartan_integers(all)) == type);
    }
}

TEST_CASE("table of a2+a2 quantum numbers") {
    auto rows = table3_quantum_numbers();
    REQUIRE(rows.size() == 9);

    const FieldScalar s22 = hr2;                                 // sqrt2/2
    const FieldScalar s63 = rat(1, 3) * FieldScalar::sqrt6();    // sqrt6/3
    const FieldScalar s66 = rat(1, 6) * FieldScalar::sqrt6();    // sqrt6/6

    struct Expected {
        RootVector root;
        int p1, p2;
        FieldScalar s, t, sp, tp;
    };
    std::vector<Expected> table = {
        {combo({{1, rat(-1)}, {4, rat(1)}}), 1, 1, s22, -s66, s22, -s66},
        {combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, -h}, {6, -hr3}}), 1, 2, rat(0), s63, s22, -s66},
        {combo({{1, rat(-1)}, {5, rat(-1)}}), 1, 3, -s22, -s66, s22, -s66},
        {combo({{1, -h}, {2, h}, {3, h}, {4, h}, {5, h}, {6, hr3}}), 2, 1, s22, -s66, rat(0), s63},
        {combo({{2, rat(1)}, {3, rat(1)}}), 2, 2, rat(0), s63, rat(0), s63},
        {combo({{1, -h}, {2, h}, {3, h}, {4, -h}, {5, -h}, {6, hr3}}), 2, 3, -s22, -s66, rat(0), s63},
        {combo({{1, rat(-1)}, {5, rat(1)}}), 3, 1, s22, -s66, -s22, -s66},
        {combo({{1, -h}, {2, h}, {3, h}, {4, -h}, {5, h}, {6, -hr3}}), 3, 2, rat(0), s63, -s22, -s66},
        {combo({{1, rat(-1)}, {4, rat(-1)}}), 3, 3, -s22, -s66, -s22, -s66},
    };
    for (size_t i = 0; i < 9; ++i) {
        CHECK(rows[i].root == table[i].root);
        CHECK(rows[i].plane1_index == table[i].p1);
        CHECK(rows[i].plane2_index == table[i].p2);
        CHECK(rows[i].s == table[i].s);
        CHECK(rows[i].t == table[i].t);
        CHECK(rows[i].s_prime == table[i].sp);
        CHECK(rows[i].t_prime == table[i].tp);
    }
    // invariant: root = u_{p1} + s b1 + t b2 exactly
    PlaneSet planes = build_planes(AlgebraName::e6);
    for (const auto& row : rows) {
        const RootVector& u = planes.vector("u" + std::to_string(row.plane1_index));
        const auto& b = planes.plane("Pi0(1)").orthogonal_basis();
        CHECK(row.root == u + row.s * b[0] + row.t * b[1]);
    }
    // conjugate roots carry opposite quantum numbers
    for (const auto& row : rows) {
        RootVector neg = -row.root;
        PlaneSet ps = build_planes(AlgebraName::e6);
        const RootVector& u = ps.vector("u" + std::to_string(row.plane1_index));
        const auto& b = ps.plane("Pi0(1)").orthogonal_basis();
        CHECK(neg == (-u) + (-row.s) * b[0] + (-row.t) * b[1]);
    }
}

TEST_CASE("a5 inside e6 via eta differences") {
    EtaEmbedding emb = eta_embedding(EtaTarget::a5_in_e6);
    CHECK(emb.images.size() == 30);
    CHECK(emb.eta[0] - emb.eta[1] == combo({{4, rat(1)}, {5, rat(1)}}));

    Decomposition d = decompose(AlgebraName::e6);
    auto expected = union_roots({&d.part(PartTag::g0).roots, &d.part(PartTag::jordan, 1).roots,
                                 &d.part(PartTag::jordan_bar, 1).roots});
    CHECK(same_set(emb.images, expected));
    CHECK(classify_cartan(cartan_integers(emb.images)) == "A5");
}

TEST_CASE("d6 inside e7 via an orthonormal eta basis") {
    EtaEmbedding emb = eta_embedding(EtaTarget::d6_in_e7);
    CHECK(emb.images.size() == 60);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(inner(emb.eta[i], emb.eta[j]) == (i == j ? FieldScalar::one() : FieldScalar::zero()));
    CHECK(emb.eta[4] + emb.eta[5] == combo({{2, rat(1)}, {3, rat(1)}}));

    Decomposition d = decompose(AlgebraName::e7);
    auto expected = union_roots({&d.part(PartTag::g0).roots, &d.part(PartTag::jordan, 1).roots,
                                 &d.part(PartTag::jordan_bar, 1).roots});
    CHECK(same_set(emb.images, expected));
    CHECK(classify_cartan(cartan_integers(emb.images)) == "D6");
}

TEST_CASE("recognizing e6 and e7 inside e8") {
    RecognitionWitness w6 = recognize_inside_e8(AlgebraName::e6);
    CHECK(w6.reading == "k'_i = k_{i+3}");
    CHECK(w6.image_roots.size() == 72);

    RecognitionWitness w7 = recognize_inside_e8(AlgebraName::e7);
    CHECK(w7.reading == "k'_i = k_{i+3}");
    CHECK(w7.image_roots.size() == 126);
    CHECK(w7.basis_image[6] == hr2 * combo({{2, rat(1)}, {3, rat(1)}}));

    // the substitution is an isometry on the spanned subspace
    for (const auto& witness : {w6, w7}) {
        int n = witness.sub == AlgebraName::e6 ? 6 : 7;
        RootSystem table = generate_roots(witness.sub);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                FieldScalar gram = inner(witness.basis_image[i], witness.basis_image[j]);
                CHECK(gram == (i == j ? FieldScalar::one() : FieldScalar::zero()));
            }
    }
}

TEST_CASE("nested decomposition of e8") {
    NestedDecomposition nested = nested_decomposition(AlgebraName::e8);
    std::map<std::string, size_t> sizes;
    size_t total = 0;
    RootSet seen;
    for (const auto& leaf : nested.leaves) {
        sizes[leaf.label] = leaf.roots.size();
        total += leaf.roots.size();
        for (const auto& r : leaf.roots) CHECK(seen.insert(r).second);
    }
    CHECK(total == 240);
    CHECK(sizes["a2^c"] == 6);
    CHECK(sizes["a2^f"] == 6);
    CHECK(sizes["a2^g1"] == 6);
    CHECK(sizes["a2^g2"] == 6);
    for (int m : {1, 2, 3}) {
        CHECK(sizes["J8(" + std::to_string(m) + ")"] == 27);
        CHECK(sizes["J8bar(" + std::to_string(m) + ")"] == 27);
    }
    for (int m : {4, 5, 6}) {
        CHECK(sizes["J2(" + std::to_string(m) + ")"] == 9);
        CHECK(sizes["J2bar(" + std::to_string(m) + ")"] == 9);
    }
    CHECK_THROWS_AS(nested_decomposition(AlgebraName::e6), std::invalid_argument);
}

TEST_CASE("nested f4 ends in an a1 with a (2,2bar) pair") {
    NestedDecomposition nested = nested_decomposition(AlgebraName::f4);
    std::map<std::string, size_t> sizes;
    size_t total = 0;
    for (const auto& leaf : nested.leaves) {
        sizes[leaf.label] = leaf.roots.size();
        total += leaf.roots.size();
    }
    CHECK(total == 48);
    CHECK(sizes["a2"] == 6);
    CHECK(sizes["J1(1)"] == 6);
    CHECK(sizes["a1"] == 2);
    CHECK(sizes["pair2"] == 2);
    CHECK(sizes["pair2bar"] == 2);
    // the a1 is k4's root pair; the doublets are the half-sum fibers
    for (const auto& leaf : nested.leaves) {
        if (leaf.label != "a1") continue;
        CHECK(leaf.roots[0] == -RootVector::k(4));
        CHECK(leaf.roots[1] == RootVector::k(4));
    }
}

TEST_CASE("particle labels partition e8 with the published lists") {
    auto labels = label_particles();
    CHECK(labels.size() == 240);

    std::map<std::pair<ParticleKind, int>, std::vector<RootVector>> classes;
    for (const auto& l : labels) classes[{l.kind, l.index}].push_back(l.root);

    CHECK(classes[{ParticleKind::quark, 1}].size() == 27);
    CHECK(classes[{ParticleKind::antiquark, 2}].size() == 27);
    CHECK(classes[{ParticleKind::lepton, 4}].size() == 9);
    CHECK(classes[{ParticleKind::antilepton, 6}].size() == 9);
    CHECK(classes[{ParticleKind::a2_g1, 0}].size() == 6);

    // -k1 + k4 is a quark of color 1
    RootVector probe = combo({{1, rat(-1)}, {4, rat(1)}});
    bool found = false;
    for (const auto& l : labels)
        if (l.root == probe) {
            CHECK(l.kind == ParticleKind::quark);
            CHECK(l.index == 1);
            found = true;
        }
    CHECK(found);

    // quark color classes coincide with the level-1 Jordan sets
    Decomposition d8 = decompose(AlgebraName::e8);
    for (int c : {1, 2, 3}) CHECK(same_set(classes[{ParticleKind::quark, c}], d8.part(PartTag::jordan, c).roots));

    // published lepton family 4 list
    std::vector<RootVector> lepton4;
    for (int j : {7, 8})
        for (int s : {1, -1}) lepton4.push_back(combo({{4, rat(-1)}, {j, rat(s)}}));
    lepton4.push_back(combo({{5, rat(1)}, {6, rat(1)}}));
    for (int s123 : {1, -1})
        for (int s7 : {1, -1})
            for (int s8 : {1, -1}) {
                if (((s123 > 0) + (s7 > 0) + (s8 > 0)) % 2 != 0) continue;  // even number of + signs
                RootVector v = combo({{4, rat(-1)}});
                for (int i : {1, 2, 3}) v.coords[i - 1] = s123 > 0 ? h : -h;
                v.coords[3] += h;
                v.coords[4] = h;
                v.coords[5] = h;
                v.coords[6] = s7 > 0 ? h : -h;
                v.coords[7] = s8 > 0 ? h : -h;
                lepton4.push_back(v);
            }
    CHECK(same_set(classes[{ParticleKind::lepton, 4}], lepton4));

    // published a2 lists
    std::vector<RootVector> a2f;
    for (int i = 4; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int s : {1, -1})
                a2f.push_back(FieldScalar(s) * (RootVector::k(i) - RootVector::k(j)));
    CHECK(same_set(classes[{ParticleKind::a2_f, 0}], a2f));

    std::vector<RootVector> g1, g2;
    RootVector k78 = combo({{7, rat(1)}, {8, rat(1)}});
    RootVector half_all = combo({{1, h}, {2, h}, {3, h}, {4, h}, {5, h}, {6, h}, {7, h}, {8, h}});
    RootVector half_mixed = combo({{1, h}, {2, h}, {3, h}, {4, h}, {5, h}, {6, h}, {7, -h}, {8, -h}});
    for (const auto& r : {k78, half_mixed, half_all}) {
        g1.push_back(r);
        g1.push_back(-r);
    }
    CHECK(same_set(classes[{ParticleKind::a2_g1, 0}], g1));

    RootVector k7m8 = combo({{7, rat(1)}, {8, rat(-1)}});
    RootVector half_g2a = combo({{1, -h}, {2, -h}, {3, -h}, {4, h}, {5, h}, {6, h}, {7, -h}, {8, h}});
    RootVector half_g2b = combo({{1, -h}, {2, -h}, {3, -h}, {4, h}, {5, h}, {6, h}, {7, h}, {8, -h}});
    for (const auto& r : {k7m8, half_g2a, half_g2b}) {
        g2.push_back(r);
        g2.push_back(-r);
    }
    CHECK(same_set(classes[{ParticleKind::a2_g2, 0}], g2));
}
