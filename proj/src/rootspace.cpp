#include "atlas/rootspace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace atlas {

namespace {

const FieldScalar kHalf = FieldScalar(Rational(1, 2));

void push_unique(std::vector<RootVector>& out, const RootVector& v) { out.push_back(v); }

// +- k_i +- k_j over index list (1-based), i < j.
void add_pair_roots(std::vector<RootVector>& out, const std::vector<int>& idx) {
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    RootVector v;
                    v.coords[idx[a] - 1] = FieldScalar(sa);
                    v.coords[idx[b] - 1] = FieldScalar(sb);
                    push_unique(out, v);
                }
}

std::vector<RootVector> build_g2() {
    std::vector<RootVector> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) push_unique(out, RootVector::k(i) - RootVector::k(j));
    const FieldScalar third(Rational(1, 3));
    for (int i = 1; i <= 3; ++i) {
        int j = i % 3 + 1, l = (i + 1) % 3 + 1;
        RootVector v = third * (RootVector::k(j) + RootVector::k(l) - FieldScalar(2) * RootVector::k(i));
        push_unique(out, v);
        push_unique(out, -v);
    }
    return out;
}

std::vector<RootVector> build_f4() {
    std::vector<RootVector> out;
    for (int i = 1; i <= 4; ++i) {
        push_unique(out, RootVector::k(i));
        push_unique(out, -RootVector::k(i));
    }
    add_pair_roots(out, {1, 2, 3, 4});
    for (int mask = 0; mask < 16; ++mask) {
        RootVector v;
        for (int i = 0; i < 4; ++i) v.coords[i] = (mask >> i & 1) ? kHalf : -kHalf;
        push_unique(out, v);
    }
    return out;
}

// Half-sum rows of e6/e7: sign patterns over the plain k terms plus one
// scaled radical term, filtered by a parity condition that may or may not
// count the radical term.
std::vector<RootVector> build_e6_halves(bool parity_counts_radical) {
    std::vector<RootVector> out;
    const FieldScalar r3 = FieldScalar::sqrt3();
    for (int mask = 0; mask < 64; ++mask) {
        int plus = 0;
        for (int i = 0; i < 6; ++i) plus += (mask >> i & 1);
        int counted = parity_counts_radical ? plus : plus - (mask >> 5 & 1);
        if (counted % 2 != 1) continue;  // odd number of + signs
        RootVector v;
        for (int i = 0; i < 5; ++i) v.coords[i] = (mask >> i & 1) ? kHalf : -kHalf;
        v.coords[5] = ((mask >> 5 & 1) ? kHalf : -kHalf) * r3;
        out.push_back(v);
    }
    return out;
}

std::vector<RootVector> build_e7_halves(bool parity_counts_radical) {
    std::vector<RootVector> out;
    const FieldScalar r2 = FieldScalar::sqrt2();
    for (int mask = 0; mask < 128; ++mask) {
        int plus = 0;
        for (int i = 0; i < 7; ++i) plus += (mask >> i & 1);
        int counted = parity_counts_radical ? plus : plus - (mask >> 6 & 1);
        if (counted % 2 != 0) continue;  // even number of + signs
        RootVector v;
        for (int i = 0; i < 6; ++i) v.coords[i] = (mask >> i & 1) ? kHalf : -kHalf;
        v.coords[6] = ((mask >> 6 & 1) ? kHalf : -kHalf) * r2;
        out.push_back(v);
    }
    return out;
}

std::vector<RootVector> build_e6(bool parity_counts_radical) {
    std::vector<RootVector> out;
    add_pair_roots(out, {1, 2, 3, 4, 5});
    auto halves = build_e6_halves(parity_counts_radical);
    out.insert(out.end(), halves.begin(), halves.end());
    return out;
}

std::vector<RootVector> build_e7(bool parity_counts_radical) {
    std::vector<RootVector> out;
    const FieldScalar r2 = FieldScalar::sqrt2();
    push_unique(out, r2 * RootVector::k(7));
    push_unique(out, -(r2 * RootVector::k(7)));
    add_pair_roots(out, {1, 2, 3, 4, 5, 6});
    auto halves = build_e7_halves(parity_counts_radical);
    out.insert(out.end(), halves.begin(), halves.end());
    return out;
}

std::vector<RootVector> build_e8() {
    std::vector<RootVector> out;
    add_pair_roots(out, {1, 2, 3, 4, 5, 6, 7, 8});
    for (int mask = 0; mask < 256; ++mask) {
        int plus = __builtin_popcount(mask);
        if (plus % 2 != 0) continue;  // even number of + signs
        RootVector v;
        for (int i = 0; i < 8; ++i) v.coords[i] = (mask >> i & 1) ? kHalf : -kHalf;
        out.push_back(v);
    }
    return out;
}

// Resolve the parity reading once by letting the axioms decide.
bool resolve_parity(AlgebraName which) {
    for (bool counts_radical : {true, false}) {
        std::vector<RootVector> roots =
            which == AlgebraName::e6 ? build_e6(counts_radical) : build_e7(counts_radical);
        size_t expected = which == AlgebraName::e6 ? 72 : 126;
        if (roots.size() != expected) continue;
        if (validate_root_set(roots).ok()) return counts_radical;
    }
    throw std::logic_error("neither parity reading yields a valid root system");
}

}  // namespace

std::string algebra_to_string(AlgebraName name) {
    switch (name) {
        case AlgebraName::g2: return "g2";
        case AlgebraName::f4: return "f4";
        case AlgebraName::e6: return "e6";
        case AlgebraName::e7: return "e7";
        case AlgebraName::e8: return "e8";
        case AlgebraName::a1: return "a1";
        case AlgebraName::a2: return "a2";
        case AlgebraName::a2a2: return "a2+a2";
        case AlgebraName::a5: return "a5";
        case AlgebraName::c3: return "c3";
        case AlgebraName::d6: return "d6";
    }
    return "?";
}

AlgebraName algebra_from_string(const std::string& text) {
    static const std::map<std::string, AlgebraName> table = {
        {"g2", AlgebraName::g2}, {"f4", AlgebraName::f4},   {"e6", AlgebraName::e6}, {"e7", AlgebraName::e7},
        {"e8", AlgebraName::e8}, {"a1", AlgebraName::a1},   {"a2", AlgebraName::a2}, {"a2+a2", AlgebraName::a2a2},
        {"a5", AlgebraName::a5}, {"c3", AlgebraName::c3},   {"d6", AlgebraName::d6}};
    auto it = table.find(text);
    if (it == table.end()) throw std::invalid_argument("unknown algebra name: " + text);
    return it->second;
}

std::string RootVector::to_string() const {
    std::string out = "(";
    for (int i = 0; i < 8; ++i) {
        if (i) out += ", ";
        out += coords[i].to_string();
    }
    return out + ")";
}

FieldScalar inner(const RootVector& u, const RootVector& v) {
    FieldScalar s;
    for (int i = 0; i < 8; ++i)
        if (!u.coords[i].is_zero() && !v.coords[i].is_zero()) s.add_mul(u.coords[i], v.coords[i]);
    return s;
}

RootVector reflect(const RootVector& alpha, const RootVector& beta) {
    FieldScalar c = FieldScalar(2) * inner(alpha, beta) / inner(alpha, alpha);
    return beta - c * alpha;
}

RootSystem::RootSystem(AlgebraName name, std::vector<RootVector> roots) : name_(name), roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end(), [](const RootVector& a, const RootVector& b) { return tuple_less(a, b); });
    for (const auto& r : roots_) {
        if (!lookup_.insert(r).second) throw std::logic_error("duplicate root in " + algebra_to_string(name));
    }
    rank_ = span_rank(roots_);
}

bool e6_parity_counts_radical_term() {
    static const bool value = resolve_parity(AlgebraName::e6);
    return value;
}

bool e7_parity_counts_radical_term() {
    static const bool value = resolve_parity(AlgebraName::e7);
    return value;
}

RootSystem generate_roots(AlgebraName name) {
    switch (name) {
        case AlgebraName::g2: return RootSystem(name, build_g2());
        case AlgebraName::f4: return RootSystem(name, build_f4());
        case AlgebraName::e6: return RootSystem(name, build_e6(e6_parity_counts_radical_term()));
        case AlgebraName::e7: return RootSystem(name, build_e7(e7_parity_counts_radical_term()));
        case AlgebraName::e8: return RootSystem(name, build_e8());
        default: throw std::invalid_argument("generate_roots: not a generated system: " + algebra_to_string(name));
    }
}

ValidationReport validate_root_set(const std::vector<RootVector>& roots) {
    ValidationReport report;
    RootSet set;
    for (const auto& r : roots) {
        if (r.is_zero()) report.violations.push_back("zero vector present");
        if (!set.insert(r).second) report.violations.push_back("duplicate root " + r.to_string());
    }
    for (const auto& r : roots)
        if (!set.count(-r)) report.violations.push_back("not closed under negation: " + r.to_string());

    for (const auto& alpha : roots) {
        FieldScalar norm = inner(alpha, alpha);
        for (const auto& beta : roots) {
            FieldScalar pairing = FieldScalar(2) * inner(alpha, beta) / norm;
            if (!pairing.is_rational() || !pairing.rational_part().is_integer()) {
                report.violations.push_back("non-integral Cartan pairing for " + alpha.to_string() + ", " +
                                            beta.to_string());
                continue;
            }
            RootVector reflected = beta - pairing.rational_part() * alpha;
            if (!set.count(reflected))
                report.violations.push_back("reflection of " + beta.to_string() + " in " + alpha.to_string() +
                                            " escapes the system");
        }
    }

    // only multiples of alpha present are +-alpha
    for (const auto& alpha : roots) {
        for (const auto& beta : roots) {
            if (alpha == beta || alpha == -beta) continue;
            int lead = -1;
            for (int i = 0; i < 8; ++i)
                if (!alpha.coords[i].is_zero()) {
                    lead = i;
                    break;
                }
            if (lead < 0) continue;
            if (beta.coords[lead].is_zero()) continue;
            FieldScalar ratio = beta.coords[lead] / alpha.coords[lead];
            if (ratio * alpha == beta)
                report.violations.push_back("proportional pair " + alpha.to_string() + ", " + beta.to_string());
        }
    }
    return report;
}

ValidationReport validate_root_system(const RootSystem& rs) { return validate_root_set(rs.roots()); }

int span_rank(const std::vector<RootVector>& roots) {
    SpanBasis span(8);
    for (const auto& r : roots) span.add(r.to_vec());
    return (int)span.rank();
}

CartanData cartan_integers(const std::vector<RootVector>& roots) {
    ValidationReport report = validate_root_set(roots);
    if (!report.ok())
        throw std::invalid_argument("cartan_integers: not a valid root system (" + report.violations.front() + ")");

    // Generic functional (8^7, 8^6, ..., 8, 1); generic on all table roots.
    RootVector functional;
    long long w = 1;
    for (int i = 7; i >= 0; --i) {
        functional.coords[i] = FieldScalar(w);
        w *= 8;
    }
    std::vector<RootVector> positive;
    for (const auto& r : roots) {
        int s = inner(functional, r).real_sign();
        if (s == 0) throw std::logic_error("functional not generic on root " + r.to_string());
        if (s > 0) positive.push_back(r);
    }
    RootSet pos_set(positive.begin(), positive.end());

    CartanData data;
    for (const auto& alpha : positive) {
        bool decomposable = false;
        for (const auto& beta : positive) {
            if (beta == alpha) continue;
            if (pos_set.count(alpha - beta)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) data.simple_roots.push_back(alpha);
    }
    std::sort(data.simple_roots.begin(), data.simple_roots.end(),
              [](const RootVector& a, const RootVector& b) { return tuple_less(a, b); });

    size_t n = data.simple_roots.size();
    data.matrix.assign(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldScalar v = FieldScalar(2) * inner(data.simple_roots[i], data.simple_roots[j]) /
                            inner(data.simple_roots[j], data.simple_roots[j]);
            if (!v.is_rational() || !v.rational_part().is_integer())
                throw std::logic_error("non-integral Cartan matrix entry");
            data.matrix[i][j] = (long long)v.rational_part().to_double();
        }
    return data;
}

namespace {

struct Component {
    std::vector<size_t> nodes;
};

std::string classify_component(const CartanData& data, const std::vector<size_t>& nodes) {
    size_t n = nodes.size();
    auto edge_weight = [&](size_t a, size_t b) { return data.matrix[nodes[a]][nodes[b]] * data.matrix[nodes[b]][nodes[a]]; };

    if (n == 1) return "A1";

    std::vector<std::vector<size_t>> adj(n);
    int w2_edges = 0, w3_edges = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            long long w = edge_weight(a, b);
            if (w == 0) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
            if (w == 2) ++w2_edges;
            if (w == 3) ++w3_edges;
        }

    if (w3_edges) {
        if (n == 2 && w3_edges == 1) return "G2";
        return "?";
    }

    size_t branch = n;
    for (size_t a = 0; a < n; ++a) {
        if (adj[a].size() > 3) return "?";
        if (adj[a].size() == 3) {
            if (branch != n) return "?";
            branch = a;
        }
    }

    if (w2_edges == 0) {
        if (branch == n) return "A" + std::to_string(n);
        // arm lengths from the branch node
        std::vector<int> arms;
        for (size_t start : adj[branch]) {
            int len = 1;
            size_t prev = branch, cur = start;
            while (true) {
                size_t next = n;
                for (size_t x : adj[cur])
                    if (x != prev) next = x;
                if (next == n) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
        return "?";
    }

    if (w2_edges == 1 && branch == n) {
        // path with one double edge: B/C/F family
        std::vector<FieldScalar> norms;
        for (size_t a = 0; a < n; ++a) {
            const RootVector& r = data.simple_roots[nodes[a]];
            norms.push_back(inner(r, r));
        }
        FieldScalar max_norm = norms[0];
        for (const auto& v : norms)
            if (FieldScalar::real_less(max_norm, v)) max_norm = v;
        int longs = 0;
        for (const auto& v : norms)
            if (v == max_norm) ++longs;
        if (n == 4 && longs == 2) return "F4";
        if (longs == 1) return "C" + std::to_string(n);
        if (longs == (int)n - 1) return "B" + std::to_string(n);
        return "?";
    }
    return "?";
}

}  // namespace

std::string classify_cartan(const CartanData& data) {
    size_t n = data.simple_roots.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<size_t> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t next = 0; next < n; ++next)
                if (comp[next] < 0 && data.matrix[cur][next] != 0) {
                    comp[next] = ncomp;
                    stack.push_back(next);
                }
        }
        ++ncomp;
    }
    std::vector<std::string> parts;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<size_t> nodes;
        for (size_t i = 0; i < n; ++i)
            if (comp[i] == c) nodes.push_back(i);
        parts.push_back(classify_component(data, nodes));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "+";
        out += parts[i];
    }
    return out;
}

}  // namespace atlas
