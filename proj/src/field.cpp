#include "atlas/field.hpp"

#include <cctype>
#include <vector>

namespace atlas {

namespace {

const char* radical_name(int index) {
    switch (index) {
        case 1: return "r2";
        case 2: return "r3";
        case 3: return "r6";
        default: return nullptr;
    }
}

// Renders four coordinates on {1,r2,r3,r6}; "0" when all vanish.
std::string render4(const Rational* coeffs) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& c = coeffs[i];
        if (c.is_zero()) continue;
        std::string body;
        const char* rad = radical_name(i);
        if (!rad) {
            body = c.to_string();
        } else if (c.is_one()) {
            body = rad;
        } else if ((-c).is_one()) {
            body = std::string("-") + rad;
        } else {
            body = c.to_string() + "*" + rad;
        }
        if (!out.empty() && body[0] != '-') out += "+";
        out += body;
    }
    return out.empty() ? "0" : out;
}

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
};

int radical_index(const std::string& tok) {
    if (tok == "r2") return 1;
    if (tok == "r3") return 2;
    if (tok == "r6") return 3;
    return -1;
}

// One term: [sign] ( rational [*rN] | rN | i*(group) | i )
void parse_terms(Cursor& cur, FieldScalar& out, int base);

void parse_group(Cursor& cur, FieldScalar& out, int base) {
    parse_terms(cur, out, base);
    cur.skip_ws();
    if (cur.peek() != ')') throw parse_error("expected ')' in scalar: " + cur.s);
    ++cur.pos;
}

void parse_terms(Cursor& cur, FieldScalar& out, int base) {
    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.done() || cur.peek() == ')') {
            if (first) throw parse_error("empty scalar term in: " + cur.s);
            return;
        }
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1;
            ++cur.pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in scalar: " + cur.s);
        }
        cur.skip_ws();
        first = false;

        if (cur.peek() == 'i') {
            ++cur.pos;
            cur.skip_ws();
            FieldScalar group;
            if (cur.peek() == '*') {
                ++cur.pos;
                cur.skip_ws();
                if (cur.peek() != '(') throw parse_error("expected '(' after i* in: " + cur.s);
                ++cur.pos;
                parse_group(cur, group, 0);
            } else {
                group = FieldScalar::one();
            }
            for (int k = 0; k < 4; ++k) {
                Rational v = group.coeff(k);
                if (sign < 0) v = -v;
                out.coeff(base + 4 + k) += v;
            }
            continue;
        }

        if (cur.peek() == 'r') {
            std::string tok = cur.s.substr(cur.pos, 2);
            int idx = radical_index(tok);
            if (idx < 0) throw parse_error("unknown radical in scalar: " + cur.s);
            cur.pos += 2;
            out.coeff(base + idx) += Rational(sign);
            continue;
        }

        // rational literal, optionally * radical
        size_t start = cur.pos;
        while (!cur.done() && (std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '/')) ++cur.pos;
        if (start == cur.pos) throw parse_error("expected number in scalar: " + cur.s);
        Rational value = Rational::parse(cur.s.substr(start, cur.pos - start));
        if (sign < 0) value = -value;
        int idx = 0;
        cur.skip_ws();
        if (cur.peek() == '*') {
            ++cur.pos;
            cur.skip_ws();
            std::string tok = cur.s.substr(cur.pos, 2);
            idx = radical_index(tok);
            if (idx < 0) throw parse_error("expected radical after '*' in: " + cur.s);
            cur.pos += 2;
        }
        out.coeff(base + idx) += value;
    }
}

}  // namespace

std::string FieldScalar::to_string() const {
    bool has_im = !is_real();
    bool has_re = false;
    for (int i = 0; i < 4; ++i)
        if (!c_[i].is_zero()) has_re = true;

    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re || !has_im) out = render4(&c_[0]);
    if (has_im) {
        if (!out.empty()) out += "+";
        out += "i*(" + render4(&c_[4]) + ")";
    }
    return out;
}

FieldScalar FieldScalar::parse(const std::string& text) {
    Cursor cur{text};
    FieldScalar out;
    parse_terms(cur, out, 0);
    cur.skip_ws();
    if (!cur.done()) throw parse_error("trailing characters in scalar: " + text);
    return out;
}

}  // namespace atlas
