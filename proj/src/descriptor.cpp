#include "wittlab/descriptor.hpp"

#include <cctype>
#include <sstream>

namespace wittlab {

namespace {

// ---- tiny recursive-descent expression parser over a coordinate ring ----

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const RingPtr& ring;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorKind::ParseError, what + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    uint64_t parse_uint() {
        skip_ws();
        require(pos < s.size() && std::isdigit((unsigned char)s[pos]), ErrorKind::ParseError,
                "expected a number in '" + s + "'");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (uint64_t)(s[pos] - '0');
            require(v < (1ull << 62), ErrorKind::ParseError, "number too large");
            ++pos;
        }
        return v;
    }

    RingElem parse_expr() {
        RingElem acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    RingElem parse_term() {
        RingElem acc = parse_unary();
        for (;;) {
            if (eat('*'))
                acc = acc * parse_unary();
            else if (eat('/'))
                acc = acc * parse_unary().inv();
            else
                return acc;
        }
    }

    RingElem parse_unary() {
        if (eat('-')) return -parse_unary();
        return parse_power();
    }

    RingElem parse_power() {
        RingElem base = parse_atom();
        if (eat('^')) {
            bool neg = eat('-');
            uint64_t e = parse_uint();
            if (neg) return base.pow(e).inv();
            return base.pow(e);
        }
        return base;
    }

    RingElem parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RingElem inner = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos;
            return ring->x();
        }
        if (c == 'w') {
            ++pos;
            return ring->from_constant(ring->field()->gen());
        }
        if (std::isdigit((unsigned char)c)) return ring->from_int((long long)parse_uint());
        fail("unexpected character");
    }
};

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

} // namespace

RingElem parse_ring_elem(const std::string& text, const RingPtr& ring) {
    ExprParser p{text, 0, ring};
    RingElem r = p.parse_expr();
    p.skip_ws();
    require(p.pos == text.size(), ErrorKind::ParseError,
            "trailing characters in expression '" + text + "'");
    return r;
}

RingPtr parse_ring_descriptor(const std::string& text, Mode mode) {
    std::string t = strip(text);
    size_t i = 0;
    auto expect = [&](const std::string& tok) {
        require(t.compare(i, tok.size(), tok) == 0, ErrorKind::ParseError,
                "bad ring descriptor '" + text + "': expected '" + tok + "'");
        i += tok.size();
    };
    require(!t.empty() && t[0] == 'F', ErrorKind::ParseError,
            "ring descriptor must start with F");
    i = 1;
    if (i < t.size() && t[i] == 'q') ++i;
    expect("(");
    size_t comma = t.find(',', i);
    require(comma != std::string::npos, ErrorKind::ParseError, "bad ring descriptor");
    uint32_t p = (uint32_t)std::stoul(strip(t.substr(i, comma - i)));
    i = comma + 1;
    size_t close = t.find(')', i);
    require(close != std::string::npos, ErrorKind::ParseError, "bad ring descriptor");
    uint32_t m = (uint32_t)std::stoul(strip(t.substr(i, close - i)));
    i = close + 1;
    expect("[x,1/");
    require(t.back() == ']', ErrorKind::ParseError, "ring descriptor must end with ]");
    std::string hexpr = t.substr(i, t.size() - 1 - i);

    FqPtr field = Fq::make(p, m);
    // parse h over the affine-line ring on the same field
    RingPtr line = CoordinateRing::make(field, Poly::constant(field, field->one()), mode);
    RingElem h = parse_ring_elem(hexpr, line);
    require(h.denom_exp() == 0, ErrorKind::ParseError, "h must be a polynomial");
    require(!h.is_zero(), ErrorKind::ParseError, "h must be nonzero");
    return CoordinateRing::make(field, h.num(), mode);
}

asw::WV parse_witt_vector(const std::string& text, const RingPtr& ring) {
    std::string t = strip(text);
    require(t.size() >= 2 && t.front() == '[' && t.back() == ']', ErrorKind::ParseError,
            "Witt vector literal must look like [a1,a2,...]");
    std::vector<RingElem> comps;
    for (const auto& part : split_top_level(t.substr(1, t.size() - 2), ','))
        comps.push_back(parse_ring_elem(strip(part), ring));
    require(!comps.empty(), ErrorKind::ParseError, "empty Witt vector");
    return asw::WV(std::move(comps));
}

grp::Perm parse_perm_cycles(const std::string& text, int degree) {
    std::string t = strip(text);
    std::vector<uint16_t> img((size_t)degree);
    for (int i = 0; i < degree; ++i) img[(size_t)i] = (uint16_t)i;
    grp::Perm acc(img);
    size_t i = 0;
    bool any = false;
    while (i < t.size()) {
        while (i < t.size() && std::isspace((unsigned char)t[i])) ++i;
        if (i >= t.size()) break;
        require(t[i] == '(', ErrorKind::ParseError, "cycle must start with ( in '" + text + "'");
        size_t close = t.find(')', i);
        require(close != std::string::npos, ErrorKind::ParseError, "unclosed cycle");
        std::string body = t.substr(i + 1, close - i - 1);
        i = close + 1;
        any = true;
        // numbers separated by spaces or commas
        std::vector<int> pts;
        std::istringstream is(body);
        std::string tok;
        while (is >> tok) {
            for (auto& ch : tok)
                if (ch == ',') ch = ' ';
            std::istringstream is2(tok);
            int v;
            while (is2 >> v) pts.push_back(v);
        }
        if (pts.empty()) continue; // "()" identity
        std::vector<uint16_t> cyc((size_t)degree);
        for (int k = 0; k < degree; ++k) cyc[(size_t)k] = (uint16_t)k;
        for (size_t k = 0; k < pts.size(); ++k) {
            int from = pts[k], to = pts[(k + 1) % pts.size()];
            require(from >= 0 && from < degree && to >= 0 && to < degree, ErrorKind::ParseError,
                    "cycle point out of range in '" + text + "'");
            cyc[(size_t)from] = (uint16_t)to;
        }
        acc = acc * grp::Perm(cyc);
    }
    require(any, ErrorKind::ParseError, "no cycles found in '" + text + "'");
    return acc;
}

std::vector<grp::Perm> parse_perm_list(const std::string& text, int degree) {
    std::vector<grp::Perm> out;
    for (const auto& part : split_top_level(text, ',')) {
        std::string t = strip(part);
        if (t.empty()) continue;
        out.push_back(parse_perm_cycles(t, degree));
    }
    return out;
}

grp::PermGroup parse_group_descriptor(const std::string& text, size_t cap) {
    // "deg=N; gens=(...),(...)"
    auto semi = text.find(';');
    require(semi != std::string::npos, ErrorKind::ParseError,
            "group descriptor needs 'deg=N; gens=...'");
    std::string head = strip(text.substr(0, semi));
    std::string tail = strip(text.substr(semi + 1));
    require(head.rfind("deg=", 0) == 0, ErrorKind::ParseError, "missing deg=");
    int degree = std::stoi(head.substr(4));
    require(degree >= 1 && degree <= 65535, ErrorKind::ParseError, "bad degree");
    require(tail.rfind("gens=", 0) == 0, ErrorKind::ParseError, "missing gens=");
    std::string gens_text = strip(tail.substr(5));
    std::vector<grp::Perm> gens;
    if (!gens_text.empty()) gens = parse_perm_list(gens_text, degree);
    return grp::PermGroup(degree, gens, cap);
}

} // namespace wittlab
