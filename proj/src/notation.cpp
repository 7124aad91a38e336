#include "ffcf/notation.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ffcf {

namespace {

// ---------------------------------------------------------------- lexer ---

struct Lexer {
    std::string s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return i < s.size() ? s[i++] : '\0';
    }
    long long number() {
        skip();
        long long v = 0;
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
            throw parse_error("expected number in '" + s + "'");
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return v;
    }
};

// value: polynomial in T whose coefficients are rational in x with a
// bivariate (x, y) numerator
struct RatBivar {
    GF k;
    std::map<std::pair<int, int>, fq_t> num;  // (deg x, deg y) -> coeff
    Poly den;

    explicit RatBivar(GF kk) : k(kk), den(Poly::one(kk)) {}

    void set(int ex, int ey, fq_t c) {
        if (c != 0) num[{ex, ey}] = c;
    }
    bool is_zero() const { return num.empty(); }
    Poly x_part(int ydeg) const {
        std::vector<fq_t> cs;
        for (auto& [m, c] : num) {
            if (m.second != ydeg) continue;
            if (int(cs.size()) <= m.first) cs.resize(size_t(m.first) + 1, 0);
            cs[size_t(m.first)] = c;
        }
        return Poly(k, cs);
    }
    int max_ydeg() const {
        int d = 0;
        for (auto& [m, c] : num)
            if (c != 0) d = std::max(d, m.second);
        return d;
    }
};

RatBivar rb_add(const RatBivar& a, const RatBivar& b) {
    RatBivar r(a.k);
    if (a.den == b.den) {
        r.den = a.den;
        r.num = a.num;
        for (auto& [m, c] : b.num) {
            fq_t v = a.k.add(r.num.count(m) ? r.num[m] : fq_t(0), c);
            if (v == 0)
                r.num.erase(m);
            else
                r.num[m] = v;
        }
        return r;
    }
    r.den = a.den * b.den;
    auto acc = [&](const std::map<std::pair<int, int>, fq_t>& num, const Poly& mul) {
        for (auto& [m, c] : num)
            for (int i = 0; i <= mul.degree(); ++i) {
                if (mul.coeff(i) == 0) continue;
                auto key = std::make_pair(m.first + i, m.second);
                fq_t v = a.k.add(r.num.count(key) ? r.num[key] : fq_t(0), a.k.mul(c, mul.coeff(i)));
                if (v == 0)
                    r.num.erase(key);
                else
                    r.num[key] = v;
            }
    };
    acc(a.num, b.den);
    acc(b.num, a.den);
    return r;
}

RatBivar rb_neg(const RatBivar& a) {
    RatBivar r = a;
    for (auto& [m, c] : r.num) c = a.k.neg(c);
    return r;
}

RatBivar rb_mul(const RatBivar& a, const RatBivar& b) {
    RatBivar r(a.k);
    r.den = a.den * b.den;
    for (auto& [m1, c1] : a.num)
        for (auto& [m2, c2] : b.num) {
            auto key = std::make_pair(m1.first + m2.first, m1.second + m2.second);
            fq_t v = a.k.add(r.num.count(key) ? r.num[key] : fq_t(0), a.k.mul(c1, c2));
            if (v == 0)
                r.num.erase(key);
            else
                r.num[key] = v;
        }
    return r;
}

RatBivar rb_div(const RatBivar& a, const RatBivar& b) {
    if (b.is_zero()) throw parse_error("division by zero");
    if (b.max_ydeg() != 0) throw parse_error("division by a y-term is not supported");
    RatBivar r(a.k);
    r.den = a.den * b.x_part(0);
    for (auto& [m, c] : a.num)
        for (int i = 0; i <= b.den.degree(); ++i) {
            if (b.den.coeff(i) == 0) continue;
            auto key = std::make_pair(m.first + i, m.second);
            fq_t v = a.k.add(r.num.count(key) ? r.num[key] : fq_t(0), a.k.mul(c, b.den.coeff(i)));
            if (v == 0)
                r.num.erase(key);
            else
                r.num[key] = v;
        }
    return r;
}

using TVal = std::map<int, RatBivar>;  // T-degree -> coefficient

TVal tv_const(const RatBivar& r) {
    TVal v;
    if (!r.is_zero()) v.emplace(0, r);
    return v;
}

TVal tv_add(GF k, const TVal& a, const TVal& b) {
    TVal r = a;
    for (auto& [d, c] : b) {
        auto it = r.find(d);
        if (it == r.end())
            r.emplace(d, c);
        else {
            it->second = rb_add(it->second, c);
            if (it->second.is_zero()) r.erase(it);
        }
    }
    (void)k;
    return r;
}

TVal tv_neg(const TVal& a) {
    TVal r = a;
    for (auto& [d, c] : r) c = rb_neg(c);
    return r;
}

TVal tv_mul(GF k, const TVal& a, const TVal& b) {
    TVal r;
    for (auto& [d1, c1] : a)
        for (auto& [d2, c2] : b) {
            RatBivar p = rb_mul(c1, c2);
            auto it = r.find(d1 + d2);
            if (it == r.end())
                r.emplace(d1 + d2, p);
            else {
                it->second = rb_add(it->second, p);
                if (it->second.is_zero()) r.erase(it);
            }
        }
    (void)k;
    return r;
}

TVal tv_div(GF k, const TVal& a, const TVal& b) {
    if (b.size() != 1 || b.begin()->first != 0) throw parse_error("division by a T-term");
    TVal r;
    for (auto& [d, c] : a) {
        RatBivar q = rb_div(c, b.begin()->second);
        if (!q.is_zero()) r.emplace(d, q);
    }
    (void)k;
    return r;
}

TVal tv_pow(GF k, TVal base, long long e) {
    TVal r = tv_const([&] {
        RatBivar one(k);
        one.set(0, 0, 1);
        return one;
    }());
    while (e > 0) {
        if (e & 1) r = tv_mul(k, r, base);
        base = tv_mul(k, base, base);
        e >>= 1;
    }
    return r;
}

// ------------------------------------------------------------- parser -----

struct ExprParser {
    GF k;
    Lexer lx;
    bool allow_T;

    ExprParser(GF kk, std::string text, bool t) : k(kk), lx{std::move(text)}, allow_T(t) {}

    TVal parse() {
        TVal v = expr();
        if (!lx.eof()) throw parse_error("trailing input in '" + lx.s + "'");
        return v;
    }

    TVal expr() {
        bool neg = false;
        if (lx.peek() == '-') {
            lx.get();
            neg = true;
        } else if (lx.peek() == '+') {
            lx.get();
        }
        TVal v = term();
        if (neg) v = tv_neg(v);
        while (!lx.eof()) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                v = tv_add(k, v, term());
            } else if (c == '-') {
                lx.get();
                v = tv_add(k, v, tv_neg(term()));
            } else {
                break;
            }
        }
        return v;
    }

    TVal term() {
        TVal v = factor();
        for (;;) {
            char c = lx.peek();
            if (c == '*') {
                lx.get();
                v = tv_mul(k, v, factor());
            } else if (c == '/') {
                lx.get();
                v = tv_div(k, v, factor());
            } else if (starts_factor(c)) {
                v = tv_mul(k, v, factor());
            } else {
                break;
            }
        }
        return v;
    }

    static bool starts_factor_char(char c) {
        return std::isdigit((unsigned char)c) || c == 'x' || c == 'z' || c == 'y' || c == 'a' ||
               c == 'T' || c == '(';
    }
    bool starts_factor(char c) { return starts_factor_char(c); }

    TVal factor() {
        TVal v = atom();
        if (lx.peek() == '^') {
            lx.get();
            long long e = lx.number();
            v = tv_pow(k, std::move(v), e);
        }
        return v;
    }

    TVal atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.get();
            TVal v = expr();
            if (lx.get() != ')') throw parse_error("missing ')' in '" + lx.s + "'");
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            long long n = lx.number();
            RatBivar r(k);
            r.set(0, 0, k.from_int(n));
            return tv_const(r);
        }
        lx.get();
        RatBivar r(k);
        if (c == 'x' || c == 'z') {
            r.set(1, 0, 1);
            return tv_const(r);
        }
        if (c == 'y') {
            r.set(0, 1, 1);
            return tv_const(r);
        }
        if (c == 'a') {
            if (k.q() != 4) throw parse_error("constant 'a' is only defined over F_4");
            r.set(0, 0, 2);
            return tv_const(r);
        }
        if (c == 'T') {
            if (!allow_T) throw parse_error("unexpected 'T'");
            RatBivar one(k);
            one.set(0, 0, 1);
            TVal v;
            v.emplace(1, one);
            return v;
        }
        throw parse_error(std::string("unexpected character '") + c + "' in '" + lx.s + "'");
    }
};

RatBivar parse_ratbivar(GF k, const std::string& text) {
    ExprParser p(k, text, false);
    TVal v = p.parse();
    if (v.empty()) return RatBivar(k);
    if (v.size() != 1 || v.begin()->first != 0) throw parse_error("unexpected T in '" + text + "'");
    return v.begin()->second;
}

// split "a, b, c" at top-level commas
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

// (a + b y)/den with den a monomial c x^j, rewritten in the chart
// coordinates u = 1/x, w = y/x^(g+1); throws if not integral there.
struct ChartForm {
    Poly au, bu;  // value = au(u) + bu(u) w
};
ChartForm to_chart(const Curve& c, const RatBivar& v) {
    GF k = c.k;
    int j = v.den.degree();
    for (int i = 0; i < j; ++i)
        if (v.den.coeff(i) != 0) throw parse_error("denominator must be a power of x");
    fq_t dc = k.inv(v.den.lc());
    int g = c.genus;
    std::vector<fq_t> au, bu;
    auto put = [&](std::vector<fq_t>& vec, int e, fq_t coeff) {
        if (e < 0) throw parse_error("generator not integral at infinity");
        if (int(vec.size()) <= e) vec.resize(size_t(e) + 1, 0);
        vec[size_t(e)] = k.add(vec[size_t(e)], coeff);
    };
    for (auto& [m, coeff] : v.num) {
        fq_t cc = k.mul(coeff, dc);
        if (m.second == 0)
            put(au, j - m.first, cc);
        else if (m.second == 1)
            put(bu, j - m.first - (g + 1), cc);
        else
            throw parse_error("place generator must be linear in y");
    }
    return ChartForm{Poly(k, au), Poly(k, bu)};
}

Place place_from_root(const Curve& c, const Poly& p, bool infinite, const Poly& root_candidate) {
    auto fd = fiber_over(c, p, infinite);
    if (fd.kind == Place::Fiber::Inert)
        throw parse_error("UnknownPlace: fiber over " + p.str() + " is inert, no y-root exists");
    ResidueField kp(c.k, p);
    Poly r = kp.reduce(root_candidate);
    for (auto& pl : places_over(c, p, infinite))
        if (pl.root == r) return pl;
    throw parse_error("UnknownPlace: ideal does not match a place over " + p.str());
}

Place unique_place_over(const Curve& c, const Poly& p, bool infinite) {
    auto pls = places_over(c, p, infinite);
    if (pls.size() > 1)
        throw parse_error("AmbiguousPlace: two places lie over " + p.str() +
                          ", a second generator is required");
    return pls.front();
}

}  // namespace

Curve parse_curve(GF k, const std::string& text) {
    RatBivar v = parse_ratbivar(k, text);
    if (v.den.degree() != 0) throw parse_error("curve equation must be polynomial");
    fq_t dinv = k.inv(v.den.lc());
    if (v.max_ydeg() != 2) throw parse_error("curve equation must be quadratic in y");
    Poly c2 = v.x_part(2) * dinv, c1 = v.x_part(1) * dinv, c0 = v.x_part(0) * dinv;
    if (!c2.is_one()) throw parse_error("curve equation must be monic in y^2");
    Poly h = c1, f = -c0;
    int m = std::max(2 * h.degree(), f.degree());
    if (m < 3) throw parse_error("degrees too small for genus 1 or 2");
    int genus = (m - 1) / 2;
    return validate_curve(k, h, f, genus);
}

Place parse_place(const Curve& c, const std::string& text) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw parse_error("place must be parenthesized: '" + text + "'");
    auto parts = split_top(s.substr(1, s.size() - 2), ',');
    if (parts.empty() || parts.size() > 2) throw parse_error("place needs 1 or 2 generators");
    RatBivar g1 = parse_ratbivar(c.k, parts[0]);
    if (g1.is_zero()) throw parse_error("zero generator");

    bool infinite = g1.den.degree() > 0;
    if (!infinite && parts.size() == 2) {
        RatBivar g2 = parse_ratbivar(c.k, parts[1]);
        infinite = g2.den.degree() > 0;
    }

    if (infinite) {
        ChartForm f1 = to_chart(c, g1);
        if (!f1.bu.is_zero() || !(f1.au == Poly::x(c.k)))
            throw parse_error("infinite place must be generated by 1/x");
        if (parts.size() == 1) return unique_place_over(c, Poly::x(c.k), true);
        ChartForm f2 = to_chart(c, parse_ratbivar(c.k, parts[1]));
        if (f2.bu.is_zero()) throw parse_error("second generator must involve y");
        if (f2.bu.coeff(0) == 0)
            throw parse_error("UnknownPlace: second generator degenerates at infinity");
        // root of bu * w + au mod u
        fq_t root = c.k.neg(c.k.div(f2.au.coeff(0), f2.bu.coeff(0)));
        return place_from_root(c, Poly::x(c.k), true, Poly::constant(c.k, root));
    }

    if (g1.max_ydeg() != 0) throw parse_error("first generator must not involve y");
    Poly p = (g1.x_part(0) * c.k.inv(g1.den.coeff(0))).monic();
    if (p.degree() < 1 || !is_irreducible(p))
        throw parse_error("first generator must be irreducible: '" + parts[0] + "'");
    if (c.rational_model() || parts.size() == 1) return unique_place_over(c, p, false);

    RatBivar g2 = parse_ratbivar(c.k, parts[1]);
    Poly a = g2.x_part(0) * c.k.inv(g2.den.coeff(0));
    Poly b = g2.x_part(1) * c.k.inv(g2.den.coeff(0));
    if (g2.max_ydeg() != 1 || b.is_zero()) throw parse_error("second generator must be a + b*y");
    ResidueField kp(c.k, p);
    Poly root = kp.neg(kp.mul(kp.reduce(a), kp.inv(kp.reduce(b))));
    return place_from_root(c, p, false, root);
}

Divisor parse_divisor(const Curve& c, const std::string& text) {
    Divisor d;
    std::string s = strip(text);
    if (s == "0") return d;
    // split into signed terms at depth 0
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (!strip(cur).empty()) terms.emplace_back(sign, cur);
            sign = (ch == '-') ? -1 : 1;
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!strip(cur).empty()) terms.emplace_back(sign, cur);
    if (terms.empty()) throw parse_error("empty divisor");
    for (auto& [sg, t] : terms) {
        std::string u = strip(t);
        long long coeff = 1;
        size_t pos = 0;
        while (pos < u.size() && std::isdigit((unsigned char)u[pos])) ++pos;
        if (pos > 0) coeff = std::stoll(u.substr(0, pos));
        std::string rest = strip(u.substr(pos));
        if (!rest.empty() && rest.front() == '*') rest = strip(rest.substr(1));
        if (rest.empty()) throw parse_error("divisor term without place: '" + t + "'");
        Place pl = parse_place(c, rest);
        d.add(pl, sg * coeff);
    }
    return d;
}

std::vector<Place> parse_place_set(const Curve& c, const std::string& text) {
    std::string s = strip(text);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw parse_error("unbalanced braces in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<Place> out;
    for (auto& part : split_top(s, ',')) {
        std::string t = strip(part);
        if (t.empty()) continue;
        out.push_back(parse_place(c, t));
    }
    return out;
}

std::string format_poly(const Poly& p, char var) { return p.str(var); }

std::string format_curve(const Curve& c) {
    std::ostringstream os;
    os << "y^2";
    if (!c.h.is_zero()) {
        os << " + ";
        if (c.h.degree() > 0 && c.h.coeffs().size() > 1 &&
            [&] {
                int terms = 0;
                for (auto cc : c.h.coeffs())
                    if (cc) ++terms;
                return terms > 1;
            }())
            os << "(" << c.h.str() << ")*y";
        else
            os << c.h.str() << "*y";
    }
    Poly c0 = -c.f;
    if (!c0.is_zero()) os << " + " << c0.str();
    return os.str();
}

std::string format_place(const Curve& c, const Place& pl) {
    std::ostringstream os;
    if (pl.infinite) {
        if (pl.fiber == Place::Fiber::Inert || pl.fiber == Place::Fiber::Base) return "(1/x)";
        os << "(1/x, y/x^" << (c.genus + 1);
        Poly s = -pl.root;
        if (!s.is_zero()) os << " + " << s.str();
        os << ")";
        return os.str();
    }
    if (pl.fiber == Place::Fiber::Inert || pl.fiber == Place::Fiber::Base)
        return "(" + pl.p.str() + ")";
    os << "(" << pl.p.str() << ", y";
    Poly s = -pl.root;
    if (!s.is_zero()) os << " + " << s.str();
    os << ")";
    return os.str();
}

std::string format_divisor(const Curve& c, const Divisor& d) {
    if (d.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pl, n] : d.t) {
        if (first) {
            if (n < 0) os << "-";
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        long long m = n < 0 ? -n : n;
        if (m != 1) os << m;
        os << format_place(c, pl);
        first = false;
    }
    return os.str();
}

std::string format_place_set(const Curve& c, const std::vector<Place>& s) {
    std::ostringstream os;
    os << "{ ";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ", ";
        os << format_place(c, s[i]);
    }
    os << " }";
    return os.str();
}

DefiningPoly parse_defining_poly(const Curve& c, const std::string& text) {
    ExprParser p(c.k, text, true);
    TVal v = p.parse();
    if (v.empty() || v.rbegin()->first < 1) throw parse_error("defining polynomial needs T");
    DefiningPoly out;
    int deg = v.rbegin()->first;
    for (int d = 0; d <= deg; ++d) {
        auto it = v.find(d);
        DefiningPoly::Coeff co{Poly::zero(c.k), Poly::zero(c.k), Poly::one(c.k)};
        if (it != v.end()) {
            const RatBivar& r = it->second;
            if (r.max_ydeg() > 1) throw parse_error("coefficients must be linear in y");
            co.a = r.x_part(0);
            co.b = r.x_part(1);
            co.den = r.den;
        }
        out.coeffs.push_back(co);
    }
    return out;
}

}  // namespace ffcf
