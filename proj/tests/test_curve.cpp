#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ffcf/curve.hpp"
#include "ffcf/notation.hpp"

using namespace ffcf;

// The genus 2 field over F_2 defined by y^2 + (x^2+x+1)y + x^5+x^4+x^2+x.
static Curve example1() {
    GF k(2);
    return parse_curve(k, "y^2 + (x^2 + x + 1)y + x^5 + x^4 + x^2 + x");
}

TEST_CASE("example curve validates with genus 2") {
    Curve c = example1();
    CHECK(c.genus == 2);
    CHECK(c.h == Poly(GF(2), {1, 1, 1}));
    CHECK(c.f == Poly(GF(2), {0, 1, 1, 0, 1, 1}));
}

// independent brute-force count over F_4, with hand-rolled tables
TEST_CASE("point counts against a hand-rolled F_4 oracle") {
    Curve c = example1();
    CHECK(count_points(c, 1) == 5);

    static const int add4[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int mul4[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    auto ev = [&](const std::vector<int>& coeffs, int x) {
        int acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = add4[mul4[acc][x]][coeffs[i]];
        return acc;
    };
    // h = x^2+x+1, f = x^5+x^4+x^2+x, highest degree first
    std::vector<int> hh = {1, 1, 1}, ff = {1, 1, 0, 1, 1, 0};
    int n = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (add4[add4[mul4[y][y]][mul4[ev(hh, x)][y]]][ev(ff, x)] == 0) ++n;
    // chart at infinity: w^2 + h*(0) w = f*(0) with h*(0) = f*(0) = 0
    n += 1;
    CHECK(count_points(c, 2) == n);
    CHECK(n == 7);
}

TEST_CASE("zeta numerator and class number") {
    Curve c = example1();
    CHECK(c.l_coeffs == std::vector<long long>{1, 2, 3, 4, 4});
    CHECK(c.class_number == 14);
    // functional equation symmetry c_{2g-i} = q^{g-i} c_i
    CHECK(c.l_coeffs[3] == 2 * c.l_coeffs[1]);
    CHECK(c.l_coeffs[4] == 4 * c.l_coeffs[0]);

    // genus 1: h = N_1
    GF k3(3);
    Curve e = parse_curve(k3, "y^2 + 2x^3 + x + 1");
    CHECK(e.genus == 1);
    CHECK(e.class_number == e.point_counts[0]);

    // genus 0
    Curve r = validate_curve(GF(2), Poly::zero(GF(2)), Poly::zero(GF(2)), 0);
    CHECK(r.l_coeffs == std::vector<long long>{1});
    CHECK(count_points(r, 1) == 3);
}

TEST_CASE("singular and mismatched models are rejected") {
    GF k2(2);
    CHECK_THROWS_WITH_AS(validate_curve(k2, Poly::zero(k2), Poly(k2, {0, 1, 0, 0, 0, 1}), 2),
                         doctest::Contains("SingularModel"), Error);
    GF k3(3);
    // f = x^2 (x+1)^3 ... not squarefree
    Poly bad = Poly(k3, {0, 0, 1}) * Poly(k3, {1, 1}).pow(3);
    CHECK_THROWS_WITH_AS(validate_curve(k3, Poly::zero(k3), bad, 2),
                         doctest::Contains("SingularModel"), Error);
    CHECK_THROWS_WITH_AS(validate_curve(k2, Poly(k2, {1, 1, 1}), Poly(k2, {0, 1, 1, 0, 1, 1}), 1),
                         doctest::Contains("DegreeMismatch"), Error);
    // reducible: y^2 + y = x^6 + x^3 factors as (y + x^3)(y + x^3 + 1)
    CHECK_THROWS_AS(validate_curve(k2, Poly::one(k2), Poly(k2, {0, 0, 0, 1, 0, 0, 1}), 2), Error);
    // while y^2 + y = x^5 + x is a genuine genus 2 curve
    CHECK(validate_curve(k2, Poly::one(k2), Poly(k2, {0, 1, 0, 0, 0, 1}), 2).class_number >= 1);
}

TEST_CASE("places of degree 1 on the example curve") {
    Curve c = example1();
    auto pls = places_of_degree(c, 1);
    REQUIRE(pls.size() == 5);
    std::vector<std::string> want = {"(x, y)", "(x, y + 1)", "(x + 1, y)", "(x + 1, y + 1)",
                                     "(1/x, y/x^3)"};
    std::set<std::string> got;
    for (auto& p : pls) got.insert(format_place(c, p));
    for (auto& w : want) CHECK(got.count(w) == 1);
    // the infinite place is ramified of degree 1
    auto inf = infinite_places(c);
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].fiber == Place::Fiber::Ramified);
    CHECK(inf[0].degree == 1);
}

TEST_CASE("place-degree identity sum_{d | i} d * B_d = N_i") {
    std::vector<Curve> curves;
    curves.push_back(example1());
    curves.push_back(parse_curve(GF(3), "y^2 + 2x^6 + x^5 + 2x^4 + x^3 + 2x^2 + x + 2"));
    curves.push_back(parse_curve(GF(5), "y^2 + 4z^6 + 2z^5 + 2z^3 + z^2 + 2z"));
    curves.push_back(parse_curve(GF(4), "y^2 + (x^2 + x)y + x^5 + x^3 + a^2x^2 + a^2x"));
    for (const auto& c : curves) {
        std::map<int, long long> bd;
        for (int d = 1; d <= 4; ++d) bd[d] = (long long)places_of_degree(c, d).size();
        for (int i = 1; i <= 4; ++i) {
            long long total = 0;
            for (int d = 1; d <= i; ++d)
                if (i % d == 0) total += d * bd[d];
            CHECK(total == c.point_counts[size_t(i - 1)]);
        }
    }
}

TEST_CASE("bare place notation resolves inert fibers") {
    Curve c = parse_curve(GF(2), "y^2 + xy + x^5 + x^3 + x^2 + x");
    Place p = parse_place(c, "(x^3 + x + 1)");
    CHECK(p.fiber == Place::Fiber::Inert);
    CHECK(p.degree == 6);
    // split fibers are ambiguous without a second generator
    Curve e1 = example1();
    CHECK_THROWS_WITH_AS(parse_place(e1, "(x)"), doctest::Contains("AmbiguousPlace"), Error);
}

TEST_CASE("paper place notation round-trips") {
    Curve c = example1();
    Place p1 = parse_place(c, "(x + 1, y + 1)");
    CHECK(p1.fiber == Place::Fiber::Split);
    CHECK(p1.degree == 1);
    Place p2 = parse_place(c, "(x + 1, y + x + 1)");  // reduces to (x+1, y)
    CHECK(p2.degree == 1);
    CHECK(!(p1 == p2));
    CHECK(format_place(c, p2) == "(x + 1, y)");
    Place pinf = parse_place(c, "(1/x, y/x^3)");
    CHECK(pinf.infinite);
    CHECK(pinf.degree == 1);

    for (int d = 1; d <= 3; ++d)
        for (auto& p : places_of_degree(c, d)) {
            Place again = parse_place(c, format_place(c, p));
            CHECK(again == p);
        }

    // odd characteristic variants
    Curve c3 = parse_curve(GF(3), "y^2 + 2x^6 + x^5 + 2x^4 + x^3 + 2x^2 + x + 2");
    Place q1 = parse_place(c3, "(1/x, y/x^3 + 1)");
    CHECK(q1.infinite);
    Place q2 = parse_place(c3, "(x, y + 2)");
    CHECK(q2.degree == 1);
    CHECK(parse_place(c3, format_place(c3, q2)) == q2);
    // z is a synonym for x
    CHECK(parse_place(c3, "(z, y + 2)") == q2);
    // the quirky infinite form "1/z^3y + 1"
    Curve c5 = parse_curve(GF(5), "y^2 + 4z^6 + 2z^5 + 3z^3 + 4z^2 + 1");
    Place w1 = parse_place(c5, "(1/z, 1/z^3y + 1)");
    Place w2 = parse_place(c5, "(1/z, y/z^3 + 1)");
    CHECK(w1 == w2);

    // wrong root is rejected
    Curve c17 = parse_curve(GF(3), "y^2 + x^5 + x^4 + x^2 + 2x");
    CHECK_THROWS_WITH_AS(parse_place(c17, "(x, y + 1)"), doctest::Contains("UnknownPlace"), Error);
}

TEST_CASE("divisor parsing") {
    Curve c = example1();
    Divisor d = parse_divisor(c, "3(x + 1, y + x + 1)");
    CHECK(d.degree() == 3);
    CHECK(d.t.size() == 1);
    CHECK(d.effective());
    CHECK(parse_divisor(c, format_divisor(c, d)) == d);
    CHECK(parse_divisor(c, "0").is_zero());

    Curve c2 = parse_curve(GF(2), "y^2 + (x^3 + x + 1)y + x^6 + x^5 + x^4 + x^2");
    Divisor dd =
        parse_divisor(c2, "(x^2 + x + 1, y + x + 1) + 3(x^2 + x + 1, y + x^2 + x)");
    CHECK(dd.t.size() == 2);
    CHECK(dd.degree() == 8);
    CHECK(parse_divisor(c2, format_divisor(c2, dd)) == dd);
}

TEST_CASE("curve format round-trip") {
    Curve a = example1();
    CHECK(parse_curve(GF(2), format_curve(a)) == a);
    Curve b = parse_curve(GF(3), "y^2 + 2x^6 + x^5 + 2x^4 + x");
    CHECK(parse_curve(GF(3), format_curve(b)) == b);
    Curve c = parse_curve(GF(4), "y^2 + (x^2 + x)y + x^5 + x^3 + a^2x^2 + a^2x");
    CHECK(parse_curve(GF(4), format_curve(c)) == c);
}

TEST_CASE("function divisor of x on the example curve") {
    Curve c = example1();
    Divisor d = function_divisor(c, Poly::x(GF(2)), Poly::zero(GF(2)));
    CHECK(d.degree() == 0);
    // (x, y) + (x, y+1) - 2 * infinity
    Place p0 = parse_place(c, "(x, y)");
    Place p1 = parse_place(c, "(x, y + 1)");
    Place pi = parse_place(c, "(1/x, y/x^3)");
    REQUIRE(d.t.size() == 3);
    CHECK(d.t.at(p0) == 1);
    CHECK(d.t.at(p1) == 1);
    CHECK(d.t.at(pi) == -2);
}

TEST_CASE("function divisors have degree zero and match norm valuations") {
    std::mt19937 rng(99);
    std::vector<Curve> curves;
    curves.push_back(example1());
    curves.push_back(parse_curve(GF(3), "y^2 + 2x^6 + x^5 + 2x^4 + x"));
    curves.push_back(parse_curve(GF(5), "y^2 + 2z^5 + z^4 + 2"));
    for (const auto& c : curves) {
        int q = c.q();
        int checked = 0;
        while (checked < 12) {
            std::vector<fq_t> ac(4), bc(2);
            for (auto& v : ac) v = fq_t(rng() % q);
            for (auto& v : bc) v = fq_t(rng() % q);
            Poly a(c.k, ac), b(c.k, bc);
            if (a.is_zero() && b.is_zero()) continue;
            ++checked;
            Divisor d = function_divisor(c, a, b);
            CHECK(d.degree() == 0);
            // sum over places above p of v_P(z) deg P = multiplicity of p in norm
            Poly nm = function_norm(c, a, b);
            auto fac = factorize(nm);
            for (auto& [p, m] : fac.factors) {
                long long s = 0;
                for (auto& pl : places_over(c, p, false)) {
                    auto it = d.t.find(pl);
                    if (it != d.t.end()) s += it->second * pl.degree;
                }
                CHECK(s == (long long)m * p.degree());
            }
        }
    }
}

TEST_CASE("constant functions have zero divisor") {
    Curve c = example1();
    CHECK(function_divisor(c, Poly::one(GF(2)), Poly::zero(GF(2))).is_zero());
}
