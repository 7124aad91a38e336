#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ffcf/abelian.hpp"
#include "ffcf/intmat.hpp"
#include "ffcf/poly.hpp"
#include "ffcf/residue_field.hpp"

using namespace ffcf;

TEST_CASE("F4 arithmetic: a^2 = a + 1") {
    GF k(4);
    // encoding: 2 = a, 3 = a+1
    CHECK(k.mul(2, 2) == 3);
    CHECK(k.mul(2, 3) == 1);
    CHECK(k.add(2, 3) == 1);
    CHECK(k.inv(2) == 3);
    for (fq_t x : k.elements())
        if (x != 0) CHECK(k.mul(x, k.inv(x)) == 1);
}

TEST_CASE("prime field arithmetic") {
    for (int q : {2, 3, 5}) {
        GF k(q);
        for (fq_t a : k.elements())
            for (fq_t b : k.elements()) {
                CHECK(k.add(a, b) == fq_t((a + b) % q));
                CHECK(k.mul(a, b) == fq_t((a * b) % q));
            }
    }
}

TEST_CASE("poly divmod and gcd") {
    GF k(5);
    Poly f(k, {1, 0, 3, 0, 1});  // x^4 + 3x^2 + 1
    Poly g(k, {2, 1});           // x + 2
    auto [q, r] = f.divmod(g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    Poly a = f * g, b = f * Poly(k, {1, 1});
    CHECK(gcd(a, b) == f.monic());
}

TEST_CASE("irreducibles over F_2") {
    GF k(2);
    auto deg1 = monic_irreducibles_of_degree(k, 1);
    REQUIRE(deg1.size() == 2);  // x, x+1
    CHECK(deg1[0] == Poly::x(k));
    CHECK(deg1[1] == Poly(k, {1, 1}));

    // brute-force oracle for degree 3: no roots in F_2 and not divisible by
    // the unique irreducible quadratic x^2+x+1
    Poly quad(k, {1, 1, 1});
    std::set<unsigned long long> oracle;
    for (unsigned long long c = 0; c < 8; ++c) {
        Poly f = Poly::decode(k, 8 + c);
        if (f.eval(0) == 0 || f.eval(1) == 0) continue;
        if ((f % quad).is_zero()) continue;
        oracle.insert(f.encode());
    }
    auto deg3 = monic_irreducibles_of_degree(k, 3);
    REQUIRE(deg3.size() == oracle.size());
    for (const auto& f : deg3) CHECK(oracle.count(f.encode()) == 1);
    CHECK(deg3[0] == Poly(k, {1, 1, 0, 1}));  // x^3+x+1
    CHECK(deg3[1] == Poly(k, {1, 0, 1, 1}));  // x^3+x^2+1

    CHECK(monic_irreducibles(k, 3).size() == 5);
    CHECK(monic_irreducibles(GF(5), 1).size() == 5);
}

TEST_CASE("factorize") {
    GF k(2);
    Poly f = Poly(k, {1, 1, 0, 1}) * Poly(k, {1, 1, 0, 1}) * Poly(k, {1, 1}) * Poly::x(k);
    auto fac = factorize(f);
    CHECK(fac.unit == 1);
    REQUIRE(fac.factors.size() == 3);
    Poly rebuilt = Poly::constant(k, fac.unit);
    for (auto& [p, m] : fac.factors) rebuilt = rebuilt * p.pow(m);
    CHECK(rebuilt == f);
}

TEST_CASE("residue field basics") {
    GF k(3);
    ResidueField F9(k, Poly(k, {1, 0, 1}));  // x^2 + 1 irreducible over F_3
    CHECK(F9.order() == 9);
    auto g = F9.primitive_element();
    std::set<long long> seen;
    auto e = F9.one();
    for (int i = 0; i < 8; ++i) {
        seen.insert(F9.index_of(e));
        e = F9.mul(e, g);
    }
    CHECK(seen.size() == 8);
    // frobenius inverse
    for (long long i = 0; i < 9; ++i) {
        auto a = F9.element(i);
        auto b = F9.frobenius_inverse(a, 1);
        CHECK(F9.pow(b, 3) == a);
    }
}

TEST_CASE("SNF examples and postcondition") {
    IntMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    auto sf = smith_normal_form(m);
    CHECK(sf.diag[0] == 1);
    CHECK(sf.diag[1] == 6);
    CHECK(sf.U * m * sf.V == [&] {
        IntMat s(2, 2);
        s.at(0, 0) = sf.diag[0];
        s.at(1, 1) = sf.diag[1];
        return s;
    }());

    auto id = IntMat::identity(3);
    auto sfi = smith_normal_form(id);
    for (auto& d : sfi.diag) CHECK(d == 1);

    IntMat z(2, 2);
    auto sfz = smith_normal_form(z);
    CHECK(sfz.rank == 0);
    CHECK(sfz.diag[0] == 0);
    CHECK(sfz.diag[1] == 0);
}

TEST_CASE("SNF property on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = int(rng() % 21) - 10;
        auto sf = smith_normal_form(m);
        IntMat s(r, c);
        for (int i = 0; i < std::min(r, c); ++i) s.at(i, i) = sf.diag[size_t(i)];
        CHECK(sf.U * m * sf.V == s);
        CHECK(abs(det(sf.U)) == 1);
        CHECK(abs(det(sf.V)) == 1);
        CHECK(sf.V * sf.Vinv == IntMat::identity(c));
        for (int i = 0; i + 1 < sf.rank; ++i)
            CHECK(sf.diag[size_t(i + 1)] % sf.diag[size_t(i)] == 0);
    }
}

TEST_CASE("group from presentation") {
    // Z^2 / <(28,0)>  =  Z/28 + Z
    auto g = AbelianGroup::from_presentation(2, {{28, 0}});
    CHECK(g.rank() == 1);
    REQUIRE(g.invariants().size() == 1);
    CHECK(g.invariants()[0] == 28);
    CHECK(g.str() == "Z/28 + Z");

    auto z = AbelianGroup::from_presentation(1, std::vector<std::vector<long long>>{});
    CHECK(z.rank() == 1);
    CHECK(z.invariants().empty());

    auto klein = AbelianGroup::from_presentation(2, {{2, 0}, {0, 2}});
    CHECK(klein.rank() == 0);
    CHECK(klein.invariants() == std::vector<long long>{2, 2});

    // idempotence: presenting an already-normalized group reproduces it
    auto g2 = AbelianGroup::from_presentation(3, {{4, 0, 0}, {0, 12, 0}});
    CHECK(g2.invariants() == std::vector<long long>{4, 12});
    CHECK(g2.rank() == 1);
}

TEST_CASE("element order") {
    auto g = AbelianGroup::from_invariants({28}, 0);
    CHECK(*g.element_order(g.from_coords({0})) == 1);
    CHECK(*g.element_order(g.from_coords({7})) == 4);
    auto z = AbelianGroup::from_invariants({}, 1);
    CHECK(!z.element_order(z.from_coords({1})).has_value());
}

TEST_CASE("subgroup index and membership") {
    auto g = AbelianGroup::from_invariants({28}, 1);  // Z/28 + Z
    auto u = g.subgroup({g.from_coords({7, 0}), g.from_coords({0, 1})});
    CHECK(g.subgroup_index(u) == 7);
    CHECK(g.contains(u, g.from_coords({14, 3})));
    CHECK(!g.contains(u, g.from_coords({1, 0})));
}

TEST_CASE("subgroups of index d in cyclic groups") {
    auto g = AbelianGroup::from_invariants({28}, 0);
    CHECK(g.subgroups_of_index(4).size() == 1);
    auto g2 = AbelianGroup::from_invariants({2, 2}, 0);
    CHECK(g2.subgroups_of_index(2).size() == 3);
    auto g3 = AbelianGroup::from_invariants({56}, 0);
    CHECK(g3.subgroups_of_index(8).size() == 1);
    CHECK(g3.subgroups_of_index(3).empty());
}

// brute-force subgroup census: closures of all <=3 element tuples
static std::map<long long, int> subgroup_census(const AbelianGroup& g) {
    long long n = g.torsion_order();
    std::vector<GroupElement> all;
    std::function<void(size_t, GroupElement)> gen = [&](size_t i, GroupElement e) {
        if (i == g.invariants().size()) {
            all.push_back(e);
            return;
        }
        for (long long v = 0; v < g.invariants()[i]; ++v) {
            e.c[i] = v;
            gen(i + 1, e);
        }
    };
    gen(0, g.zero());
    CHECK(static_cast<long long>(all.size()) == n);
    std::set<std::set<std::vector<long long>>> subs;
    auto closure = [&](std::vector<GroupElement> gens) {
        std::set<std::vector<long long>> elems;
        std::vector<GroupElement> frontier{g.zero()};
        elems.insert(g.zero().c);
        while (!frontier.empty()) {
            auto e = frontier.back();
            frontier.pop_back();
            for (const auto& x : gens) {
                auto s = g.add(e, x);
                if (elems.insert(s.c).second) frontier.push_back(s);
            }
        }
        return elems;
    };
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i; j < all.size(); ++j)
            for (size_t l = j; l < all.size(); ++l)
                subs.insert(closure({all[i], all[j], all[l]}));
    std::map<long long, int> by_index;
    for (auto& s : subs) by_index[n / (long long)s.size()]++;
    return by_index;
}

TEST_CASE("subgroup enumeration matches brute force census") {
    std::vector<AbelianGroup> groups = {
        AbelianGroup::from_invariants({8}, 0),
        AbelianGroup::from_invariants({2, 4}, 0),
        AbelianGroup::from_invariants({2, 2, 4}, 0),
        AbelianGroup::from_invariants({3, 12}, 0),
        AbelianGroup::from_invariants({6, 6}, 0),
    };
    for (const auto& g : groups) {
        CHECK(g.torsion_order() <= 256);
        auto census = subgroup_census(g);
        long long n = g.torsion_order();
        for (long long d = 1; d <= n; ++d) {
            if (n % d) continue;
            auto subs = g.subgroups_of_index(d);
            int expect = census.count(d) ? census.at(d) : 0;
            CHECK_MESSAGE(int(subs.size()) == expect,
                          "group ", g.str(), " index ", d);
        }
    }
}

TEST_CASE("characters of cyclic groups") {
    auto g = AbelianGroup::from_invariants({8}, 0);
    auto chars = g.characters_trivial_on(g.trivial_subgroup());
    REQUIRE(chars.size() == 8);
    std::map<long long, int> by_order;
    for (auto& c : chars) by_order[c.order]++;
    CHECK(by_order[1] == 1);
    CHECK(by_order[2] == 1);
    CHECK(by_order[4] == 2);
    CHECK(by_order[8] == 4);

    auto full = g.characters_trivial_on(g.full_subgroup());
    REQUIRE(full.size() == 1);
    CHECK(full[0].order == 1);

    auto g56 = AbelianGroup::from_invariants({56}, 0);
    auto h = g56.subgroup({g56.from_coords({8})});
    CHECK(g56.subgroup_index(h) == 8);
    CHECK(g56.characters_trivial_on(h).size() == 8);
}

TEST_CASE("characters are homomorphisms and separate subgroups") {
    auto g = AbelianGroup::from_invariants({2, 12}, 0);
    auto h = g.subgroup({g.from_coords({1, 3})});
    auto chars = g.characters_trivial_on(h);
    CHECK(static_cast<long long>(chars.size()) == boost::multiprecision::numerator(Rat(g.subgroup_index(h))).convert_to<long long>());
    for (auto& chi : chars) {
        CHECK(chi.trivial_on(g.from_coords({1, 3})));
        auto a = g.from_coords({1, 5}), b = g.from_coords({0, 7});
        Rat sum = chi.eval(a) + chi.eval(b) - chi.eval(g.add(a, b));
        Int num = boost::multiprecision::numerator(sum), den = boost::multiprecision::denominator(sum);
        CHECK(num % den == 0);
    }
}

TEST_CASE("quotient groups") {
    auto g = AbelianGroup::from_invariants({56}, 1);
    auto h = g.subgroup({g.from_coords({28, 0})});  // order-2 subgroup
    auto q = g.quotient_by(h);
    CHECK(q.group.invariants() == std::vector<long long>{28});
    CHECK(q.group.rank() == 1);
    auto img = q.project(g.from_coords({1, 0}));
    CHECK(*q.group.element_order(img) == 28);
}
