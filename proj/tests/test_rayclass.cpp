#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffcf/notation.hpp"
#include "ffcf/rayclass.hpp"

using namespace ffcf;

static Curve example1() {
    return parse_curve(GF(2), "y^2 + (x^2 + x + 1)y + x^5 + x^4 + x^2 + x");
}

TEST_CASE("trivial modulus gives the divisor class group") {
    Curve c = example1();
    auto rcg = build_ray_class_group(c, Modulus::of(Divisor{}));
    CHECK(rcg.group.rank() == 1);
    CHECK(rcg.group.invariants() == std::vector<long long>{14});
    CHECK(rcg.torsion_achieved == 14);
    CHECK(rcg.unit_order == 1);
    // degree map sends generator places to their degrees
    for (auto& p : rcg.gen_places)
        CHECK(rcg.degree_of(rcg.place_class(p)) == p.degree);
}

TEST_CASE("the three moduli of the genus 17 construction") {
    Curve c = example1();
    auto P = parse_place(c, "(x + 1, y + x + 1)");

    auto r2 = build_ray_class_group(c, Modulus::of(parse_divisor(c, "2(x + 1, y + x + 1)")));
    CHECK(r2.group.str() == "Z/28 + Z");
    CHECK(r2.unit_order == 2);
    CHECK(r2.torsion_achieved == 14 * 2);

    auto r3 = build_ray_class_group(c, Modulus::of(parse_divisor(c, "3(x + 1, y + x + 1)")));
    CHECK(r3.group.str() == "Z/56 + Z");

    auto r5 = build_ray_class_group(c, Modulus::of(parse_divisor(c, "5(x + 1, y + x + 1)")));
    CHECK(r5.group.str() == "Z/2 + Z/112 + Z");
    CHECK(r5.torsion_achieved == 14 * 16);

    // degree map on all three
    for (auto* r : {&r2, &r3, &r5}) {
        for (auto& pl : r->gen_places)
            CHECK(r->degree_of(r->place_class(pl)) == pl.degree);
        CHECK(r->degree_of(r->place_class(P)) == 1);
    }
}

TEST_CASE("level kernels of the 3P group") {
    Curve c = example1();
    auto P = parse_place(c, "(x + 1, y + x + 1)");
    auto r3 = build_ray_class_group(c, Modulus::of(parse_divisor(c, "3(x + 1, y + x + 1)")));
    CHECK(r3.group.subgroup_order(r3.level_kernel(P, 0)) == 4);
    CHECK(r3.group.subgroup_order(r3.level_kernel(P, 1)) == 4);
    CHECK(r3.group.subgroup_order(r3.level_kernel(P, 2)) == 2);
    CHECK(r3.group.subgroup_order(r3.level_kernel(P, 3)) == 1);
}

TEST_CASE("quotients between moduli") {
    Curve c = example1();
    auto D3 = Modulus::of(parse_divisor(c, "3(x + 1, y + x + 1)"));
    auto D2 = Modulus::of(parse_divisor(c, "2(x + 1, y + x + 1)"));
    auto r3 = build_ray_class_group(c, D3);

    auto q2 = quotient_to_modulus(r3, D2);
    CHECK(q2.group().str() == "Z/28 + Z");

    auto q0 = quotient_to_modulus(r3, Modulus::of(Divisor{}));
    CHECK(q0.group().invariants() == std::vector<long long>{14});
    CHECK(q0.group().rank() == 1);

    // identity quotient
    auto qid = quotient_to_modulus(r3, D3);
    CHECK(qid.group().str() == r3.group.str());

    // functoriality: classes of generator places project consistently
    auto r2 = build_ray_class_group(c, D2);
    for (auto& pl : r3.gen_places) {
        if (D3.contains(pl)) continue;
        auto through = q2.place_class(pl);
        // orders must agree with the directly built group
        auto direct = r2.place_class(pl);
        CHECK(*q2.group().element_order(q2.group().sub(through, through)) == 1);
        CHECK(q2.group().element_order(through).has_value() ==
              r2.group.element_order(direct).has_value());
    }
}

TEST_CASE("unit image is injective (certificate route)") {
    Curve c = example1();
    auto r3 = build_ray_class_group(c, Modulus::of(parse_divisor(c, "3(x + 1, y + x + 1)")));
    auto P = parse_place(c, "(x + 1, y + x + 1)");
    // image of the full local unit group has the full unit order
    CHECK(r3.group.subgroup_order(r3.level_kernel(P, 0)) == r3.unit_order);
}

TEST_CASE("certified failure reports") {
    Curve c = example1();
    BuildOptions opt;
    opt.fun_ceiling = 1;  // far too small to present anything
    CHECK_THROWS_WITH_AS(
        build_ray_class_group(c, Modulus::of(parse_divisor(c, "2(x + 1, y + x + 1)")), opt),
        doctest::Contains("CertificateNotReached"), Error);
}

TEST_CASE("moduli with inert and infinite support build too") {
    // D = 2(1/z): the infinite place is inert of degree 2
    Curve c = parse_curve(GF(5), "y^2 + 3z^6 + z^5 + 2z^4 + 4z^3 + 4z^2 + 3z + 4");
    auto D = Modulus::of(parse_divisor(c, "2(1/z)"));
    auto rcg = build_ray_class_group(c, D);
    CHECK(rcg.group.rank() == 1);
    CHECK(rcg.torsion_achieved == rcg.class_number * rcg.unit_order);
    CHECK(rcg.unit_order == 24 * 25 / 4);
}

TEST_CASE("diagnostic dump mentions the certificate") {
    Curve c = example1();
    auto r2 = build_ray_class_group(c, Modulus::of(parse_divisor(c, "2(x + 1, y + x + 1)")));
    auto text = r2.dump();
    CHECK(text.find("certificate") != std::string::npos);
    CHECK(text.find("Z/28 + Z") != std::string::npos);
}
