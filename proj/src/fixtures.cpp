#include "ffcf/fixtures.hpp"

#include <sstream>

namespace ffcf {

const std::vector<Fixture>& paper_fixtures() {
    static const std::vector<Fixture> fixtures = {
        {"f2-g7", 2, "y^2 + (x^2 + x + 1)y + x^5 + x^4 + x^2 + x", "2(x + 1, y + x + 1)",
         "{ (1/x, y/x^3), (x + 1, y + 1) }", 7, 10, "Z/28 + Z", 4, {}},
        {"f2-g17", 2, "y^2 + (x^2 + x + 1)y + x^5 + x^4 + x^2 + x", "3(z + 1, y + z + 1)",
         "{ (1/z, y/z^3), (z + 1, y + 1) }", 17, 18, "Z/56 + Z", 8,
         {"T^8 + (x^5 + x^4 + x + 1)T^6 + (x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1)T^5"
          " + ((x^17 + x^15 + x^14 + x^13 + x^12 + x^10 + x^7 + x^5 + x + 1)y"
          " + (x^22 + x^20 + x^19 + x^14 + x^12 + x^11 + x^10 + x^7 + x^5 + x^3 + x^2 + x))T^4"
          " + (x^11 + x^10 + x^9 + x^8 + x^3 + x^2 + x + 1)T^3"
          " + ((x^31 + x^29 + x^28 + x^27 + x^24 + x^23 + x^21"
          " + x^16 + x^13 + x^10 + x^9 + x^5 + x^4 + x^3 + x^2 + x)y"
          " + (x^35 + x^32 + x^31 + x^30 + x^29 + x^27 + x^26 + x^25 + x^24"
          " + x^19 + x^15 + x^12 + x^10 + x^6 + x^5 + x^4 + x^3 + x))T^2"
          " + ((x^33 + x^30 + x^28 + x^27 + x^26 + x^25 + x^24 + x^23"
          " + x^21 + x^20 + x^19 + x^18 + x^17 + x^15 + x^14 + x^13"
          " + x^12 + x^11 + x^9 + x^4 + x^3 + 1)y + (x^37 + x^35 + x^34"
          " + x^33 + x^30 + x^24 + x^23 + x^16 + x^15 + x^13 + x^6 + x^3 + x^2 + x))T"
          " + (x^54 + x^53 + x^51 + x^50 + x^47 + x^45 + x^44 + x^43 + x^42"
          " + x^41 + x^39 + x^38 + x^37 + x^36 + x^29 + x^24 + x^22 + x^19 + x^17 + x^16"
          " + x^15 + x^11 + x^10 + x^7 + x^6 + x^2)y + x^60 + x^58 + x^57 + x^55 + x^54"
          " + x^53 + x^52 + x^51 + x^47 + x^46 + x^45 + x^40 + x^39 + x^37 + x^35 + x^33"
          " + x^32 + x^30 + x^29 + x^28 + x^26 + x^21 + x^19 + x^18 + x^17 + x^16 + x^15"
          " + x^13 + x^11 + x^9 + x^6 + x^4 + x^2 + 1"}},
        {"f2-g45a", 2, "y^2 + (x^2 + x + 1)y + x^5 + x^4 + x^2 + x", "5(x + 1, y + x + 1)",
         "{ (1/x, y/x^3), (x + 1, y + 1) }", 45, 34, "Z/2 + Z/112 + Z", 0, {}},
        {"f2-g45", 2, "y^2 + (x^3 + x + 1)y + x^6 + x^5 + x^4 + x^2",
         "(x^2 + x + 1, y + x + 1) + 3(x^2 + x + 1, y + x^2 + x)",
         "{ (x, y + x), (x + 1, y), (x + 1, y + 1) }", 45, 36, "", 12, {}},
        {"f2-g46", 2, "y^2 + xy + x^5 + x^3 + x^2 + x",
         "(x^3 + x + 1) + (x^2 + x + 1, y + x + 1) + (x^2 + x + 1, y + 1)",
         "{ (1/x, y/x^3), (x, y), (x + 1, y), (x + 1, y + x) }", 46, 36, "", 0, {}},
        {"f2-g48", 2, "y^2 + xy + x^5 + x",
         "(x^4 + x + 1, y + x^3 + x^2) + (x^4 + x + 1, y + x^3 + x^2 + x) + 2(1/x, y/x^3)",
         "{ (x, y), (x + 1, y + x + 1), (x + 1, y + 1), (x^2 + x + 1) }", 48, 35, "", 0, {}},
        {"f3-g17", 3, "y^2 + x^5 + x^4 + x^2 + 2x",
         "(1/x, y/x^3) + (x + 1, y + 1) + 2(x^2 + 1, y)",
         "{ (x + 1, y + 2), (x + 2, y + 1), (x + 2, y + 2) }", 17, 28, "", 0,
         {"T^4 + (x^3 + x)T^2 + 2x^6 + 2x^5 + x^4 + 2x^3 + 2x^2",
          "T^2 + (x + 1)y + x^3 + x^2 + x + 1"}},
        {"f3-g22", 3, "y^2 + 2x^6 + x^5 + 2x^4 + x^3 + 2x^2 + x + 2",
         "2(1/x, y/x^3 + 1) + 2(x, y + 2)",
         "{ (x + 1, y + x + 2), (x + 2, y + x), (x + 2, y + x + 1),"
         " (x^5 + x^3 + x + 1, y + 2x^4 + x^3 + 2x) }",
         22, 33, "", 0,
         {"T^3 + 2T + (x^3 + 2x^2 + x + 1 + 1/x)y + x^6 + 2x^2 + 2x + 1/x",
          "T^3 + 2T + (x^4 + 2x^3 + x^2 + 2)y/x + (x^7 + 2x^4 + 2x^3 + 2x + 2)/x"}},
        {"f3-g33", 3, "y^2 + 2x^6 + x^5 + 2x^4 + x",
         "(x^2 + 1, y + x + 2) + (x^2 + 1, y + 2x + 1)",
         "{ (1/x, y/x^3 + 1), (1/x, y/x^3 + 2), (x, y) }", 33, 48, "", 0, {}},
        {"f3-g46", 3, "y^2 + 2x^6 + x^5 + 2x^4 + x^3 + 2x^2 + x + 2",
         "2(1/x, y/x^3 + 1) + 2(x, y + 2)",
         "{ (x + 1, y + x + 2), (x + 2, y + x), (x + 2, y + x + 1) }", 46, 60, "", 0, {}},
        {"f4-g41", 4, "y^2 + (x^2 + x)y + x^5 + x^3 + a^2x^2 + a^2x",
         "(x + a, y + x) + (x + a, y + a^2)", "{ (1/x, y/x^3), (x, y), (x + 1, y) }", 41, 72, "",
         0, {}},
        {"f5-g8", 5, "y^2 + 4z^6 + 2z^5 + 2z^3 + z^2 + 2z",
         "(z^2 + 2z + 3, y + 4z + 4) + (z^2 + 4z + 2, y + 3z + 2)",
         "{ (1/z, y/z^3 + 1), (1/z, y/z^3 + 4), (z, y), (z + 3, y + 4),"
         " (z + 1, y + 4), (z + 2, y + 2), (z + 4, y + 2), (z + 4, y + 3) }",
         8, 24, "", 0,
         {"T^3 + ((4z + 3)y + (3z^4 + 3z^2 + 2))T"
          " + (4z^3 + 3z^2 + 4z + 2)y + 4z^6 + z^4 + z^3 + z^2 + 2z + 2"}},
        {"f5-g10", 5, "y^2 + 4z^6 + 2z^5 + 3z^3 + 4z^2 + 1", "3(z + 3, y + z)",
         "{ (1/z, 1/z^3y + 1), (1/z, y/z^3 + 4), (z, y + z + 2),"
         " (z + 3, y + z + 1), (z + 1, y + 1), (z + 4, y + 4) }",
         10, 31, "", 0,
         {"T^5 + 4T + (4z^3 + z^2 + 3z + 4)y/(z + 3) + (z^6 + 3z^5 + 4z^2 + 2z + 3)/(z + 3)"}},
        {"f5-g12", 5, "y^2 + 3z^6 + z^5 + 2z^4 + 4z^3 + 4z^2 + 3z + 4", "2(1/z)",
         "{ (z, y + 1), (z, y + 4), (z + 2, y + z + 3),"
         " (z + 2, y + z + 1), (z + 4, y + 2), (z + 4, y + 3) }",
         12, 36, "", 0,
         {"T^2 + 4z^3 + 2z^2 + 4z + 1", "T^3 + (3z^3 + z^2 + 2z + 1)T + z^5 + 3z^3 + 3z"}},
        {"f5-g26", 5, "y^2 + z^6 + z^5 + 4z^4 + 4z^3 + 4z^2 + z + 1",
         "(z^2 + z + 1, y + 3) + (z^2 + 3, y + 3z + 2)",
         "{ (1/z, y/z^3 + 2), (z, y + 2), (z + 3, y + z), (z + 2, y + 4) }", 26, 60, "", 0, {}},
        {"f5-g35", 5, "y^2 + z^6 + 4z^5 + 2z^4 + 2z^2 + 4z + 1",
         "(z^2 + z + 1, y + 2) + (z + 1)",
         "{ (1/z, y/z^3 + 2), (z, y + 2), (z + 3, y + 2),"
         " (z + 2, y + z + 1), (z + 4, y + 1), (z + 4, y + 4) }",
         35, 72, "", 0, {}},
        {"f5-g37", 5, "y^2 + z^5 + z^4 + 2z^3 + z^2 + 4z", "3(z, y)",
         "{ (1/z, y/z^3), (z + 1, y), (z + 4, y + 1), (z + 4, y + 4) }", 37, 80, "", 0, {}},
        {"f5-g40", 5, "y^2 + 2z^5 + z^4 + 2", "(z + 3) + (z)",
         "{ (1/z, y/z^3), (z + 1, y + 2), (z + 1, y + 3), (z + 4, y) }", 40, 72, "", 0, {}},
        {"f5-g45", 5, "y^2 + 2z^6 + 4z^4 + 3z^2 + 1", "2(1/z)",
         "{ (z + 3, y), (z + 1, y), (z + 2, y), (z + 4, y) }", 45, 96, "", 0, {}},
        {"f5-g46", 5, "y^2 + z^6 + 2z^5 + 2z^4 + z^3 + 2z^2 + 2z + 1",
         "2(z^2 + 4z + 2, y + z^2 + 4)", "{ (z, y + 2), (z + 3, y + 3), (z + 1, y + 3) }", 46,
         81, "", 0, {}},
    };
    return fixtures;
}

std::optional<Fixture> fixture_by_name(const std::string& name) {
    for (const auto& fx : paper_fixtures())
        if (fx.name == name) return fx;
    return std::nullopt;
}

FixtureOutcome run_fixture(const Fixture& fx, const BuildOptions& opt) {
    FixtureOutcome out;
    out.name = fx.name;
    Curve c = parse_curve(GF(fx.q), fx.curve);
    Modulus D = Modulus::of(parse_divisor(c, fx.divisor));
    auto rcg = build_ray_class_group(c, D, opt);
    out.group = rcg.group.str();
    out.torsion = rcg.torsion_achieved;
    out.class_number = rcg.class_number;
    out.unit_order = rcg.unit_order;

    auto S = parse_place_set(c, fx.split);
    auto ext = subgroup_from_split_places(rcg, S);
    out.degree = ext.degree;
    auto inv = full_invariants(ext);
    out.genus = inv.genus;
    out.n_rational = inv.n_rational;
    out.char_conductor_degree_sum = inv.char_conductor_degree_sum;

    std::ostringstream why;
    bool ok = true;
    if (inv.genus != fx.genus) {
        ok = false;
        why << "genus " << inv.genus << " != " << fx.genus << "; ";
    }
    if (inv.n_rational != fx.n_rational) {
        ok = false;
        why << "N " << inv.n_rational << " != " << fx.n_rational << "; ";
    }
    if (!fx.group.empty() && out.group != fx.group) {
        ok = false;
        why << "group " << out.group << " != " << fx.group << "; ";
    }
    if (fx.index > 0 && ext.degree != fx.index) {
        ok = false;
        why << "index " << ext.degree << " != " << fx.index << "; ";
    }
    if (out.torsion != out.class_number * out.unit_order) {
        ok = false;
        why << "certificate broken; ";
    }
    out.pass = ok;
    out.detail = why.str();
    return out;
}

}  // namespace ffcf
