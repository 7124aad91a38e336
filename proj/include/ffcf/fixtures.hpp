#ifndef FFCF_FIXTURES_HPP
#define FFCF_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffcf/invariants.hpp"

namespace ffcf {

/// One published construction: base curve, modulus, split set and the
/// expected invariants of the resulting class field.
struct Fixture {
    std::string name;
    int q;
    std::string curve;
    std::string divisor;
    std::string split;
    long long genus;
    long long n_rational;
    std::string group;  // expected ray class group structure ("" = unchecked)
    long long index;    // expected subgroup index (0 = unchecked)
    std::vector<std::string> defining;  // defining polynomials, when printed
};

const std::vector<Fixture>& paper_fixtures();
std::optional<Fixture> fixture_by_name(const std::string& name);

struct FixtureOutcome {
    std::string name;
    bool pass = false;
    long long genus = 0, n_rational = 0, degree = 0;
    std::string group;
    long long torsion = 0, class_number = 0, unit_order = 0;
    long long char_conductor_degree_sum = 0;
    std::string detail;  // mismatch description when failing
};

FixtureOutcome run_fixture(const Fixture& fx, const BuildOptions& opt = {});

}  // namespace ffcf

#endif
