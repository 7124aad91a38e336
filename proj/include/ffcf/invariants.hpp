#ifndef FFCF_INVARIANTS_HPP
#define FFCF_INVARIANTS_HPP

#include <string>
#include <vector>

#include "ffcf/notation.hpp"
#include "ffcf/rayclass.hpp"

namespace ffcf {

/// A finite abelian extension of the base field, given as a finite-index
/// subgroup of a ray divisor class group.
struct AbelianExtension {
    const RayClassGroup* rcg = nullptr;
    AbelianGroup::Subgroup U;
    long long degree = 0;
};

/// Largest abelian extension with conductor bounded by the modulus in which
/// every place of S splits completely.
AbelianExtension subgroup_from_split_places(const RayClassGroup& rcg,
                                            const std::vector<Place>& S);
AbelianExtension extension_from_subgroup(const RayClassGroup& rcg,
                                         const AbelianGroup::Subgroup& U);

/// Conductor of one character of Cl_D/U, as an effective divisor <= D.
Divisor character_conductor(const RayClassGroup& rcg, const AbelianGroup::Character& chi);

struct SplitReport {
    Place P;
    long long e = 1;        // ramification index
    long long f = 1;        // residue degree
    long long above = 0;    // number of places over P
    long long rational = 0; // rational places over P
    bool in_modulus = false;
};

struct ExtensionInvariants {
    long long degree = 0;
    Divisor conductor;
    long long genus = 0;
    long long n_rational = 0;
    long long char_conductor_degree_sum = 0;  // sum over characters of deg f(chi)
    std::vector<SplitReport> splitting;
};

long long extension_genus(const AbelianExtension& ext);
ExtensionInvariants full_invariants(const AbelianExtension& ext);

std::string invariants_to_json(const AbelianExtension& ext, const ExtensionInvariants& inv,
                               const std::vector<Place>& split_set);

/// Best-effort splitting verification against explicit defining polynomials:
/// at each applicable rational place the number of roots of the reduced
/// polynomial is reported per polynomial; -1 marks an inapplicable place
/// (denominator vanishes, inseparable reduction,or non-finite place).
struct CrosscheckResult {
    Place P;
    std::vector<int> root_counts;
};
std::vector<CrosscheckResult> splitting_crosscheck(const Curve& c,
                                                   const std::vector<DefiningPoly>& polys,
                                                   const std::vector<Place>& places);

}  // namespace ffcf

#endif
