#ifndef FFCF_RAYCLASS_HPP
#define FFCF_RAYCLASS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffcf/abelian.hpp"
#include "ffcf/curve.hpp"
#include "ffcf/localization.hpp"

namespace ffcf {

/// Effective divisor used as a modulus.
struct Modulus {
    Divisor D;
    std::vector<std::pair<Place, int>> supp;  // sorted, exponents > 0

    static Modulus of(const Divisor& d);
    long long degree() const { return D.degree(); }
    int exponent(const Place& p) const;
    bool contains(const Place& p) const { return exponent(p) > 0; }
};

struct BuildOptions {
    int gen_bound = 0;    // 0: start at genus + 1 (at least 2)
    int gen_ceiling = 0;  // 0: genus + 2 + number of support places
    int fun_ceiling = 12;
    long long snf_check_interval = 2000;
};

/// The group of divisor classes modulo the given effective divisor,
/// presented on small-degree places (support places included) and the
/// local unit generators at the support, with relations coming from
/// principal divisors of functions a(x) + b(x) y.  The construction is
/// certified against the torsion order h * |U_D| derived from the zeta
/// function and the local unit group orders.
class RayClassGroup {
public:
    Curve curve;
    Modulus modulus;
    AbelianGroup group;

    std::vector<Place> gen_places;  // presentation order
    struct LocalBlock {
        Place P;
        int nP;
        std::shared_ptr<UnitGroup> units;
        int col0;  // first generator column of this block
    };
    std::vector<LocalBlock> locals;

    // certificate
    long long class_number = 0;
    long long unit_order = 0;
    long long torsion_achieved = 0;
    int gen_bound_used = 0;
    int fun_bound_used = 0;
    int relation_rows = 0;
    int free_sign = 1;

    int place_column(const Place& p) const;
    bool is_generator(const Place& p) const { return place_column(p) >= 0; }

    /// Class of any place coprime to the modulus (support places are fine
    /// too, where the class means the Frobenius representative carried by
    /// the canonical uniformizer).  Places beyond the generator degree are
    /// expressed through an auxiliary function.
    GroupElement place_class(const Place& p) const;

    /// Image of a local unit (as residue-ring element) of the given block.
    GroupElement unit_class(size_t block, const std::vector<Poly>& u) const;

    /// Image of the whole level-m filtration subgroup at P (P in support).
    AbelianGroup::Subgroup level_kernel(const Place& p, int m) const;

    long long degree_of(const GroupElement& e) const;

    std::string dump() const;

    size_t block_index(const Place& p) const;

private:
    friend RayClassGroup build_ray_class_group(const Curve&, const Modulus&, const BuildOptions&);
    std::map<std::vector<long long>, int> columns_;
};

RayClassGroup build_ray_class_group(const Curve& c, const Modulus& m,
                                    const BuildOptions& opt = {});

/// The quotient onto the group of a smaller modulus D' <= D, with the
/// projections needed to follow classes downward.
struct RayClassQuotient {
    const RayClassGroup* base;
    Modulus target;
    AbelianGroup::Quotient quot;

    const AbelianGroup& group() const { return quot.group; }
    GroupElement project(const GroupElement& e) const { return quot.project(e); }
    GroupElement place_class(const Place& p) const { return project(base->place_class(p)); }
};

RayClassQuotient quotient_to_modulus(const RayClassGroup& rcg, const Modulus& smaller);

}  // namespace ffcf

#endif
