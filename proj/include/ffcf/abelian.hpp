#ifndef FFCF_ABELIAN_HPP
#define FFCF_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffcf/intmat.hpp"

namespace ffcf {

using Rat = boost::multiprecision::cpp_rational;

/// Element of a finitely generated abelian group in invariant coordinates:
/// one entry per invariant factor (reduced into [0, d_i)) followed by one
/// per free generator.
struct GroupElement {
    std::vector<long long> c;

    bool is_zero() const {
        for (long long v : c)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const GroupElement& o) const { return c == o.c; }
    bool operator<(const GroupElement& o) const { return c < o.c; }
};

/// Z^rank  (+)  Z/d_1 (+) ... (+) Z/d_k  with d_1 | d_2 | ... , d_i > 1.
///
/// Groups built from a presentation remember how the original generators
/// map into these coordinates and how coordinates lift back, so callers
/// can carry linear functionals (like divisor degree) across.
class AbelianGroup {
public:
    AbelianGroup() = default;

    static AbelianGroup from_invariants(std::vector<long long> inv, int rank);
    static AbelianGroup from_presentation(int n_gens, const IntMat& relations);
    static AbelianGroup from_presentation(int n_gens,
                                          const std::vector<std::vector<long long>>& relations);

    int rank() const { return rank_; }
    const std::vector<long long>& invariants() const { return inv_; }
    int coords() const { return int(inv_.size()) + rank_; }
    int torsion_coords() const { return int(inv_.size()); }
    bool is_finite() const { return rank_ == 0; }
    long long torsion_order() const;

    /// Image of presentation generator j (only for presentation-built groups).
    const GroupElement& gen_image(int j) const { return gen_images_[size_t(j)]; }
    int n_gens() const { return int(gen_images_.size()); }

    /// A representative of the element in the original generator coordinates.
    std::vector<long long> representative(const GroupElement& e) const;

    GroupElement zero() const;
    GroupElement reduce(GroupElement e) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, long long n) const;
    GroupElement from_coords(std::vector<long long> c) const { return reduce({std::move(c)}); }

    /// Least n >= 1 with n*e = 0; nullopt when e has infinite order.
    std::optional<long long> element_order(const GroupElement& e) const;

    /// Subgroups are integer lattices between the relation lattice and Z^coords.
    struct Subgroup {
        IntMat basis;  // canonical row HNF, always contains the relation lattice
        bool operator==(const Subgroup& o) const { return basis == o.basis; }
    };

    Subgroup trivial_subgroup() const;
    Subgroup full_subgroup() const;
    Subgroup subgroup(const std::vector<GroupElement>& gens) const;
    Subgroup join(const Subgroup& a, const std::vector<GroupElement>& more) const;
    bool contains(const Subgroup& s, const GroupElement& e) const;
    /// [G : s]; 0 when infinite.
    Int subgroup_index(const Subgroup& s) const;
    /// |s| for finite subgroups (throws if s meets the free part).
    long long subgroup_order(const Subgroup& s) const;
    std::vector<GroupElement> subgroup_gens(const Subgroup& s) const;

    /// All subgroups of index exactly d (finite groups only), canonical order.
    std::vector<Subgroup> subgroups_of_index(long long d) const;
    /// All subgroups of index d that contain `floor` (any G of finite or
    /// infinite rank, provided G/floor is finite).
    std::vector<Subgroup> subgroups_of_index_above(const Subgroup& floor, long long d) const;

    /// G/s together with the projection of each coordinate of G.
    struct Quotient;
    Quotient quotient_by(const Subgroup& s) const;

    /// Additive character G -> Q/Z given by rational values on coordinates.
    struct Character {
        std::vector<Rat> rho;
        long long order = 1;
        Rat eval(const GroupElement& e) const;  // value mod 1
        bool trivial_on(const GroupElement& e) const;
    };
    /// The [G:H] characters of G vanishing on H (G/H must be finite).
    std::vector<Character> characters_trivial_on(const Subgroup& h) const;

    /// "Z/d1 + Z/d2 + Z + ..." display form.
    std::string str() const;

private:
    std::vector<long long> inv_;
    int rank_ = 0;
    std::vector<GroupElement> gen_images_;
    std::vector<std::vector<long long>> repr_;  // coords() rows of original coordinates

    IntMat relation_lattice() const;  // diag(inv_) on torsion coords
};

struct AbelianGroup::Quotient {
    AbelianGroup group;
    std::vector<GroupElement> coord_images;  // image of e_i of the source group
    GroupElement project(const GroupElement& e) const;
};

}  // namespace ffcf

#endif
