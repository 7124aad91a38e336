#ifndef FFCF_LOCALIZATION_HPP
#define FFCF_LOCALIZATION_HPP

#include <vector>

#include "ffcf/curve.hpp"

namespace ffcf {

/// Truncated expansion of the curve's coordinate functions at a place, in a
/// uniformizer t with coefficients in the residue field.  At infinite places
/// the expanded functions are the second-chart coordinates u = 1/x and
/// w = y/x^(g+1); the stored series always satisfy the chart's equation to
/// the full working precision (requested precision plus two guard digits).
struct LocalExpansion {
    Place place;
    int precision = 0;  // requested
    int length = 0;     // precision + guard
    ResidueField field;
    std::vector<Poly> xs, ys;  // series coefficients, field elements
};

LocalExpansion expand_at(const Curve& c, const Place& pl, int n);

/// Class of a(x) + b(x) y in (O_P/P^n)^*; throws NotAUnit when v_P != 0.
/// The result is a truncated series of length n over the residue field.
std::vector<Poly> evaluate_unit(const Curve& c, const Place& pl, const Poly& a, const Poly& b,
                                int n);

/// Valuation v = v_P(a + b y) together with the unit part (a + b y) t^-v
/// in (O_P/P^n)^*, for the canonical uniformizer t of the expansion.
std::pair<long long, std::vector<Poly>> shifted_unit(const Curve& c, const Place& pl,
                                                     const Poly& a, const Poly& b, int n);

/// Same, reusing a pre-computed expansion (must be long enough; throws
/// std::length_error when it is not, so callers can re-expand).
std::pair<long long, std::vector<Poly>> shifted_unit_with(const Curve& c, const LocalExpansion& ex,
                                                          const Poly& a, const Poly& b, int n);

/// (O_P/P^n)^* presented on independent cyclic generators: one generator of
/// the residue field units plus principal units 1 + c t^j for j coprime to
/// the characteristic, with exact discrete logarithms.
class UnitGroup {
public:
    UnitGroup(const Curve& c, const Place& pl, int n);

    struct Gen {
        std::vector<Poly> u;  // ring element
        long long order;
        int level;  // 0 for the residue generator, else j
    };

    const Place& place() const { return place_; }
    int modulus_exponent() const { return n_; }
    const ResidueField& field() const { return F_; }
    const std::vector<Gen>& gens() const { return gens_; }
    long long order() const { return order_; }

    /// Invariant factors d_1 | d_2 | ... of the abstract group.
    std::vector<long long> invariant_factors() const;

    /// Coordinates of a unit over gens(); exact, deterministic.
    std::vector<long long> dlog(const std::vector<Poly>& u) const;

    /// Generators of the subgroup {u : u = 1 mod t^m};  m = 0 gives the
    /// whole group, m = n the trivial one.
    std::vector<std::vector<Poly>> level_generators(int m) const;

    // ring arithmetic in k_P[t]/t^n
    std::vector<Poly> one() const;
    std::vector<Poly> constant(fq_t c) const;
    std::vector<Poly> mul(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
    std::vector<Poly> pow(std::vector<Poly> a, long long e) const;
    std::vector<Poly> inv(const std::vector<Poly>& a) const;

private:
    Place place_;
    int n_;
    ResidueField F_;
    std::vector<Gen> gens_;
    long long order_;
    std::vector<long long> residue_log_;  // index of element -> log base gamma
};

}  // namespace ffcf

#endif
