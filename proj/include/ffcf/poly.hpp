#ifndef FFCF_POLY_HPP
#define FFCF_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffcf/gf.hpp"

namespace ffcf {

/// Univariate polynomial over one of the small fields, coefficients stored
/// in ascending degree with no trailing zeros.  degree() of the zero
/// polynomial is -1.
class Poly {
public:
    Poly() : k_(GF()) {}
    explicit Poly(GF k) : k_(k) {}
    Poly(GF k, std::vector<fq_t> coeffs) : k_(k), c_(std::move(coeffs)) { trim(); }

    static Poly zero(GF k) { return Poly(k); }
    static Poly one(GF k) { return constant(k, 1); }
    static Poly constant(GF k, fq_t c) {
        Poly r(k);
        if (c != 0) r.c_ = {c};
        return r;
    }
    static Poly x(GF k) { return Poly(k, {0, 1}); }
    /// c * x^e
    static Poly monomial(GF k, fq_t c, int e);

    const GF& field() const { return k_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    fq_t coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : fq_t(0); }
    fq_t lc() const { return c_.empty() ? fq_t(0) : c_.back(); }
    const std::vector<fq_t>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(fq_t s) const;
    bool operator==(const Poly& o) const { return q() == o.q() && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// (quotient, remainder) with divisor != 0.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const;
    Poly derivative() const;
    fq_t eval(fq_t at) const;
    Poly pow(int e) const;

    /// x^n * p(1/x); requires n >= degree().
    Poly reverse(int n) const;

    /// Substitute another polynomial for x.
    Poly compose(const Poly& inner) const;

    /// Total ordering: by degree then by coefficient encoding; used for
    /// deterministic enumeration everywhere.
    bool operator<(const Poly& o) const;

    /// Integer encoding sum c_i q^i (and its inverse) for enumeration.
    unsigned long long encode() const;
    static Poly decode(GF k, unsigned long long code);

    std::string str(char var = 'x') const;

private:
    int q() const { return k_.q(); }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    GF k_;
    std::vector<fq_t> c_;
};

Poly gcd(const Poly& a, const Poly& b);
/// g = gcd, plus s with s*a = g mod b (enough for modular inverses).
Poly invmod(const Poly& a, const Poly& mod);
Poly powmod(const Poly& base, unsigned long long e, const Poly& mod);

bool is_irreducible(const Poly& f);

/// All monic irreducibles of degree 1..max_deg in (degree, encoding) order.
/// Cached per field; thread-safe.
const std::vector<Poly>& monic_irreducibles(GF k, int max_deg);
std::vector<Poly> monic_irreducibles_of_degree(GF k, int deg);

/// Complete factorization into monic irreducibles with multiplicities,
/// deterministic order, plus the leading unit.  Intended for the small
/// degrees that arise from norms of functions.
struct Factorization {
    fq_t unit;
    std::vector<std::pair<Poly, int>> factors;
};
Factorization factorize(const Poly& f);

}  // namespace ffcf

#endif
