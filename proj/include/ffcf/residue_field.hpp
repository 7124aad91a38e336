#ifndef FFCF_RESIDUE_FIELD_HPP
#define FFCF_RESIDUE_FIELD_HPP

#include <optional>
#include <vector>

#include "ffcf/poly.hpp"

namespace ffcf {

/// F_q[x]/(m) for a monic irreducible m: the residue field of a place.
/// Elements are Polys of degree < deg m over the base field.
class ResidueField {
public:
    using Elem = Poly;

    ResidueField() : ResidueField(GF(), Poly::x(GF())) {}
    ResidueField(GF base, Poly modulus);

    const GF& base() const { return k_; }
    const Poly& modulus() const { return m_; }
    int degree() const { return m_.degree(); }
    long long order() const { return order_; }

    Elem zero() const { return Poly::zero(k_); }
    Elem one() const { return Poly::one(k_); }
    Elem from_base(fq_t c) const { return Poly::constant(k_, c); }
    Elem reduce(const Poly& f) const { return f % m_; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % m_; }
    Elem inv(const Elem& a) const { return invmod(a, m_); }
    Elem pow(const Elem& a, long long e) const;

    /// Enumeration in encoding order: element(i) for i in [0, order).
    Elem element(long long index) const { return Poly::decode(k_, (unsigned long long)index); }
    long long index_of(const Elem& a) const { return (long long)a.encode(); }

    /// Evaluate a base-field polynomial at an element of this field.
    Elem eval_poly(const Poly& f, const Elem& at) const;

    /// Roots of y^2 + B y - C in this field (0, 1 or 2 of them), sorted.
    std::vector<Elem> quadratic_roots(const Elem& B, const Elem& C) const;

    /// A root of a base-field polynomial p in this field, if any (smallest).
    std::optional<Elem> root_of(const Poly& p) const;

    /// Smallest element generating the multiplicative group.
    Elem primitive_element() const;

    /// y with y^(p^v) = a (Frobenius is bijective).
    Elem frobenius_inverse(const Elem& a, int v) const;

private:
    GF k_;
    Poly m_;
    long long order_;
};

}  // namespace ffcf

#endif
