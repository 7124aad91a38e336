#include "ffcf/residue_field.hpp"

#include <stdexcept>

namespace ffcf {

ResidueField::ResidueField(GF base, Poly modulus) : k_(base), m_(std::move(modulus)) {
    if (m_.degree() < 1 || m_.lc() != 1)
        throw std::invalid_argument("ResidueField: modulus must be monic of degree >= 1");
    order_ = 1;
    for (int i = 0; i < m_.degree(); ++i) order_ *= k_.q();
}

ResidueField::Elem ResidueField::pow(const Elem& a, long long e) const {
    Elem b = a;
    if (e < 0) { b = inv(a); e = -e; }
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ResidueField::Elem ResidueField::eval_poly(const Poly& f, const Elem& at) const {
    Elem r = zero();
    for (int i = f.degree(); i >= 0; --i)
        r = add(mul(r, at), from_base(f.coeff(i)));
    return r;
}

std::vector<ResidueField::Elem> ResidueField::quadratic_roots(const Elem& B, const Elem& C) const {
    std::vector<Elem> roots;
    for (long long i = 0; i < order_; ++i) {
        Elem y = element(i);
        Elem v = sub(add(mul(y, y), mul(B, y)), C);
        if (v.is_zero()) roots.push_back(y);
        if (roots.size() == 2) break;
    }
    return roots;
}

std::optional<ResidueField::Elem> ResidueField::root_of(const Poly& p) const {
    for (long long i = 0; i < order_; ++i) {
        Elem e = element(i);
        if (eval_poly(p, e).is_zero()) return e;
    }
    return std::nullopt;
}

ResidueField::Elem ResidueField::primitive_element() const {
    long long n = order_ - 1;
    std::vector<long long> prime_factors;
    long long m = n;
    for (long long d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
            m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long long i = 2; i < order_; ++i) {
        Elem g = element(i);
        bool ok = true;
        for (long long pf : prime_factors)
            if (pow(g, n / pf).is_one()) { ok = false; break; }
        if (ok) return g;
    }
    if (n == 1) return one();
    throw std::logic_error("ResidueField: no primitive element found");
}

ResidueField::Elem ResidueField::frobenius_inverse(const Elem& a, int v) const {
    if (a.is_zero() || v == 0) return a;
    long long e = 1;
    long long pv = 1;
    for (int i = 0; i < v; ++i) pv *= k_.p();
    e = order_ / pv;  // a^(q^d / p^v) raised to p^v gives a^(q^d) = a
    return pow(a, e);
}

}  // namespace ffcf
