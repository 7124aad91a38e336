#include "ffcf/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ffcf {

Poly Poly::monomial(GF k, fq_t c, int e) {
    Poly r(k);
    if (c != 0) {
        r.c_.assign(size_t(e) + 1, 0);
        r.c_[size_t(e)] = c;
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(k_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k_.add(coeff(int(i)), o.coeff(int(i)));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = k_.neg(c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(k_);
    Poly r(k_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = k_.add(r.c_[i + j], k_.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator*(fq_t s) const {
    Poly r(*this);
    for (auto& c : r.c_) c = k_.mul(c, s);
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly q(k_), r(*this);
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(size_t(r.degree() - d.degree()) + 1, 0);
    fq_t dinv = k_.inv(d.lc());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        fq_t c = k_.mul(r.lc(), dinv);
        q.c_[size_t(shift)] = c;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[size_t(i + shift)] = k_.sub(r.c_[size_t(i + shift)], k_.mul(c, d.c_[size_t(i)]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * k_.inv(lc());
}

Poly Poly::derivative() const {
    Poly r(k_);
    if (degree() < 1) return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = k_.mul(c_[i], k_.from_int(static_cast<long long>(i)));
    r.trim();
    return r;
}

fq_t Poly::eval(fq_t at) const {
    fq_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = k_.add(k_.mul(r, at), c_[i]);
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::one(k_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::reverse(int n) const {
    if (degree() > n) throw std::invalid_argument("Poly::reverse: n < degree");
    Poly r(k_);
    r.c_.assign(size_t(n) + 1, 0);
    for (int i = 0; i <= n; ++i) r.c_[size_t(n - i)] = coeff(i);
    r.trim();
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r(k_);
    for (size_t i = c_.size(); i-- > 0;) r = r * inner + Poly::constant(k_, c_[i]);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

unsigned long long Poly::encode() const {
    unsigned long long code = 0, base = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        code += base * c_[i];
        base *= (unsigned long long)(k_.q());
    }
    return code;
}

Poly Poly::decode(GF k, unsigned long long code) {
    Poly r(k);
    while (code) {
        r.c_.push_back(fq_t(code % (unsigned long long)k.q()));
        code /= (unsigned long long)k.q();
    }
    return r;
}

static std::string coeff_str(const GF& k, fq_t c) {
    if (k.q() != 4) return std::to_string(int(c));
    switch (c) {
        case 2: return "a";
        case 3: return "a^2";
        default: return std::to_string(int(c));
    }
}

std::string Poly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        fq_t c = coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeff_str(k_, c);
        } else {
            if (c != 1) os << coeff_str(k_, c) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly invmod(const Poly& a, const Poly& mod) {
    // extended euclid on (a mod m, m)
    GF k = a.field();
    Poly r0 = a % mod, r1 = mod;
    Poly s0 = Poly::one(k), s1 = Poly::zero(k);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0.degree() != 0) throw std::domain_error("invmod: not invertible");
    return (s0 * k.inv(r0.lc())) % mod;
}

Poly powmod(const Poly& base, unsigned long long e, const Poly& mod) {
    Poly r = Poly::one(base.field()) % mod, b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    GF k = f.field();
    unsigned long long q = (unsigned long long)k.q();
    // x^(q^d) == x mod f, and gcd(x^(q^(d/l)) - x, f) = 1 for prime l | d
    Poly x = Poly::x(k);
    Poly xp = x % f;
    std::vector<Poly> frob;  // frob[i] = x^(q^i) mod f
    frob.push_back(xp);
    for (int i = 1; i <= d; ++i) {
        Poly next = powmod(frob.back(), q, f);
        frob.push_back(next);
    }
    if (frob[size_t(d)] != xp) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) { prime = false; break; }
        if (!prime) continue;
        Poly g = gcd(frob[size_t(d / l)] - xp, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<Poly> monic_irreducibles_of_degree(GF k, int deg) {
    std::vector<Poly> out;
    unsigned long long q = (unsigned long long)k.q();
    unsigned long long lo = 1, n = 1;
    for (int i = 0; i < deg; ++i) { lo *= q; }
    n = lo;  // q^deg monic candidates: code in [q^deg, 2*q^deg) with lc=1
    for (unsigned long long c = 0; c < n; ++c) {
        Poly f = Poly::decode(k, lo + c);
        if (is_irreducible(f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Poly>& monic_irreducibles(GF k, int max_deg) {
    static std::mutex mu;
    static std::map<int, std::pair<int, std::vector<Poly>>> cache;  // q -> (deg, list)
    std::lock_guard<std::mutex> lock(mu);
    auto& entry = cache.emplace(k.q(), std::make_pair(0, std::vector<Poly>{})).first->second;
    while (entry.first < max_deg) {
        int d = entry.first + 1;
        auto more = monic_irreducibles_of_degree(k, d);
        entry.second.insert(entry.second.end(), more.begin(), more.end());
        entry.first = d;
    }
    // trim the view to max_deg
    static thread_local std::map<std::pair<int, int>, std::vector<Poly>> views;
    auto key = std::make_pair(k.q(), max_deg);
    auto it = views.find(key);
    if (it == views.end()) {
        std::vector<Poly> v;
        for (const auto& f : entry.second)
            if (f.degree() <= max_deg) v.push_back(f);
        it = views.emplace(key, std::move(v)).first;
    }
    return it->second;
}

Factorization factorize(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factorize: zero polynomial");
    Factorization out;
    out.unit = f.lc();
    Poly rem = f.monic();
    GF k = f.field();
    unsigned long long q = (unsigned long long)k.q();
    int d = 1;
    while (rem.degree() > 0) {
        if (d > rem.degree()) throw std::logic_error("factorize: ran past degree");
        if (2 * d > rem.degree()) {
            // remainder itself irreducible
            out.factors.emplace_back(rem, 1);
            break;
        }
        // product of factors of degree d: gcd(x^(q^d) - x, rem)
        Poly x = Poly::x(k);
        Poly frob = x % rem;
        for (int i = 0; i < d; ++i) frob = powmod(frob, q, rem);
        Poly block = gcd(frob - x % rem, rem);
        if (block.degree() > 0) {
            double candidates = 1;
            for (int i = 0; i < d; ++i) candidates *= double(q);
            if (candidates > double(1 << 22))
                throw std::domain_error("factorize: irreducible factor degree too large");
            for (const auto& p : monic_irreducibles_of_degree(k, d)) {
                if (block.degree() < d) break;
                if ((block % p).is_zero()) {
                    int mult = 0;
                    while ((rem % p).is_zero()) {
                        rem = rem / p;
                        ++mult;
                    }
                    block = block / p;
                    out.factors.emplace_back(p, mult);
                }
            }
        }
        ++d;
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace ffcf
