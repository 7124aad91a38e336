#include "ffcf/curve.hpp"

#include <algorithm>

namespace ffcf {

namespace {

// model of the same field with the charts swapped; no validation
Curve swapped_charts(const Curve& c) {
    Curve o;
    o.k = c.k;
    o.h = c.hstar;
    o.f = c.fstar;
    o.genus = c.genus;
    o.hstar = c.h;
    o.fstar = c.f;
    return o;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

long long count_points(const Curve& c, int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("count_points: need 1 <= i <= 4");
    if (c.rational_model()) return ipow(c.q(), i) + 1;
    auto mods = monic_irreducibles_of_degree(c.k, i);
    ResidueField F(c.k, mods.front());
    long long n = 0;
    for (long long xi = 0; xi < F.order(); ++xi) {
        auto x = F.element(xi);
        auto hb = F.eval_poly(c.h, x);
        auto fb = F.eval_poly(c.f, x);
        n += (long long)F.quadratic_roots(hb, fb).size();
    }
    // points at infinity: u = 0 on the second chart
    auto h0 = F.from_base(c.hstar.coeff(0));
    auto f0 = F.from_base(c.fstar.coeff(0));
    n += (long long)F.quadratic_roots(h0, f0).size();
    return n;
}

std::vector<long long> zeta_numerator(int q, int genus, const std::vector<long long>& counts) {
    if (genus == 0) return {1};
    if (int(counts.size()) < genus) throw std::invalid_argument("zeta: not enough point counts");
    // Weil interval check, exact integer arithmetic
    for (size_t i = 0; i < counts.size(); ++i) {
        long long qi = ipow(q, int(i) + 1);
        long long s = counts[i] - qi - 1;
        if (s * s > 4LL * genus * genus * qi)
            throw math_error("WeilBoundViolation: point count outside Weil interval");
    }
    std::vector<long long> L;
    long long s1 = counts[0] - q - 1;
    if (genus == 1) {
        L = {1, s1, q};
    } else if (genus == 2) {
        long long s2 = counts[1] - (long long)q * q - 1;
        if ((s1 * s1 + s2) % 2 != 0)
            throw math_error("zeta: non-integral coefficient (inconsistent counts)");
        L = {1, s1, (s1 * s1 + s2) / 2, q * s1, (long long)q * q};
    } else {
        throw std::invalid_argument("zeta: genus must be <= 2");
    }
    long long h = 0;
    for (long long c : L) h += c;
    if (h < 1) throw math_error("zeta: class number must be positive");
    return L;
}

namespace {

// N_i predicted by L through Newton's identities
long long predicted_count(int q, const std::vector<long long>& L, int i) {
    int deg = int(L.size()) - 1;
    std::vector<long long> e(size_t(deg) + 1, 0);
    for (int k2 = 0; k2 <= deg; ++k2) e[size_t(k2)] = (k2 % 2 ? -L[size_t(k2)] : L[size_t(k2)]);
    std::vector<long long> p(size_t(i) + 1, 0);
    for (int m = 1; m <= i; ++m) {
        long long s = 0;
        for (int j = 1; j < m; ++j)
            if (j <= deg) s += (j % 2 ? e[size_t(j)] : -e[size_t(j)]) * p[size_t(m - j)];
        if (m <= deg) s += (m % 2 ? 1 : -1) * (long long)m * e[size_t(m)];
        p[size_t(m)] = s;
    }
    return ipow(q, i) + 1 - p[size_t(i)];
}

}  // namespace

Curve validate_curve(GF k, const Poly& h, const Poly& f, int genus) {
    Curve c;
    c.k = k;
    c.h = h;
    c.f = f;
    c.genus = genus;

    if (genus == 0) {
        if (!h.is_zero() || !f.is_zero())
            throw model_error("DegreeMismatch: genus 0 carries the rational field only");
        c.hstar = h;
        c.fstar = f;
        for (int i = 1; i <= 4; ++i) c.point_counts.push_back(ipow(k.q(), i) + 1);
        c.l_coeffs = {1};
        c.class_number = 1;
        return c;
    }
    if (genus != 1 && genus != 2)
        throw model_error("DegreeMismatch: genus must be 0, 1 or 2");
    if (f.degree() > 2 * genus + 2 || h.degree() > genus + 1)
        throw model_error("DegreeMismatch: degree bounds exceeded for stated genus");
    if (std::max(2 * h.degree(), f.degree()) < 2 * genus + 1)
        throw model_error("DegreeMismatch: degrees too small for stated genus");

    c.hstar = h.reverse(genus + 1);
    c.fstar = f.reverse(2 * genus + 2);

    if (k.p() == 2) {
        if (h.is_zero())
            throw model_error("SingularModel: even characteristic requires h != 0");
        auto smooth = [&](const Poly& H, const Poly& F) {
            Poly crit = H.derivative() * H.derivative() * F + F.derivative() * F.derivative();
            return gcd(H, crit).degree() == 0;
        };
        if (!smooth(h, f)) throw model_error("SingularModel: affine chart singular");
        if (!smooth(c.hstar, c.fstar)) throw model_error("SingularModel: infinite chart singular");
    } else {
        if (!h.is_zero())
            throw model_error("DegreeMismatch: odd characteristic uses h = 0");
        if (f.degree() != 2 * genus + 1 && f.degree() != 2 * genus + 2)
            throw model_error("DegreeMismatch: deg f must be 2g+1 or 2g+2 in odd characteristic");
        if (gcd(f, f.derivative()).degree() != 0)
            throw model_error("SingularModel: f not squarefree");
        if (gcd(c.fstar, c.fstar.derivative()).degree() != 0)
            throw model_error("SingularModel: infinite chart singular");
    }

    for (int i = 1; i <= 4; ++i) c.point_counts.push_back(count_points(c, i));
    c.l_coeffs = zeta_numerator(k.q(), genus, c.point_counts);
    for (int i = genus + 1; i <= 4; ++i)
        if (predicted_count(k.q(), c.l_coeffs, i) != c.point_counts[size_t(i - 1)])
            throw model_error("SingularModel: point counts inconsistent with stated genus");
    c.class_number = 0;
    for (long long v : c.l_coeffs) c.class_number += v;
    return c;
}

std::vector<long long> Place::key() const {
    std::vector<long long> out;
    out.push_back(infinite ? 1 : 0);
    out.push_back(degree);
    out.push_back((long long)p.encode());
    out.push_back((long long)fiber);
    out.push_back((long long)root.encode());
    return out;
}

FiberData fiber_over(const Curve& c, const Poly& p, bool infinite) {
    if (c.rational_model()) return FiberData{Place::Fiber::Base, {}};
    const Poly& H = infinite ? c.hstar : c.h;
    const Poly& F = infinite ? c.fstar : c.f;
    ResidueField kp(c.k, p);
    auto roots = kp.quadratic_roots(kp.reduce(H), kp.reduce(F));
    if (roots.size() == 2) return FiberData{Place::Fiber::Split, roots};
    if (roots.size() == 1) return FiberData{Place::Fiber::Ramified, roots};
    return FiberData{Place::Fiber::Inert, {}};
}

std::vector<Place> places_over(const Curve& c, const Poly& p, bool infinite) {
    std::vector<Place> out;
    int d = p.degree();
    if (c.rational_model()) {
        Place pl;
        pl.infinite = infinite;
        pl.p = p;
        pl.fiber = Place::Fiber::Base;
        pl.root = Poly::zero(c.k);
        pl.degree = d;
        out.push_back(pl);
        return out;
    }
    auto fd = fiber_over(c, p, infinite);
    if (fd.kind == Place::Fiber::Inert) {
        Place pl;
        pl.infinite = infinite;
        pl.p = p;
        pl.fiber = Place::Fiber::Inert;
        pl.root = Poly::zero(c.k);
        pl.degree = 2 * d;
        out.push_back(pl);
    } else {
        for (const auto& r : fd.roots) {
            Place pl;
            pl.infinite = infinite;
            pl.p = p;
            pl.fiber = fd.kind;
            pl.root = r;
            pl.degree = d;
            out.push_back(pl);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> infinite_places(const Curve& c) {
    return places_over(c, Poly::x(c.k), true);
}

std::vector<Place> places_of_degree(const Curve& c, int r) {
    std::vector<Place> out;
    for (const auto& p : monic_irreducibles_of_degree(c.k, r))
        for (auto& pl : places_over(c, p, false))
            if (pl.degree == r) out.push_back(pl);
    if (!c.rational_model() && r % 2 == 0)
        for (const auto& p : monic_irreducibles_of_degree(c.k, r / 2))
            for (auto& pl : places_over(c, p, false))
                if (pl.degree == r) out.push_back(pl);
    if (r <= 2)
        for (auto& pl : infinite_places(c))
            if (pl.degree == r) out.push_back(pl);
    std::sort(out.begin(), out.end());
    return out;
}

ResidueData residue_data(const Curve& c, const Place& pl) {
    GF k = c.k;
    const Curve chart = pl.infinite ? swapped_charts(c) : c;
    Poly p = pl.infinite ? Poly::x(k) : pl.p;
    if (pl.fiber == Place::Fiber::Inert) {
        auto mods = monic_irreducibles_of_degree(k, 2 * p.degree());
        ResidueField F(k, mods.front());
        auto xb = F.root_of(p);
        if (!xb) throw std::logic_error("residue_data: no root of p in quadratic extension");
        auto roots = F.quadratic_roots(F.eval_poly(chart.h, *xb), F.eval_poly(chart.f, *xb));
        if (roots.size() != 2)
            throw std::logic_error("residue_data: inert fiber must split in the extension");
        return ResidueData{F, *xb, roots.front()};
    }
    ResidueField F(k, p);
    return ResidueData{F, F.reduce(Poly::x(k)), F.reduce(pl.root)};
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& [p, n] : t) d += n * p.degree;
    return d;
}

bool Divisor::effective() const {
    for (const auto& [p, n] : t)
        if (n < 0) return false;
    return true;
}

void Divisor::add(const Place& p, long long n) {
    if (n == 0) return;
    auto it = t.find(p);
    if (it == t.end()) {
        t.emplace(p, n);
    } else {
        it->second += n;
        if (it->second == 0) t.erase(it);
    }
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, n] : o.t) r.add(p, n);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, n] : o.t) r.add(p, -n);
    return r;
}

Divisor Divisor::operator*(long long n) const {
    Divisor r;
    if (n != 0)
        for (const auto& [p, m] : t) r.t.emplace(p, m * n);
    return r;
}

bool Divisor::operator<(const Divisor& o) const {
    return std::lexicographical_compare(
        t.begin(), t.end(), o.t.begin(), o.t.end(), [](const auto& a, const auto& b) {
            if (a.first < b.first) return true;
            if (b.first < a.first) return false;
            return a.second < b.second;
        });
}

Poly function_norm(const Curve& c, const Poly& a, const Poly& b) {
    return a * a - a * b * c.h - b * b * c.f;
}

namespace {

int multiplicity(const Poly& f, const Poly& p) {
    int m = 0;
    Poly r = f;
    while (!r.is_zero()) {
        auto [q, rem] = r.divmod(p);
        if (!rem.is_zero()) break;
        r = q;
        ++m;
    }
    return m;
}

// Hensel lift of a split y-root into k[x]/p^K
Poly lift_root(const Curve& c, const Poly& p, const Poly& root, int K) {
    Poly pK = p.pow(K);
    Poly r = root;
    int iters = 1;
    while ((1 << iters) < K + 1) ++iters;
    ++iters;
    for (int i = 0; i < iters; ++i) {
        Poly val = (r * r + c.h * r - c.f) % pK;
        Poly der = (r + r + c.h) % pK;
        r = (r - val * invmod(der, pK)) % pK;
    }
    if (!((r * r + c.h * r - c.f) % pK).is_zero())
        throw std::logic_error("lift_root: Hensel iteration failed");
    return r;
}

long long finite_valuation(const Curve& c, const Place& pl, const Poly& a, const Poly& b) {
    if (pl.fiber == Place::Fiber::Base) return multiplicity(a, pl.p);
    Poly nm = function_norm(c, a, b);
    if (nm.is_zero()) throw std::invalid_argument("place_valuation: zero function");
    int m = multiplicity(nm, pl.p);
    switch (pl.fiber) {
        case Place::Fiber::Inert:
            if (m % 2)
                throw std::logic_error("finite_valuation: odd norm multiplicity at inert place");
            return m / 2;
        case Place::Fiber::Ramified:
            return m;
        default: {  // Split
            if (m == 0) return 0;
            if (b.is_zero()) return multiplicity(a, pl.p);
            int K = m + 1;
            Poly r = lift_root(c, pl.p, pl.root, K);
            Poly w = (a + b * r) % pl.p.pow(K);
            if (w.is_zero())
                throw std::logic_error("finite_valuation: branch valuation exceeds norm bound");
            return multiplicity(w, pl.p);
        }
    }
}

}  // namespace

long long place_valuation(const Curve& c, const Place& pl, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("place_valuation: zero function");
    if (c.rational_model()) {
        if (!b.is_zero()) throw std::invalid_argument("place_valuation: rational field has no y");
        if (!pl.infinite) return multiplicity(a, pl.p);
        return -a.degree();
    }
    if (!pl.infinite) return finite_valuation(c, pl, a, b);
    // rewrite in the second chart: z = u^{-M} (A(u) + B(u) w)
    int g = c.genus;
    int M = std::max(a.degree(), b.degree() + g + 1);
    Poly A = a.is_zero() ? a : a.reverse(M);
    Poly B = b.is_zero() ? b : b.reverse(M - (g + 1));
    Curve c2 = swapped_charts(c);
    Place fin = pl;
    fin.infinite = false;
    fin.p = Poly::x(c.k);
    long long e = (pl.fiber == Place::Fiber::Ramified) ? 2 : 1;
    return finite_valuation(c2, fin, A, B) - (long long)M * e;
}

Divisor function_divisor(const Curve& c, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("function_divisor: zero function");
    Divisor d;
    if (c.rational_model()) {
        if (!b.is_zero()) throw std::invalid_argument("function_divisor: rational field has no y");
        if (a.degree() == 0) return d;
        for (auto& [p, m] : factorize(a).factors)
            for (auto& pl : places_over(c, p, false)) d.add(pl, m);
        for (auto& pl : infinite_places(c)) d.add(pl, -a.degree());
        return d;
    }
    Poly nm = function_norm(c, a, b);
    if (nm.is_zero()) throw std::invalid_argument("function_divisor: zero function");
    if (nm.degree() > 0) {
        for (auto& [p, mult] : factorize(nm).factors) {
            (void)mult;
            for (auto& pl : places_over(c, p, false)) {
                long long v = place_valuation(c, pl, a, b);
                if (v != 0) d.add(pl, v);
            }
        }
    }
    for (auto& pl : infinite_places(c)) {
        long long v = place_valuation(c, pl, a, b);
        if (v != 0) d.add(pl, v);
    }
    if (d.degree() != 0) throw std::logic_error("function_divisor: nonzero total degree");
    return d;
}

}  // namespace ffcf
