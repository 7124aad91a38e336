#include "ffcf/localization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ffcf {

namespace {

using Ser = std::vector<Poly>;  // truncated series over a residue field

Ser ser_zero(const ResidueField& F, int n) { return Ser(size_t(n), F.zero()); }

Ser ser_const(const ResidueField& F, const Poly& c, int n) {
    Ser s = ser_zero(F, n);
    if (n > 0) s[0] = c;
    return s;
}

Ser ser_add(const ResidueField& F, const Ser& a, const Ser& b) {
    Ser r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Ser ser_sub(const ResidueField& F, const Ser& a, const Ser& b) {
    Ser r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

Ser ser_mul(const ResidueField& F, const Ser& a, const Ser& b) {
    int n = int(a.size());
    Ser r = ser_zero(F, n);
    for (int i = 0; i < n; ++i) {
        if (a[size_t(i)].is_zero()) continue;
        for (int j = 0; j + i < n; ++j) {
            if (b[size_t(j)].is_zero()) continue;
            r[size_t(i + j)] = F.add(r[size_t(i + j)], F.mul(a[size_t(i)], b[size_t(j)]));
        }
    }
    return r;
}

Ser ser_inv(const ResidueField& F, const Ser& a) {
    int n = int(a.size());
    if (n == 0 || a[0].is_zero()) throw math_error("series inverse of a non-unit");
    Ser r = ser_zero(F, n);
    Poly c0 = F.inv(a[0]);
    r[0] = c0;
    for (int k = 1; k < n; ++k) {
        Poly s = F.zero();
        for (int i = 1; i <= k; ++i) s = F.add(s, F.mul(a[size_t(i)], r[size_t(k - i)]));
        r[size_t(k)] = F.neg(F.mul(c0, s));
    }
    return r;
}

// evaluate a base-coefficient polynomial at a series
Ser ser_eval_poly(const ResidueField& F, const Poly& f, const Ser& x) {
    int n = int(x.size());
    Ser r = ser_zero(F, n);
    for (int i = f.degree(); i >= 0; --i) {
        r = ser_mul(F, r, x);
        r[0] = F.add(r[0], F.from_base(f.coeff(i)));
    }
    return r;
}

Ser ser_t(const ResidueField& F, int n) {
    Ser s = ser_zero(F, n);
    if (n > 1) s[1] = F.one();
    return s;
}

bool ser_is_zero(const Ser& a) {
    for (auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

Curve swapped_charts_local(const Curve& c) {
    Curve o;
    o.k = c.k;
    o.h = c.hstar;
    o.f = c.fstar;
    o.genus = c.genus;
    o.hstar = c.h;
    o.fstar = c.f;
    return o;
}

int newton_rounds(int n) {
    int r = 1;
    while ((1 << r) < n + 1) ++r;
    return r + 1;
}

}  // namespace

LocalExpansion expand_at(const Curve& c, const Place& pl, int n) {
    if (n < 1) throw std::invalid_argument("expand_at: n >= 1 required");
    const int guard = 2;
    int N = n + guard;

    ResidueData rd = residue_data(c, pl);
    Curve chart = pl.infinite ? swapped_charts_local(c) : c;
    Poly p = pl.infinite ? Poly::x(c.k) : pl.p;
    const ResidueField& F = rd.field;

    LocalExpansion ex;
    ex.place = pl;
    ex.precision = n;
    ex.length = N;
    ex.field = F;

    Ser X, Y;
    if (pl.fiber == Place::Fiber::Ramified) {
        // uniformizer t = y - r(x); solve ftilde(X) = t^2 + htilde(X) t
        const Poly& r = pl.root;
        Poly htilde = r + r + chart.h;
        Poly ftilde = chart.f - r * r - chart.h * r;
        Ser t = ser_t(F, N);
        Ser t2 = ser_mul(F, t, t);
        X = ser_const(F, rd.xbar, N);
        for (int it = 0; it < newton_rounds(N); ++it) {
            Ser g = ser_sub(F, ser_sub(F, ser_eval_poly(F, ftilde, X), t2),
                            ser_mul(F, ser_eval_poly(F, htilde, X), t));
            Ser gp = ser_sub(F, ser_eval_poly(F, ftilde.derivative(), X),
                             ser_mul(F, ser_eval_poly(F, htilde.derivative(), X), t));
            X = ser_sub(F, X, ser_mul(F, g, ser_inv(F, gp)));
        }
        Y = ser_add(F, ser_eval_poly(F, r, X), t);
    } else {
        // uniformizer t = p(x); Hensel for p(X) = t, then for the y-root
        Ser t = ser_t(F, N);
        X = ser_const(F, rd.xbar, N);
        for (int it = 0; it < newton_rounds(N); ++it) {
            Ser g = ser_sub(F, ser_eval_poly(F, p, X), t);
            Ser gp = ser_eval_poly(F, p.derivative(), X);
            X = ser_sub(F, X, ser_mul(F, g, ser_inv(F, gp)));
        }
        if (pl.fiber == Place::Fiber::Base) {
            Y = ser_zero(F, N);
        } else {
            Y = ser_const(F, rd.ybar, N);
            for (int it = 0; it < newton_rounds(N); ++it) {
                Ser hx = ser_eval_poly(F, chart.h, X);
                Ser fx = ser_eval_poly(F, chart.f, X);
                Ser g = ser_sub(F, ser_add(F, ser_mul(F, Y, Y), ser_mul(F, hx, Y)), fx);
                Ser gp = ser_add(F, ser_add(F, Y, Y), hx);
                Y = ser_sub(F, Y, ser_mul(F, g, ser_inv(F, gp)));
            }
        }
    }

    // residual check: the series must satisfy the chart equation
    if (pl.fiber != Place::Fiber::Base) {
        Ser res =
            ser_sub(F, ser_add(F, ser_mul(F, Y, Y), ser_mul(F, ser_eval_poly(F, chart.h, X), Y)),
                    ser_eval_poly(F, chart.f, X));
        if (!ser_is_zero(res)) throw std::logic_error("expand_at: residual check failed");
    }
    ex.xs = std::move(X);
    ex.ys = std::move(Y);
    return ex;
}

std::pair<long long, std::vector<Poly>> shifted_unit_with(const Curve& c, const LocalExpansion& ex,
                                                          const Poly& a, const Poly& b, int n) {
    if (a.is_zero() && b.is_zero()) throw math_error("NotAUnit: zero function");
    const Place& pl = ex.place;
    long long v = place_valuation(c, pl, a, b);
    const ResidueField& F = ex.field;
    if (!pl.infinite) {
        int need = n + int(v);
        if (ex.length < need) throw std::length_error("shifted_unit: expansion too short");
        Ser xs(ex.xs.begin(), ex.xs.begin() + need);
        Ser ys(ex.ys.begin(), ex.ys.begin() + need);
        Ser z = ser_add(F, ser_eval_poly(F, a, xs), ser_mul(F, ser_eval_poly(F, b, xs), ys));
        for (long long i = 0; i < v; ++i)
            if (!z[size_t(i)].is_zero()) throw std::logic_error("shifted_unit: bad valuation");
        if (z[size_t(v)].is_zero()) throw std::logic_error("shifted_unit: bad valuation");
        return {v, Ser(z.begin() + v, z.begin() + v + n)};
    }
    // z = u^-M (A(u) + B(u) w); numerator and denominator shifted separately
    int g = c.genus;
    int M = std::max(a.degree(), b.degree() + g + 1);
    if (M < 0) M = 0;
    Poly A = a.is_zero() ? a : a.reverse(M);
    Poly B = b.is_zero() ? b : b.reverse(M - (g + 1));
    long long e = (pl.fiber == Place::Fiber::Ramified) ? 2 : 1;
    long long vnum = v + M * e;  // order of A + B w in t
    int need = n + int(std::max(vnum, e));
    if (ex.length < need) throw std::length_error("shifted_unit: expansion too short");
    Ser xs(ex.xs.begin(), ex.xs.begin() + need);
    Ser ys(ex.ys.begin(), ex.ys.begin() + need);
    Ser num = ser_add(F, ser_eval_poly(F, A, xs), ser_mul(F, ser_eval_poly(F, B, xs), ys));
    for (long long i = 0; i < vnum; ++i)
        if (!num[size_t(i)].is_zero()) throw std::logic_error("shifted_unit: bad chart order");
    if (num[size_t(vnum)].is_zero()) throw std::logic_error("shifted_unit: bad chart order");
    Ser nu(num.begin() + vnum, num.begin() + vnum + n);
    if (M == 0) return {v, nu};
    // denominator u^M: unit part (u / t^e)^M
    Ser du(xs.begin() + e, xs.begin() + e + n);
    if (du[0].is_zero()) throw std::logic_error("shifted_unit: uniformizer order mismatch");
    Ser acc = ser_const(F, F.one(), n);
    Ser base = du;
    long long m = M;
    while (m) {
        if (m & 1) acc = ser_mul(F, acc, base);
        base = ser_mul(F, base, base);
        m >>= 1;
    }
    return {v, ser_mul(F, nu, ser_inv(F, acc))};
}

std::pair<long long, std::vector<Poly>> shifted_unit(const Curve& c, const Place& pl,
                                                     const Poly& a, const Poly& b, int n) {
    if (a.is_zero() && b.is_zero()) throw math_error("NotAUnit: zero function");
    long long v = place_valuation(c, pl, a, b);
    int g = c.genus;
    int M = pl.infinite ? std::max(std::max(a.degree(), b.degree() + g + 1), 0) : 0;
    long long e = (pl.fiber == Place::Fiber::Ramified) ? 2 : 1;
    long long vnum = pl.infinite ? v + M * e : v;
    int need = n + int(std::max(vnum, e)) + 1;
    LocalExpansion ex = expand_at(c, pl, need);
    return shifted_unit_with(c, ex, a, b, n);
}

std::vector<Poly> evaluate_unit(const Curve& c, const Place& pl, const Poly& a, const Poly& b,
                                int n) {
    auto [v, u] = shifted_unit(c, pl, a, b, n);
    if (v != 0) throw math_error("NotAUnit: valuation is nonzero");
    return u;
}

UnitGroup::UnitGroup(const Curve& c, const Place& pl, int n)
    : place_(pl), n_(n), F_(residue_data(c, pl).field) {
    if (n < 1) throw std::invalid_argument("UnitGroup: n >= 1 required");
    long long Q = F_.order();
    int p = F_.base().p();

    if (Q > 2) {
        Gen g;
        g.u = ser_const(F_, F_.primitive_element(), n_);
        g.order = Q - 1;
        g.level = 0;
        gens_.push_back(std::move(g));
    }
    // F_p basis of the residue field: theta^i times a basis of F_q over F_p
    std::vector<Poly> basis;
    for (int i = 0; i < F_.degree(); ++i) {
        basis.push_back(Poly::monomial(F_.base(), 1, i));
        if (F_.base().q() == 4) basis.push_back(Poly::monomial(F_.base(), 2, i));
    }
    for (int j = 1; j < n_; ++j) {
        if (j % p == 0) continue;
        long long ord = 1;
        while (ord * j < n_) ord *= p;  // p^ceil(log_p(n/j))
        for (const auto& beta : basis) {
            Gen g;
            g.u = ser_zero(F_, n_);
            g.u[0] = F_.one();
            g.u[size_t(j)] = beta;
            g.order = ord;
            g.level = j;
            gens_.push_back(std::move(g));
        }
    }
    order_ = Q - 1;
    for (int i = 1; i < n_; ++i) order_ *= Q;
    long long check = 1;
    for (auto& g : gens_) check *= g.order;
    if (check != order_) throw std::logic_error("UnitGroup: generator orders inconsistent");

    residue_log_.assign(size_t(Q), -1);
    Poly gamma = Q > 2 ? gens_[0].u[0] : F_.one();
    Poly acc = F_.one();
    for (long long e = 0; e < Q - 1; ++e) {
        residue_log_[size_t(F_.index_of(acc))] = e;
        acc = F_.mul(acc, gamma);
    }
    if (Q == 2) residue_log_[1] = 0;
}

std::vector<Poly> UnitGroup::one() const { return ser_const(F_, F_.one(), n_); }

std::vector<Poly> UnitGroup::constant(fq_t c) const { return ser_const(F_, F_.from_base(c), n_); }

std::vector<Poly> UnitGroup::mul(const std::vector<Poly>& a, const std::vector<Poly>& b) const {
    return ser_mul(F_, a, b);
}

std::vector<Poly> UnitGroup::pow(std::vector<Poly> a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Ser r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<Poly> UnitGroup::inv(const std::vector<Poly>& a) const { return ser_inv(F_, a); }

std::vector<long long> UnitGroup::invariant_factors() const {
    // merge the cyclic orders into a divisibility chain
    std::vector<long long> orders;
    for (auto& g : gens_)
        if (g.order > 1) orders.push_back(g.order);
    std::map<long long, std::vector<int>> by_prime;  // prime -> exponents
    for (long long o : orders) {
        long long m = o;
        for (long long d = 2; d * d <= m; ++d) {
            if (m % d) continue;
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            by_prime[d].push_back(e);
        }
        if (m > 1) by_prime[m].push_back(1);
    }
    size_t chain_len = 0;
    for (auto& [pp, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<long long> chain(chain_len, 1);  // chain[0] largest
    for (auto& [pp, es] : by_prime)
        for (size_t i = 0; i < es.size(); ++i) {
            long long pe = 1;
            for (int e = 0; e < es[i]; ++e) pe *= pp;
            chain[i] *= pe;
        }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<long long> UnitGroup::dlog(const std::vector<Poly>& u) const {
    if (int(u.size()) != n_) throw std::invalid_argument("dlog: wrong ring size");
    if (u[0].is_zero()) throw math_error("dlog: not a unit");
    std::vector<long long> coords(gens_.size(), 0);
    Ser w = u;
    long long Q = F_.order();
    int p = F_.base().p();

    long long s = residue_log_[size_t(F_.index_of(w[0]))];
    if (s < 0) throw std::logic_error("dlog: residue log table miss");
    size_t gen_base = 0;
    if (Q > 2) {
        coords[0] = s;
        Poly cinv = F_.inv(w[0]);
        for (auto& coef : w) coef = F_.mul(coef, cinv);
        gen_base = 1;
    }
    // peel principal units level by level
    for (int j = 1; j < n_; ++j) {
        const Poly cj = w[size_t(j)];
        if (cj.is_zero()) continue;
        int v = 0, j0 = j;
        long long pv = 1;
        while (j0 % p == 0) {
            j0 /= p;
            ++v;
            pv *= p;
        }
        Poly c0 = F_.frobenius_inverse(cj, v);
        // decompose c0 over the F_p basis and divide out the generators
        for (size_t gi = gen_base; gi < gens_.size(); ++gi) {
            if (gens_[gi].level != j0) continue;
            const Poly& beta = gens_[gi].u[size_t(j0)];
            int i = beta.degree();
            fq_t comp = c0.coeff(i);
            long long lambda;
            if (F_.base().q() == 4) {
                bool a_part = (beta.lc() == 2);
                lambda = a_part ? ((comp >> 1) & 1) : (comp & 1);
            } else {
                lambda = comp;
            }
            if (lambda == 0) continue;
            coords[gi] = (coords[gi] + lambda * pv) % gens_[gi].order;
            w = mul(w, pow(gens_[gi].u, -(lambda * pv)));
        }
        if (!w[size_t(j)].is_zero()) throw std::logic_error("dlog: peeling failed");
    }
    return coords;
}

std::vector<std::vector<Poly>> UnitGroup::level_generators(int m) const {
    if (m < 0 || m > n_) throw std::invalid_argument("level_generators: 0 <= m <= n");
    std::vector<Ser> out;
    if (m == 0 && F_.order() > 2) out.push_back(gens_[0].u);
    std::vector<Poly> basis;
    for (int i = 0; i < F_.degree(); ++i) {
        basis.push_back(Poly::monomial(F_.base(), 1, i));
        if (F_.base().q() == 4) basis.push_back(Poly::monomial(F_.base(), 2, i));
    }
    for (int j = std::max(1, m); j < n_; ++j)
        for (const auto& beta : basis) {
            Ser u = ser_zero(F_, n_);
            u[0] = F_.one();
            u[size_t(j)] = beta;
            out.push_back(std::move(u));
        }
    return out;
}

}  // namespace ffcf
