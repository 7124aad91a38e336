#ifndef FFCF_GF_HPP
#define FFCF_GF_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ffcf {

using fq_t = std::uint8_t;

/// The small finite fields F_2, F_3, F_4, F_5 used as constant fields.
///
/// Elements are encoded as 0..q-1.  For F_4 the encoding is
/// 0, 1, 2 = a, 3 = a + 1 where a^2 = a + 1, so the generator printed
/// as "a" in curve data squares to a + 1.
class GF {
public:
    GF() : q_(2) {}
    explicit GF(int q) : q_(q) {
        if (q != 2 && q != 3 && q != 4 && q != 5)
            throw std::invalid_argument("GF: q must be one of 2,3,4,5");
    }

    int q() const { return q_; }
    int p() const { return q_ == 4 ? 2 : q_; }
    int ext_degree() const { return q_ == 4 ? 2 : 1; }

    fq_t add(fq_t a, fq_t b) const {
        if (q_ == 4) return fq_t(a ^ b);
        return fq_t((a + b) % q_);
    }
    fq_t neg(fq_t a) const {
        if (q_ == 4) return a;
        return fq_t(a == 0 ? 0 : q_ - a);
    }
    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
    fq_t mul(fq_t a, fq_t b) const {
        if (q_ == 4) return f4_mul_[a][b];
        return fq_t((a * b) % q_);
    }
    fq_t inv(fq_t a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        if (q_ == 4) return f4_inv_[a];
        for (int x = 1; x < q_; ++x)
            if ((a * x) % q_ == 1) return fq_t(x);
        throw std::logic_error("GF: no inverse");
    }
    fq_t div(fq_t a, fq_t b) const { return mul(a, inv(b)); }

    fq_t pow(fq_t a, long long e) const {
        if (e < 0) { a = inv(a); e = -e; }
        fq_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Canonical image of an integer (reduction mod p for prime fields;
    /// for F_4 only the prime subfield {0,1} is reachable this way).
    fq_t from_int(long long v) const {
        int pp = p();
        long long r = v % pp;
        if (r < 0) r += pp;
        return fq_t(r);
    }

    std::vector<fq_t> elements() const {
        std::vector<fq_t> e(q_);
        for (int i = 0; i < q_; ++i) e[i] = fq_t(i);
        return e;
    }

    bool operator==(const GF& o) const { return q_ == o.q_; }
    bool operator!=(const GF& o) const { return q_ != o.q_; }

private:
    int q_;

    static constexpr fq_t f4_mul_[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},  // a*a = a+1, a*(a+1) = 1
        {0, 3, 1, 2},
    };
    static constexpr fq_t f4_inv_[4] = {0, 1, 3, 2};
};

}  // namespace ffcf

#endif
