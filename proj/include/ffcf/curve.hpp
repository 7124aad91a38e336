#ifndef FFCF_CURVE_HPP
#define FFCF_CURVE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffcf/poly.hpp"
#include "ffcf/residue_field.hpp"

namespace ffcf {

struct Error : std::runtime_error {
    enum class Kind {
        Usage,
        Parse,
        Model,
        Math,
        Certificate,
        Mismatch,
    };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error parse_error(const std::string& m) { return Error(Error::Kind::Parse, m); }
inline Error model_error(const std::string& m) { return Error(Error::Kind::Model, m); }
inline Error math_error(const std::string& m) { return Error(Error::Kind::Math, m); }

/// Nonsingular hyperelliptic model y^2 + h(x) y = f(x) over F_q together
/// with its second chart u = 1/x, w = y/x^(g+1):  w^2 + h*(u) w = f*(u).
/// genus 0 is carried as the rational function field itself (h = f = 0).
class Curve {
public:
    GF k;
    Poly h, f;
    int genus;
    Poly hstar, fstar;

    bool rational_model() const { return genus == 0; }
    int q() const { return k.q(); }

    // cached zeta data, filled by validate_curve
    std::vector<long long> point_counts;  // N_1..N_4
    std::vector<long long> l_coeffs;      // 1, c_1, ..., c_2g
    long long class_number = 1;

    bool operator==(const Curve& o) const { return k == o.k && h == o.h && f == o.f; }
};

/// Validates degrees, both charts' smoothness and consistency of the stated
/// genus with the point counts; fills zeta data.
Curve validate_curve(GF k, const Poly& h, const Poly& f, int genus);

/// Rational places of the constant-field extension of degree i (i <= 4).
long long count_points(const Curve& c, int i);

/// L(T) coefficients from N_1..N_g through Newton's identities plus the
/// functional equation; checked against Weil bounds exactly.
std::vector<long long> zeta_numerator(int q, int genus, const std::vector<long long>& counts);

/// A place of the function field.
struct Place {
    enum class Fiber { Split, Ramified, Inert, Base };

    bool infinite = false;
    Poly p;       // monic irreducible in x (finite); for infinite places unused
    Fiber fiber = Fiber::Base;
    Poly root;    // y-root mod p (split/ramified); chart-2 w-root for infinite
    int degree = 0;

    std::vector<long long> key() const;
    bool operator<(const Place& o) const { return key() < o.key(); }
    bool operator==(const Place& o) const { return key() == o.key(); }
    bool rational() const { return degree == 1; }
};

/// Fiber of the double cover over a monic irreducible p (or over u = 0 of
/// the second chart when infinite = true).
struct FiberData {
    Place::Fiber kind;
    std::vector<Poly> roots;  // both split roots, or the single ramified root
};
FiberData fiber_over(const Curve& c, const Poly& p, bool infinite);

/// All places lying over p (or over infinity).
std::vector<Place> places_over(const Curve& c, const Poly& p, bool infinite);
std::vector<Place> places_of_degree(const Curve& c, int r);
std::vector<Place> infinite_places(const Curve& c);

/// Residue field of a place, together with the images of x and y (finite
/// places) or u and w (infinite places).
struct ResidueData {
    ResidueField field;
    ResidueField::Elem xbar, ybar;
};
ResidueData residue_data(const Curve& c, const Place& p);

struct Divisor {
    std::map<Place, long long> t;

    long long degree() const;
    bool effective() const;
    bool is_zero() const { return t.empty(); }
    void add(const Place& p, long long n);
    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(long long n) const;
    bool operator==(const Divisor& o) const { return t == o.t; }
    bool operator<(const Divisor& o) const;
};

/// v_P(a + b y).  Exact, any place, sign of the chart absorbed.
long long place_valuation(const Curve& c, const Place& pl, const Poly& a, const Poly& b);

/// Norm of a + b y down to k[x]:  a^2 - a b h - b^2 f.
Poly function_norm(const Curve& c, const Poly& a, const Poly& b);

/// Principal divisor of z = a(x) + b(x) y; degree 0 always.
Divisor function_divisor(const Curve& c, const Poly& a, const Poly& b);

}  // namespace ffcf

#endif
