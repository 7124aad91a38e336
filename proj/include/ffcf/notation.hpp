#ifndef FFCF_NOTATION_HPP
#define FFCF_NOTATION_HPP

#include <string>
#include <vector>

#include "ffcf/curve.hpp"

namespace ffcf {

/// Parse a curve equation like "y^2 + (x^2 + x + 1)y + x^5 + x^4 + x^2 + x"
/// (the displayed polynomial equals zero).  Variable letters x and z are
/// synonyms; for F_4 the constants "a" and "a^2" are accepted.  The genus is
/// inferred from the degrees and the model validated.
Curve parse_curve(GF k, const std::string& text);

/// Places in ideal notation: "(x + 1, y + x + 1)", "(x^3 + x + 1)",
/// "(1/x, y/x^3 + 2)", "(1/z)".  Non-normalized second generators are
/// reduced mod the first; a bare "(p)" resolves to the unique place over p.
Place parse_place(const Curve& c, const std::string& text);

/// Signed sums "3(z + 1, y + z + 1)" or "D1 + 2D2 - D3"; "0" is the zero
/// divisor.
Divisor parse_divisor(const Curve& c, const std::string& text);

/// "{ place, place, ... }" (braces optional).
std::vector<Place> parse_place_set(const Curve& c, const std::string& text);

std::string format_poly(const Poly& p, char var = 'x');
std::string format_curve(const Curve& c);
std::string format_place(const Curve& c, const Place& p);
std::string format_divisor(const Curve& c, const Divisor& d);
std::string format_place_set(const Curve& c, const std::vector<Place>& s);

/// Defining polynomial of a cover, as a monic polynomial in T whose
/// coefficients are (a(x) + b(x) y) / den(x).
struct DefiningPoly {
    struct Coeff {
        Poly a, b, den;
    };
    std::vector<Coeff> coeffs;  // ascending in T; back() is the leading one
    int degree() const { return int(coeffs.size()) - 1; }
};
DefiningPoly parse_defining_poly(const Curve& c, const std::string& text);

}  // namespace ffcf

#endif
