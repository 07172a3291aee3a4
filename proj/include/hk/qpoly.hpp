#pragma once

#include "hk/rational.hpp"

#include <map>
#include <vector>

namespace hk {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
Rational eval(const QPoly& p, const Rational& x);
QPoly derivative(const QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly monic_gcd(QPoly a, QPoly b);

struct RationalRoots {
    std::map<Rational, int> roots;  // root -> multiplicity
    bool complete = false;          // true iff the roots account for the full degree
};

// Exact rational roots with multiplicity (Sturm isolation on the square-free part).
RationalRoots rational_roots(const QPoly& p);

}  // namespace hk
