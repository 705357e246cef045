#ifndef LGKIT_FAMILIES_HPP
#define LGKIT_FAMILIES_HPP

#include <string>

#include "lgkit/coeff_table.hpp"
#include "lgkit/unipoly.hpp"

namespace lgkit {

/// Closed-form LG of the (2,n)-torus link, n >= 1 (DOMAIN otherwise).
/// mu is 1 for odd n and 2 for even n.
CoeffTable torus_lg(int n);

/// Closed-form LG of the twist knot K_n, any integer n; mu = 1. The n >= 1
/// branch of the closed form is stated in inverted variables and is
/// canonicalized to (t0, t1) here.
CoeffTable twist_lg(int n);

/// Both Alexander forms obtained from the t1 := -t0^-1 specialization:
/// `squared_var` has only even powers of t0 and equals Delta(t0^2);
/// `delta` is the same with exponents halved, i.e. Delta(t).
struct AlexanderResult {
    UniPoly squared_var;
    UniPoly delta;
};

/// Throws ODD_EXPONENT if the specialization produces an odd power,
/// which would signal a convention bug.
AlexanderResult alexander_from_lg(const CoeffTable& t);

/// Specializes t1 := t0^-1 and tests for a perfect square.
struct SquareCheck {
    bool pass = false;
    UniPoly specialized;
    SquareRootResult root;
    std::string witness; // set when the check fails
};

SquareCheck square_specialization_check(const CoeffTable& t);

} // namespace lgkit

#endif
