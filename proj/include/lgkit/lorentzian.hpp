#ifndef LGKIT_LORENTZIAN_HPP
#define LGKIT_LORENTZIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgkit/lpoly.hpp"
#include "lgkit/mpoly.hpp"
#include "lgkit/unipoly.hpp"

namespace lgkit {

/// Applies per-variable sign flips w_i -> s_i w_i and multiplies by the
/// unique monomial making all minimal exponents zero.
MPoly shift_to_poly(const LPoly& p, int sign0, int sign1);
MPoly shift_to_poly(const UniPoly& p, int sign);

/// Adds a final variable z, multiplying each term by z^(d - |alpha|) where
/// d is the total degree; the result is homogeneous of degree d.
MPoly homogenize(const MPoly& p);

/// Divided-power normalization c_alpha -> c_alpha / alpha!.
/// Throws NOT_HOMOGENEOUS.
MPoly normalize_poly(const MPoly& p);

struct MConvexVerdict {
    bool pass = true;
    std::vector<std::string> witnesses;
};

/// Exchange-axiom check on a set of equal-degree exponent vectors.
/// Throws MIXED_DEGREE.
MConvexVerdict is_m_convex(const std::vector<ExpVec>& support);

/// Exact count of positive eigenvalues (with multiplicity): Descartes sign
/// variations of the characteristic polynomial, exact because symmetry
/// forces all roots real. Throws NOT_SYMMETRIC.
int positive_eigenvalues(const SymMat& h);

/// Second-derivative matrix of the quadratic polynomial q.
SymMat hessian_of_quadratic(const MPoly& q);

/// Exact partial derivative d^alpha p.
MPoly derivative(const MPoly& p, const ExpVec& alpha);

struct LorentzianVerdict {
    bool pass = true;
    bool nonnegative = true;
    std::optional<bool> m_convex;      // only checked for degree > 2
    std::vector<std::string> witnesses;
    /// Derivative orders whose Hessian has more than one positive
    /// eigenvalue, paired with that Hessian (lexicographic alpha order;
    /// for degree 2 the single entry uses the empty alpha).
    std::vector<std::pair<ExpVec, SymMat>> failing_hessians;
    std::string describe() const;
};

/**
 * Brändén-Huh characterization: degree <= 1 needs nonnegative coefficients;
 * degree 2 adds "Hessian has at most one positive eigenvalue"; degree > 2
 * needs nonnegative coefficients, M-convex support, and the degree-2
 * condition for every derivative order alpha with |alpha| = d - 2.
 * Throws NOT_HOMOGENEOUS.
 */
LorentzianVerdict is_lorentzian(const MPoly& p);

/// is_lorentzian(normalize_poly(p)).
LorentzianVerdict is_denorm_lorentzian(const MPoly& p);

/// Substitutes w_m := w_{m-1}; input must be homogeneous with m >= 2.
MPoly diagonal_restrict(const MPoly& p);

} // namespace lgkit

#endif
