#ifndef LGKIT_UNIPOLY_HPP
#define LGKIT_UNIPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lgkit/arith.hpp"

namespace lgkit {

class LPoly;

/// One-variable Laurent polynomial with integer exponents, sparse and sorted.
class UniPoly {
public:
    struct Term {
        int32_t e;
        ArbInt c;
    };

    UniPoly() = default;
    explicit UniPoly(long v) { if (v != 0) t_.push_back({0, ArbInt(v)}); }
    static UniPoly monomial(ArbInt c, int32_t e);

    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    ArbInt coeff(int32_t e) const;
    int32_t min_exp() const; // valuation; requires nonzero
    int32_t max_exp() const;

    UniPoly& operator+=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(UniPoly a);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    UniPoly shifted(int32_t d) const;
    /// t -> 1/t
    UniPoly inverted() const;
    /// Divide every exponent by two; exponents must all be even.
    UniPoly halve_exponents() const;
    bool all_exponents_even() const;

    /// Dense coefficient run from min_exp to max_exp (empty for zero).
    std::vector<ArbInt> dense_coeffs() const;

    std::string str(const char* var = "t") const;

private:
    std::vector<Term> t_;
    void add_term(int32_t e, const ArbInt& c);
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// Substitute t1 := s * t0^k (s = +1 or -1) into a two-variable polynomial
/// with integer exponents. Coefficient of t0^m is sum over i + k j = m of
/// a_ij s^j. Throws HALF_EXPONENT if p carries fractional exponents.
UniPoly specialize(const LPoly& p, int sign_s, int k);

/**
 * Exact square-root test for one-variable Laurent polynomials.
 *
 * Writes p = t^shift_x2 * root(t)^2 with root an ordinary-polynomial-shaped
 * Laurent polynomial of valuation 0; the true square root is
 * t^(shift_x2 / 2) * root, which is half-integer-exponent when shift_x2 is
 * odd. root is normalized to positive leading coefficient.
 */
struct SquareRootResult {
    bool is_square = false;
    UniPoly root;
    int32_t shift_x2 = 0;
};

SquareRootResult is_perfect_square(const UniPoly& p);

} // namespace lgkit

#endif
