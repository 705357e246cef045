#ifndef LGKIT_LPOLY_HPP
#define LGKIT_LPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lgkit/arith.hpp"

namespace lgkit {

/**
 * Sparse bivariate Laurent polynomial in t0, t1 with half-integer exponents.
 *
 * Exponents are stored doubled: the term c * t0^(e0/2) * t1^(e1/2) is held as
 * (e0, e1, c) with integer e0, e1. Terms are kept sorted lexicographically on
 * (e0, e1) and never carry a zero coefficient, so representation is canonical
 * and operator== is structural.
 */
class LPoly {
public:
    struct Term {
        int32_t e0; // doubled t0-exponent
        int32_t e1; // doubled t1-exponent
        ArbInt c;
    };

    LPoly() = default;
    explicit LPoly(long v) { if (v != 0) t_.push_back({0, 0, ArbInt(v)}); }
    explicit LPoly(const ArbInt& v) { if (sgn(v) != 0) t_.push_back({0, 0, v}); }

    /// c * t0^(e0x2/2) * t1^(e1x2/2)
    static LPoly monomial(ArbInt c, int32_t e0x2, int32_t e1x2);
    static LPoly t0(int32_t halves = 2) { return monomial(ArbInt(1), halves, 0); }
    static LPoly t1(int32_t halves = 2) { return monomial(ArbInt(1), 0, halves); }
    static LPoly one() { return LPoly(1); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    bool integer_exponents() const;

    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    LPoly& operator*=(const LPoly& o);
    LPoly& scale(const ArbInt& k);
    /// *this += k * t0^(e0x2/2) t1^(e1x2/2) * p  (fused hot-path helper)
    void add_scaled(const LPoly& p, const ArbInt& k, int32_t e0x2 = 0, int32_t e1x2 = 0);

    friend LPoly operator+(LPoly a, const LPoly& b) { a += b; return a; }
    friend LPoly operator-(LPoly a, const LPoly& b) { a -= b; return a; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    friend LPoly operator-(LPoly a);
    friend bool operator==(const LPoly& a, const LPoly& b);

    /// Coefficient at doubled exponents (zero if absent).
    ArbInt coeff(int32_t e0x2, int32_t e1x2) const;

    /// t0 <-> t1
    LPoly swap_vars() const;
    /// t0 -> 1/t0, t1 -> 1/t1
    LPoly invert_vars() const;
    /// multiply by t0^(d0x2/2) t1^(d1x2/2)
    LPoly shifted(int32_t d0x2, int32_t d1x2) const;

    /// Deterministic textual form, lexicographic term order; half exponents
    /// print as a/2.
    std::string str() const;

private:
    std::vector<Term> t_; // sorted by (e0, e1), no zero coefficients
    void normalize_sorted();
    friend struct LPolyBuilder;
};

std::ostream& operator<<(std::ostream& os, const LPoly& p);

} // namespace lgkit

#endif
