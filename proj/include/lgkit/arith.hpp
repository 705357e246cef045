#ifndef LGKIT_ARITH_HPP
#define LGKIT_ARITH_HPP

#include <gmpxx.h>

#include <string>

namespace lgkit {

// Exact coefficient arithmetic is delegated to GMP. ArbInt values are
// arbitrary-precision signed integers; Rational values are kept reduced with
// a positive denominator by mpq_class's canonical form.
using ArbInt = mpz_class;
using Rational = mpq_class;

inline ArbInt int_pow(const ArbInt& base, unsigned long e) {
    ArbInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Exact integer square root test. On success stores the nonnegative root.
inline bool perfect_square_root(const ArbInt& a, ArbInt& root) {
    if (sgn(a) < 0) return false;
    if (!mpz_perfect_square_p(a.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), a.get_mpz_t());
    return true;
}

inline Rational factorial_q(unsigned n) {
    ArbInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline ArbInt parse_int(const std::string& s, bool* ok) {
    ArbInt v;
    *ok = mpz_set_str(v.get_mpz_t(), s.c_str(), 10) == 0 && !s.empty();
    return v;
}

} // namespace lgkit

#endif
