#ifndef LGKIT_MPOLY_HPP
#define LGKIT_MPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lgkit/arith.hpp"

namespace lgkit {

using ExpVec = std::vector<int32_t>;

/// Multi-variable polynomial with exact rational coefficients, sparse over
/// exponent vectors (all of length nvars, nonnegative entries). No zero
/// coefficients are stored; term order is lexicographic on the exponent
/// vector, so iteration and printing are deterministic.
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }
    const std::map<ExpVec, Rational>& terms() const { return c_; }

    void add(const ExpVec& alpha, const Rational& coeff);
    Rational coeff(const ExpVec& alpha) const;

    /// Max total degree over the support; 0 for the zero polynomial.
    int degree() const;
    /// True when all terms share the same total degree (vacuously for 0).
    bool is_homogeneous() const;

    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator+(MPoly a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b);

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    std::map<ExpVec, Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Exact symmetric matrix of rationals.
class SymMat {
public:
    explicit SymMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }
    void set(int i, int j, const Rational& v); // sets both (i,j) and (j,i)
    bool is_symmetric() const;

    friend bool operator==(const SymMat& a, const SymMat& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    int n_;
    std::vector<Rational> a_;
};

/// All alpha in N^m with sum(alpha) = d, lexicographically ordered.
std::vector<ExpVec> discrete_simplex(int m, int d);

} // namespace lgkit

#endif
