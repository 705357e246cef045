#ifndef LGKIT_RMATRIX_HPP
#define LGKIT_RMATRIX_HPP

#include <array>
#include <string>
#include <vector>

#include "lgkit/yext.hpp"

namespace lgkit {

/**
 * A 16x16 operator on V (x) V with entries in the Y-extension, V the
 * 4-dimensional space with ordered basis (w_1, .., w_4). Basis vector
 * w_i (x) w_j sits at index 4*(i-1) + (j-1); entry (row, col) is the
 * coefficient of the row basis vector in the image of the column one.
 */
class Gate {
public:
    static constexpr int dim = 16;

    static int idx(int i, int j) { return 4 * (i - 1) + (j - 1); } // 1-based pair

    const YExt& at(int row, int col) const { return e_[static_cast<std::size_t>(row * dim + col)]; }
    YExt& at(int row, int col) { return e_[static_cast<std::size_t>(row * dim + col)]; }

    static Gate identity();
    bool is_identity() const;
    friend bool operator==(const Gate& a, const Gate& b) { return a.e_ == b.e_; }

    /// Matrix product this ∘ rhs.
    Gate compose(const Gate& rhs) const;

    /// Nonzero entries of one column as (row, value) pairs.
    std::vector<std::pair<int, const YExt*>> column(int col) const;

private:
    std::array<YExt, dim * dim> e_;
};

/// Diagonal enhancement endomorphism of V.
struct Enhancement {
    std::array<LPoly, 4> diag;
    Enhancement inverse() const; // entries are signed monomials, inverted exactly
};

/// The Links-Gould R-matrix. Display cells are read with the first tensor
/// index along rows (the reading validated end-to-end by the Hopf and
/// trefoil values).
Gate build_R();

/// diag(t0^-1, -t1, -t0^-1, t1)
Enhancement build_h();

/**
 * Inverse of R from its cubic relation
 *   R^3 - (t0 + t1 - 1) R^2 + (t0 t1 - t0 - t1) R + t0 t1 = 0,
 * i.e. R^-1 = -(R^2 - (t0 + t1 - 1) R + (t0 t1 - t0 - t1)) * (t0 t1)^-1.
 * The candidate is verified by symbolic multiplication before being
 * returned; a mismatch throws INVERSE_VERIFICATION_FAILED with no fallback.
 */
Gate invert_R(const Gate& R);

enum class RotDir { left, right };

/// Index bijections (A^left)_{(k,i)}^{(l,j)} = A_{(i,j)}^{(k,l)} and
/// (A^right)_{(j,l)}^{(i,k)} = A_{(i,j)}^{(k,l)}, lower = column index.
Gate rotate(const Gate& A, RotDir dir);

/// tr_2((id (x) weight) ∘ A): entry (a, b) = sum_s weight_s * A_{(b,s)}^{(a,s)}.
std::array<std::array<YExt, 4>, 4> partial_trace2(const Gate& A, const Enhancement& weight);

struct AxiomReport {
    struct Entry {
        std::string axiom;
        bool pass;
        std::string witness; // first failing entry, empty when passing
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

/**
 * Checks the four enhanced-R-matrix identities symbolically:
 *   (a) R (h (x) h) = (h (x) h) R
 *   (b) tr_2((id (x) h) R^{±1}) = id
 *   (c) (R^-1)^left ∘ ((id (x) h) R (h^-1 (x) id))^right = id
 *   (d) (R (x) id)(id (x) R)(R (x) id) = (id (x) R)(R (x) id)(id (x) R)
 * Failures become report entries, never exceptions. When the cubic inverse
 * of R does not verify, the parts needing R^-1 are reported as failing.
 */
AxiomReport verify_axioms(const Gate& R, const Enhancement& h);

} // namespace lgkit

#endif
