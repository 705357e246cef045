#ifndef LGKIT_BRAID_HPP
#define LGKIT_BRAID_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgkit/coeff_table.hpp"
#include "lgkit/rmatrix.hpp"

namespace lgkit {

/// A word in the braid group B_n: signed generator indices, +k for sigma_k,
/// -k for sigma_k^-1, 1 <= k <= n-1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
};

/// Parses whitespace/comma-separated nonzero integers with an optional
/// `n=<strands>` prefix. Without the prefix the strand count is
/// 1 + max |letter|. Throws PARSE_ERROR on zero letters, letters >= n or
/// malformed tokens.
BraidWord parse_braid(const std::string& text);

/// Number of components of the braid closure (cycles of the underlying
/// strand permutation).
int component_count(const BraidWord& b);

/// Sparse linear operator on V^{(x)n}; keys pack (row, col), each < 4^n.
/// n <= 8 so both indices fit 16 bits.
class SparseOp {
public:
    explicit SparseOp(int strands) : strands_(strands) {}
    static SparseOp identity(int strands);

    int strands() const { return strands_; }
    uint32_t dim() const { return 1u << (2 * strands_); }
    std::size_t entry_count() const { return m_.size(); }

    const std::unordered_map<uint32_t, YExt>& entries() const { return m_; }
    void set(uint32_t row, uint32_t col, YExt v);
    const YExt* find(uint32_t row, uint32_t col) const;

    bool is_identity() const;
    friend bool operator==(const SparseOp& a, const SparseOp& b);

    static uint32_t key(uint32_t row, uint32_t col) { return (row << 16) | col; }

private:
    int strands_;
    std::unordered_map<uint32_t, YExt> m_;
};

/// Left-multiplies op by the gate acting on tensor positions site, site+1
/// (1-based). Throws SITE_OUT_OF_RANGE unless 1 <= site <= strands-1.
SparseOp apply_gate(const SparseOp& op, const Gate& g, int site, int strands);

/// The braid-group representation: ordered product of one gate per letter,
/// positive letters acting by R, negative by R^-1; the empty word gives the
/// identity. Throws RESOURCE_LIMIT for strands > 8 or length > 64.
SparseOp rho(const BraidWord& b);

/**
 * Links-Gould invariant of the closure of b via the partial-trace formula:
 * N = tr_{2..n}((id (x) h^{(x)(n-1)}) rho(b)) must be a scalar multiple of
 * the identity on V; the scalar is returned as a coefficient table with mu
 * set to the closure's component count. NOT_SCALAR / RESIDUAL_Y /
 * HALF_EXPONENT indicate engine bugs.
 */
CoeffTable lg_of_braid(const BraidWord& b);

} // namespace lgkit

#endif
