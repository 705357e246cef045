#ifndef LGKIT_COEFF_TABLE_HPP
#define LGKIT_COEFF_TABLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lgkit/lpoly.hpp"
#include "lgkit/yext.hpp"

namespace lgkit {

/**
 * Rectangular integer-coefficient table of a two-variable Laurent polynomial,
 * the final form of an LG invariant.
 *
 * Entry (r, c) is the coefficient of t0^(offset_i + r) * t1^(offset_j + c).
 * The bounding box is tight: every boundary row/column holds a nonzero entry.
 * The zero polynomial is represented by an empty table. mu optionally carries
 * the component count of the source link (needed by the sign checker).
 */
class CoeffTable {
public:
    CoeffTable() = default;

    /// Throws HALF_EXPONENT on fractional exponents.
    static CoeffTable from_poly(const LPoly& p, std::optional<int> mu = std::nullopt);

    LPoly to_poly() const;

    bool is_zero() const { return rows_.empty(); }
    int64_t offset_i() const { return off_i_; }
    int64_t offset_j() const { return off_j_; }
    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
    const ArbInt& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    /// Coefficient of t0^i t1^j (absolute exponents; zero outside the box).
    ArbInt coeff(int64_t i, int64_t j) const;

    std::optional<int> mu() const { return mu_; }
    void set_mu(std::optional<int> m) { mu_ = m; }

    /// Support as absolute exponent pairs, sorted lexicographically.
    std::vector<std::pair<int64_t, int64_t>> support() const;

    CoeffTable swapped() const;  // t0 <-> t1
    CoeffTable inverted() const; // t0 -> 1/t0, t1 -> 1/t1
    CoeffTable shifted(int64_t di, int64_t dj) const;

    friend bool operator==(const CoeffTable& a, const CoeffTable& b);

private:
    int64_t off_i_ = 0;
    int64_t off_j_ = 0;
    std::vector<std::vector<ArbInt>> rows_;
    std::optional<int> mu_;

    friend class TableFile;
};

/// Converts an engine value to a table. Throws RESIDUAL_Y when the odd part
/// is nonzero and HALF_EXPONENT on fractional exponents; both indicate an
/// engine bug upstream.
CoeffTable to_coeff_table(const YExt& v, std::optional<int> mu = std::nullopt);

} // namespace lgkit

#endif
