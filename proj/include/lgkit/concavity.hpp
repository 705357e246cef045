#ifndef LGKIT_CONCAVITY_HPP
#define LGKIT_CONCAVITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lgkit/coeff_table.hpp"

namespace lgkit {

/// Outcome of a single check. pass is true exactly when no violation was
/// found; up to 16 witnesses are retained, violation_count has them all.
struct Verdict {
    bool pass = true;
    std::vector<std::string> witnesses;
    uint64_t violation_count = 0;

    static constexpr std::size_t witness_cap = 16;
    void add_violation(std::string w);
};

using LatticePoint = std::pair<int64_t, int64_t>;

/// Convex hull of integer points in counterclockwise order; collinear
/// vertices are dropped. Degenerate inputs give the degenerate hull.
struct Hull {
    std::vector<LatticePoint> vertices;
    bool contains(const LatticePoint& p) const; // inside or on the boundary
};

/// Monotone-chain hull. Throws EMPTY_SET on empty input.
Hull convex_hull(std::vector<LatticePoint> points);

/// Every lattice point of the convex hull of the support must carry a
/// nonzero coefficient. Throws EMPTY_TABLE on the zero table.
Verdict interior_zeros(const CoeffTable& t);

/// Conjectured alternating pattern a_ij = (-1)^(mu+i+j+1) |a_ij|.
/// Throws MISSING_MU when the table carries no component count.
Verdict sign_pattern(const CoeffTable& t);

/// |a_{i+k,j+l}| |a_{i-k,j-l}| <= a_ij^2 for every center in the bounding
/// box and every offset keeping both outer points in the box (entries
/// outside are zero, so those offsets pass trivially).
Verdict log_concave_2d(const CoeffTable& t);

/// For every attained threshold K, the support {|a_ij| >= K} must have no
/// interior zeros.
Verdict unimodal_2d(const CoeffTable& t);

struct SeqChecks {
    Verdict log_concave;
    Verdict no_internal_zeros;
    Verdict trapezoidal;
    Verdict unimodal;
    Verdict generalized_log_concave;
};

/// One-dimensional checks on a sequence of absolute values.
/// Throws NEGATIVE_ENTRY on negative input.
SeqChecks seq_checks_1d(const std::vector<ArbInt>& s);

} // namespace lgkit

#endif
