#include "lgkit/coeff_table.hpp"

#include <algorithm>

#include "lgkit/error.hpp"

namespace lgkit {

CoeffTable CoeffTable::from_poly(const LPoly& p, std::optional<int> mu) {
    CoeffTable t;
    t.mu_ = mu;
    if (p.is_zero()) return t;
    if (!p.integer_exponents())
        fail(Errc::half_exponent, "fractional exponent in " + p.str());
    int32_t min_i = INT32_MAX, max_i = INT32_MIN, min_j = INT32_MAX, max_j = INT32_MIN;
    for (const auto& term : p.terms()) {
        min_i = std::min(min_i, term.e0 / 2);
        max_i = std::max(max_i, term.e0 / 2);
        min_j = std::min(min_j, term.e1 / 2);
        max_j = std::max(max_j, term.e1 / 2);
    }
    t.off_i_ = min_i;
    t.off_j_ = min_j;
    t.rows_.assign(static_cast<std::size_t>(max_i - min_i) + 1,
                   std::vector<ArbInt>(static_cast<std::size_t>(max_j - min_j) + 1, ArbInt(0)));
    for (const auto& term : p.terms())
        t.rows_[static_cast<std::size_t>(term.e0 / 2 - min_i)]
              [static_cast<std::size_t>(term.e1 / 2 - min_j)] = term.c;
    return t;
}

LPoly CoeffTable::to_poly() const {
    LPoly p;
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (std::size_t c = 0; c < n_cols(); ++c)
            if (sgn(rows_[r][c]) != 0)
                p += LPoly::monomial(rows_[r][c],
                                     static_cast<int32_t>(2 * (off_i_ + static_cast<int64_t>(r))),
                                     static_cast<int32_t>(2 * (off_j_ + static_cast<int64_t>(c))));
    return p;
}

ArbInt CoeffTable::coeff(int64_t i, int64_t j) const {
    int64_t r = i - off_i_, c = j - off_j_;
    if (r < 0 || c < 0 || r >= static_cast<int64_t>(n_rows()) ||
        c >= static_cast<int64_t>(n_cols()))
        return ArbInt(0);
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

std::vector<std::pair<int64_t, int64_t>> CoeffTable::support() const {
    std::vector<std::pair<int64_t, int64_t>> s;
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (std::size_t c = 0; c < n_cols(); ++c)
            if (sgn(rows_[r][c]) != 0)
                s.emplace_back(off_i_ + static_cast<int64_t>(r), off_j_ + static_cast<int64_t>(c));
    return s;
}

CoeffTable CoeffTable::swapped() const {
    CoeffTable t;
    t.mu_ = mu_;
    if (is_zero()) return t;
    t.off_i_ = off_j_;
    t.off_j_ = off_i_;
    t.rows_.assign(n_cols(), std::vector<ArbInt>(n_rows(), ArbInt(0)));
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (std::size_t c = 0; c < n_cols(); ++c) t.rows_[c][r] = rows_[r][c];
    return t;
}

CoeffTable CoeffTable::inverted() const {
    CoeffTable t;
    t.mu_ = mu_;
    if (is_zero()) return t;
    std::size_t nr = n_rows(), nc = n_cols();
    t.off_i_ = -(off_i_ + static_cast<int64_t>(nr) - 1);
    t.off_j_ = -(off_j_ + static_cast<int64_t>(nc) - 1);
    t.rows_.assign(nr, std::vector<ArbInt>(nc, ArbInt(0)));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) t.rows_[nr - 1 - r][nc - 1 - c] = rows_[r][c];
    return t;
}

CoeffTable CoeffTable::shifted(int64_t di, int64_t dj) const {
    CoeffTable t = *this;
    if (!t.is_zero()) {
        t.off_i_ += di;
        t.off_j_ += dj;
    }
    return t;
}

bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.off_i_ == b.off_i_ && a.off_j_ == b.off_j_ && a.rows_ == b.rows_ && a.mu_ == b.mu_;
}

CoeffTable to_coeff_table(const YExt& v, std::optional<int> mu) {
    if (!v.odd().is_zero())
        fail(Errc::residual_y, "value has nonzero Y-part: " + v.str());
    return CoeffTable::from_poly(v.even(), mu);
}

} // namespace lgkit
