#include "lgkit/concavity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lgkit/error.hpp"

namespace lgkit {

void Verdict::add_violation(std::string w) {
    pass = false;
    ++violation_count;
    if (witnesses.size() < witness_cap) witnesses.push_back(std::move(w));
}

namespace {

int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

std::string pt(const LatticePoint& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

} // namespace

Hull convex_hull(std::vector<LatticePoint> pts) {
    if (pts.empty()) fail(Errc::empty_set, "convex hull of empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Hull h;
    if (pts.size() == 1) {
        h.vertices = pts;
        return h;
    }
    std::vector<LatticePoint>& out = h.vertices;
    out.resize(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) { // lower
        while (k >= 2 && cross(out[k - 2], out[k - 1], p) <= 0) --k;
        out[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lim = k + 1; i-- > 0;) { // upper
        while (k >= lim && cross(out[k - 2], out[k - 1], pts[i]) <= 0) --k;
        out[k++] = pts[i];
    }
    out.resize(k - 1);
    return h;
}

bool Hull::contains(const LatticePoint& p) const {
    if (vertices.empty()) return false;
    if (vertices.size() == 1) return p == vertices[0];
    if (vertices.size() == 2) {
        const auto& a = vertices[0];
        const auto& b = vertices[1];
        if (cross(a, b, p) != 0) return false;
        return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
               std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % vertices.size()];
        if (cross(a, b, p) < 0) return false; // vertices are CCW
    }
    return true;
}

namespace {

// interior-zero scan shared by interior_zeros and unimodal_2d
void interior_zero_scan(const std::vector<LatticePoint>& support,
                        const std::set<LatticePoint>& support_set, Verdict& v,
                        const std::string& label) {
    Hull hull = convex_hull(support);
    int64_t min_i = support[0].first, max_i = min_i;
    int64_t min_j = support[0].second, max_j = min_j;
    for (const auto& p : support) {
        min_i = std::min(min_i, p.first);
        max_i = std::max(max_i, p.first);
        min_j = std::min(min_j, p.second);
        max_j = std::max(max_j, p.second);
    }
    for (int64_t i = min_i; i <= max_i; ++i)
        for (int64_t j = min_j; j <= max_j; ++j) {
            LatticePoint p{i, j};
            if (!hull.contains(p)) continue;
            if (!support_set.count(p))
                v.add_violation(label + "lattice point " + pt(p) +
                                " lies in the support hull but has zero coefficient");
        }
}

} // namespace

Verdict interior_zeros(const CoeffTable& t) {
    if (t.is_zero()) fail(Errc::empty_table, "interior-zero check on the zero table");
    Verdict v;
    auto support = t.support();
    std::set<LatticePoint> sset(support.begin(), support.end());
    interior_zero_scan(support, sset, v, "");
    return v;
}

Verdict sign_pattern(const CoeffTable& t) {
    if (!t.mu()) fail(Errc::missing_mu, "sign check needs the component count");
    Verdict v;
    const int mu = *t.mu();
    for (std::size_t r = 0; r < t.n_rows(); ++r)
        for (std::size_t c = 0; c < t.n_cols(); ++c) {
            const ArbInt& a = t.at(r, c);
            if (sgn(a) == 0) continue;
            int64_t i = t.offset_i() + static_cast<int64_t>(r);
            int64_t j = t.offset_j() + static_cast<int64_t>(c);
            int want = ((mu + i + j + 1) % 2 + 2) % 2 == 0 ? 1 : -1;
            if (sgn(a) != want) {
                std::ostringstream os;
                os << "a(" << i << "," << j << ") = " << a.get_str() << " but (-1)^(mu+i+j+1) = "
                   << want;
                v.add_violation(os.str());
            }
        }
    return v;
}

Verdict log_concave_2d(const CoeffTable& t) {
    Verdict v;
    const int64_t nr = static_cast<int64_t>(t.n_rows());
    const int64_t nc = static_cast<int64_t>(t.n_cols());
    // work on absolute values over the bounding box
    std::vector<std::vector<ArbInt>> a(static_cast<std::size_t>(nr));
    for (int64_t r = 0; r < nr; ++r) {
        a[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(nc));
        for (int64_t c = 0; c < nc; ++c)
            a[static_cast<std::size_t>(r)].push_back(
                abs(t.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))));
    }
    ArbInt lhs, center2;
    for (int64_t r = 0; r < nr; ++r)
        for (int64_t c = 0; c < nc; ++c) {
            center2 = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            // offsets with both outer points inside the box; (k,l) and (-k,-l)
            // give the same inequality, so scan half the offsets
            int64_t kmax = std::min(r, nr - 1 - r);
            int64_t lmax = std::min(c, nc - 1 - c);
            for (int64_t k = 0; k <= kmax; ++k) {
                for (int64_t l = (k == 0 ? 1 : -lmax); l <= lmax; ++l) {
                    lhs = a[static_cast<std::size_t>(r + k)][static_cast<std::size_t>(c + l)] *
                          a[static_cast<std::size_t>(r - k)][static_cast<std::size_t>(c - l)];
                    if (lhs > center2) {
                        std::ostringstream os;
                        os << "center (" << t.offset_i() + r << "," << t.offset_j() + c
                           << "), offset (" << k << "," << l << "): "
                           << a[static_cast<std::size_t>(r + k)][static_cast<std::size_t>(c + l)]
                                  .get_str()
                           << "*"
                           << a[static_cast<std::size_t>(r - k)][static_cast<std::size_t>(c - l)]
                                  .get_str()
                           << " > " << center2.get_str();
                        v.add_violation(os.str());
                    }
                }
            }
        }
    return v;
}

Verdict unimodal_2d(const CoeffTable& t) {
    Verdict v;
    if (t.is_zero()) return v;
    std::set<ArbInt> thresholds;
    for (std::size_t r = 0; r < t.n_rows(); ++r)
        for (std::size_t c = 0; c < t.n_cols(); ++c)
            if (sgn(t.at(r, c)) != 0) thresholds.insert(abs(t.at(r, c)));
    for (const ArbInt& k : thresholds) {
        std::vector<LatticePoint> support;
        for (std::size_t r = 0; r < t.n_rows(); ++r)
            for (std::size_t c = 0; c < t.n_cols(); ++c)
                if (abs(t.at(r, c)) >= k)
                    support.emplace_back(t.offset_i() + static_cast<int64_t>(r),
                                         t.offset_j() + static_cast<int64_t>(c));
        std::set<LatticePoint> sset(support.begin(), support.end());
        interior_zero_scan(support, sset, v, "threshold " + k.get_str() + ": ");
    }
    return v;
}

SeqChecks seq_checks_1d(const std::vector<ArbInt>& s) {
    for (const ArbInt& a : s)
        if (sgn(a) < 0) fail(Errc::negative_entry, "sequence entry " + a.get_str() + " < 0");
    SeqChecks r;
    const int64_t n = static_cast<int64_t>(s.size());
    auto at = [&](int64_t i) -> const ArbInt& {
        static const ArbInt zero(0);
        return i < 0 || i >= n ? zero : s[static_cast<std::size_t>(i)];
    };

    int64_t first = -1, last = -1;
    for (int64_t i = 0; i < n; ++i)
        if (sgn(s[static_cast<std::size_t>(i)]) != 0) {
            if (first < 0) first = i;
            last = i;
        }

    // log-concave: a_{i-1} a_{i+1} <= a_i^2
    for (int64_t i = 0; i < n; ++i) {
        ArbInt lhs = at(i - 1) * at(i + 1);
        ArbInt rhs = at(i) * at(i);
        if (lhs > rhs)
            r.log_concave.add_violation("index " + std::to_string(i) + ": " + at(i - 1).get_str() +
                                        "*" + at(i + 1).get_str() + " > " + at(i).get_str() + "^2");
    }

    // internal zeros
    for (int64_t i = first + 1; first >= 0 && i < last; ++i)
        if (sgn(at(i)) == 0)
            r.no_internal_zeros.add_violation("zero at index " + std::to_string(i) +
                                              " between nonzero entries");

    // trapezoidal: strictly increasing, then constant, then strictly decreasing
    if (first >= 0) {
        int64_t p = first;
        while (p < last && at(p) < at(p + 1)) ++p;
        int64_t q = p;
        while (q < last && at(q) == at(q + 1)) ++q;
        for (int64_t i = q; i < last; ++i)
            if (!(at(i) > at(i + 1))) {
                r.trapezoidal.add_violation("shape breaks at index " + std::to_string(i + 1) +
                                            " (value " + at(i + 1).get_str() + ")");
                break;
            }
    }

    // unimodal: non-decreasing then non-increasing
    if (first >= 0) {
        int64_t p = first;
        while (p < last && at(p) <= at(p + 1)) ++p;
        for (int64_t i = p; i < last; ++i)
            if (at(i) < at(i + 1)) {
                r.unimodal.add_violation("rise at index " + std::to_string(i + 1) + " after a fall");
                break;
            }
    }

    // generalized: a_{i-k} a_{i+k} <= a_i^2 for all i, k
    for (int64_t i = 0; i < n; ++i) {
        ArbInt rhs = at(i) * at(i);
        for (int64_t k = 1; i - k >= -1 && i + k <= n; ++k) {
            ArbInt lhs = at(i - k) * at(i + k);
            if (lhs > rhs)
                r.generalized_log_concave.add_violation(
                    "index " + std::to_string(i) + ", gap " + std::to_string(k) + ": " +
                    at(i - k).get_str() + "*" + at(i + k).get_str() + " > " + at(i).get_str() +
                    "^2");
        }
    }
    return r;
}

} // namespace lgkit
