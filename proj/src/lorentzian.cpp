#include "lgkit/lorentzian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lgkit/error.hpp"

namespace lgkit {

MPoly shift_to_poly(const LPoly& p, int sign0, int sign1) {
    MPoly r(2);
    if (p.is_zero()) return r;
    if (!p.integer_exponents())
        fail(Errc::half_exponent, "shift_to_poly requires integer exponents");
    int32_t min0 = INT32_MAX, min1 = INT32_MAX;
    for (const auto& t : p.terms()) {
        min0 = std::min(min0, t.e0 / 2);
        min1 = std::min(min1, t.e1 / 2);
    }
    for (const auto& t : p.terms()) {
        int32_t i = t.e0 / 2, j = t.e1 / 2;
        ArbInt c = t.c;
        if (sign0 < 0 && (i & 1)) c = -c;
        if (sign1 < 0 && (j & 1)) c = -c;
        r.add({i - min0, j - min1}, Rational(c));
    }
    return r;
}

MPoly shift_to_poly(const UniPoly& p, int sign) {
    MPoly r(1);
    if (p.is_zero()) return r;
    int32_t mn = p.min_exp();
    for (const auto& t : p.terms()) {
        ArbInt c = t.c;
        if (sign < 0 && (t.e & 1)) c = -c;
        r.add({t.e - mn}, Rational(c));
    }
    return r;
}

MPoly homogenize(const MPoly& p) {
    MPoly r(p.nvars() + 1);
    const int d = p.degree();
    ExpVec e(static_cast<std::size_t>(p.nvars()) + 1);
    for (const auto& [a, c] : p.terms()) {
        int s = std::accumulate(a.begin(), a.end(), 0);
        std::copy(a.begin(), a.end(), e.begin());
        e.back() = d - s;
        r.add(e, c);
    }
    return r;
}

MPoly normalize_poly(const MPoly& p) {
    if (!p.is_homogeneous()) fail(Errc::not_homogeneous, "normalization needs a homogeneous input");
    MPoly r(p.nvars());
    for (const auto& [a, c] : p.terms()) {
        Rational f(1);
        for (int32_t ai : a) f *= factorial_q(static_cast<unsigned>(ai));
        r.add(a, c / f);
    }
    return r;
}

namespace {
std::string vec_str(const ExpVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += std::to_string(v[i]);
        if (i + 1 < v.size()) s += ",";
    }
    return s + ")";
}
} // namespace

MConvexVerdict is_m_convex(const std::vector<ExpVec>& support) {
    MConvexVerdict v;
    if (support.empty()) return v;
    const std::size_t m = support[0].size();
    int deg = std::accumulate(support[0].begin(), support[0].end(), 0);
    for (const auto& a : support) {
        if (a.size() != m) fail(Errc::mixed_degree, "exponent vectors of different lengths");
        if (std::accumulate(a.begin(), a.end(), 0) != deg)
            fail(Errc::mixed_degree, "support mixes total degrees");
    }
    std::set<ExpVec> sset(support.begin(), support.end());
    for (const auto& a : support)
        for (const auto& b : support)
            for (std::size_t i = 0; i < m; ++i) {
                if (a[i] <= b[i]) continue;
                bool found = false;
                ExpVec a2 = a, b2 = b;
                for (std::size_t j = 0; j < m && !found; ++j) {
                    if (a[j] >= b[j]) continue;
                    a2[i] -= 1; a2[j] += 1;
                    b2[j] -= 1; b2[i] += 1;
                    if (sset.count(a2) && sset.count(b2)) found = true;
                    a2[i] += 1; a2[j] -= 1;
                    b2[j] += 1; b2[i] -= 1;
                }
                if (!found) {
                    v.pass = false;
                    if (v.witnesses.size() < 16)
                        v.witnesses.push_back("exchange fails for alpha=" + vec_str(a) +
                                              ", beta=" + vec_str(b) + ", i=" +
                                              std::to_string(i + 1));
                }
            }
    return v;
}

int positive_eigenvalues(const SymMat& h) {
    if (!h.is_symmetric()) fail(Errc::not_symmetric, "eigenvalue count needs a symmetric matrix");
    const int n = h.size();
    if (n == 0) return 0;
    // Faddeev-LeVerrier: char(x) = x^n + c[n-1] x^(n-1) + ... + c[0]
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    std::vector<Rational> M(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto mat = [&](std::vector<Rational>& v, int i, int j) -> Rational& {
        return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    // M_1 = A, c_{n-1} = -tr(M_1); M_{k+1} = A (M_k + c_{n-k} I)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat(M, i, j) = h.at(i, j);
    for (int k = 1; k <= n; ++k) {
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mat(M, i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / k;
        if (k == n) break;
        std::vector<Rational> next(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s(0);
                for (int l = 0; l < n; ++l) {
                    Rational mlj = mat(M, l, j);
                    if (l == j) mlj += c[static_cast<std::size_t>(n - k)];
                    s += h.at(i, l) * mlj;
                }
                mat(next, i, j) = s;
            }
        M = std::move(next);
    }
    // strip zero roots, then count sign variations (all roots real)
    std::size_t lo = 0;
    while (lo <= static_cast<std::size_t>(n) && sgn(c[lo]) == 0) ++lo;
    int variations = 0;
    int prev = 0;
    for (std::size_t i = lo; i <= static_cast<std::size_t>(n); ++i) {
        int s = sgn(c[i]);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

SymMat hessian_of_quadratic(const MPoly& q) {
    const int m = q.nvars();
    SymMat h(m);
    for (const auto& [a, c] : q.terms()) {
        int s = std::accumulate(a.begin(), a.end(), 0);
        if (s != 2) fail(Errc::domain, "Hessian input is not quadratic");
        int i = -1, j = -1;
        for (int v = 0; v < m; ++v) {
            if (a[static_cast<std::size_t>(v)] == 2) { i = j = v; }
            else if (a[static_cast<std::size_t>(v)] == 1) { (i < 0 ? i : j) = v; }
        }
        if (i == j) h.set(i, i, 2 * c);
        else h.set(i, j, c);
    }
    return h;
}

MPoly derivative(const MPoly& p, const ExpVec& alpha) {
    MPoly r(p.nvars());
    ExpVec g(static_cast<std::size_t>(p.nvars()));
    for (const auto& [a, c] : p.terms()) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < alpha[i]) { ok = false; break; }
            g[i] = a[i] - alpha[i];
        }
        if (!ok) continue;
        Rational f(1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (int32_t v = g[i] + 1; v <= a[i]; ++v) f *= v;
        r.add(g, c * f);
    }
    return r;
}

std::string LorentzianVerdict::describe() const {
    std::ostringstream os;
    os << (pass ? "lorentzian" : "not lorentzian");
    if (!nonnegative) os << "; negative coefficients";
    if (m_convex && !*m_convex) os << "; support not M-convex";
    if (!failing_hessians.empty()) {
        os << "; " << failing_hessians.size() << " derivative(s) with >1 positive eigenvalue";
    }
    return os.str();
}

LorentzianVerdict is_lorentzian(const MPoly& p) {
    if (!p.is_homogeneous())
        fail(Errc::not_homogeneous, "Lorentzian test needs a homogeneous input");
    LorentzianVerdict v;
    if (p.is_zero()) return v;

    for (const auto& [a, c] : p.terms())
        if (sgn(c) < 0) {
            v.nonnegative = false;
            v.pass = false;
            if (v.witnesses.size() < 16)
                v.witnesses.push_back("coefficient of " + vec_str(a) + " is " +
                                      Rational(c).get_str());
        }

    const int d = p.degree();
    if (d <= 1) return v;

    if (d == 2) {
        SymMat h = hessian_of_quadratic(p);
        int pos = positive_eigenvalues(h);
        if (pos > 1) {
            v.pass = false;
            v.failing_hessians.emplace_back(ExpVec{}, h);
            v.witnesses.push_back("Hessian " + h.str() + " has " + std::to_string(pos) +
                                  " positive eigenvalues");
        }
        return v;
    }

    std::vector<ExpVec> support;
    support.reserve(p.term_count());
    for (const auto& [a, c] : p.terms()) support.push_back(a);
    MConvexVerdict mc = is_m_convex(support);
    v.m_convex = mc.pass;
    if (!mc.pass) {
        v.pass = false;
        for (const auto& w : mc.witnesses)
            if (v.witnesses.size() < 16) v.witnesses.push_back(w);
    }

    for (const ExpVec& alpha : discrete_simplex(p.nvars(), d - 2)) {
        MPoly q = derivative(p, alpha);
        if (q.is_zero()) continue;
        SymMat h = hessian_of_quadratic(q);
        int pos = positive_eigenvalues(h);
        if (pos > 1) {
            v.pass = false;
            if (v.failing_hessians.size() < 16) {
                v.failing_hessians.emplace_back(alpha, h);
                v.witnesses.push_back("derivative " + vec_str(alpha) + ": Hessian " + h.str() +
                                      " has " + std::to_string(pos) + " positive eigenvalues");
            }
        }
    }
    return v;
}

LorentzianVerdict is_denorm_lorentzian(const MPoly& p) { return is_lorentzian(normalize_poly(p)); }

MPoly diagonal_restrict(const MPoly& p) {
    if (p.nvars() < 2) fail(Errc::domain, "diagonal restriction needs at least two variables");
    if (!p.is_homogeneous())
        fail(Errc::not_homogeneous, "diagonal restriction needs a homogeneous input");
    MPoly r(p.nvars() - 1);
    ExpVec e(static_cast<std::size_t>(p.nvars()) - 1);
    for (const auto& [a, c] : p.terms()) {
        std::copy(a.begin(), a.end() - 1, e.begin());
        e.back() += a.back();
        r.add(e, c);
    }
    return r;
}

} // namespace lgkit
