#include "lgkit/unipoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "lgkit/error.hpp"
#include "lgkit/lpoly.hpp"

namespace lgkit {

UniPoly UniPoly::monomial(ArbInt c, int32_t e) {
    UniPoly p;
    if (sgn(c) != 0) p.t_.push_back({e, std::move(c)});
    return p;
}

ArbInt UniPoly::coeff(int32_t e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, int32_t k) { return t.e < k; });
    if (it != t_.end() && it->e == e) return it->c;
    return ArbInt(0);
}

int32_t UniPoly::min_exp() const { return t_.front().e; }
int32_t UniPoly::max_exp() const { return t_.back().e; }

void UniPoly::add_term(int32_t e, const ArbInt& c) {
    if (sgn(c) == 0) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, int32_t k) { return t.e < k; });
    if (it != t_.end() && it->e == e) {
        it->c += c;
        if (sgn(it->c) == 0) t_.erase(it);
    } else {
        t_.insert(it, {e, c});
    }
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const Term& t : o.t_) add_term(t.e, t.c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    std::map<int32_t, ArbInt> acc;
    for (const auto& ta : a.t_)
        for (const auto& tb : b.t_) acc[ta.e + tb.e] += ta.c * tb.c;
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) r.t_.push_back({e, std::move(c)});
    return r;
}

UniPoly operator-(UniPoly a) {
    for (auto& t : a.t_) t.c = -t.c;
    return a;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].e != b.t_[i].e || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

UniPoly UniPoly::shifted(int32_t d) const {
    UniPoly r = *this;
    for (Term& t : r.t_) t.e += d;
    return r;
}

UniPoly UniPoly::inverted() const {
    UniPoly r;
    r.t_.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.push_back({-it->e, it->c});
    return r;
}

bool UniPoly::all_exponents_even() const {
    for (const Term& t : t_)
        if (t.e & 1) return false;
    return true;
}

UniPoly UniPoly::halve_exponents() const {
    UniPoly r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) {
        if (t.e & 1) fail(Errc::odd_exponent, "exponent " + std::to_string(t.e) + " is odd");
        r.t_.push_back({t.e / 2, t.c});
    }
    return r;
}

std::vector<ArbInt> UniPoly::dense_coeffs() const {
    std::vector<ArbInt> d;
    if (t_.empty()) return d;
    d.assign(static_cast<std::size_t>(max_exp() - min_exp()) + 1, ArbInt(0));
    for (const Term& t : t_) d[static_cast<std::size_t>(t.e - min_exp())] = t.c;
    return d;
}

std::string UniPoly::str(const char* var) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : t_) {
        if (!first) os << (sgn(t.c) < 0 ? " - " : " + ");
        else if (sgn(t.c) < 0) os << "-";
        first = false;
        os << abs(t.c).get_str();
        if (t.e != 0) os << '*' << var << '^' << t.e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

UniPoly specialize(const LPoly& p, int sign_s, int k) {
    UniPoly r;
    std::map<int32_t, ArbInt> acc;
    for (const auto& t : p.terms()) {
        if ((t.e0 & 1) || (t.e1 & 1))
            fail(Errc::half_exponent, "specialize requires integer exponents, got " + p.str());
        int32_t i = t.e0 / 2, j = t.e1 / 2;
        int32_t m = i + k * j;
        bool neg = sign_s < 0 && (j & 1);
        auto& slot = acc[m];
        if (neg) slot -= t.c;
        else slot += t.c;
    }
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) r += UniPoly::monomial(std::move(c), e);
    return r;
}

SquareRootResult is_perfect_square(const UniPoly& p) {
    SquareRootResult res;
    if (p.is_zero()) {
        res.is_square = true;
        return res;
    }
    res.shift_x2 = p.min_exp();
    // P = t^{-v} p is an ordinary polynomial with P(0) != 0
    std::vector<ArbInt> c = p.dense_coeffs();
    std::size_t n = c.size() - 1; // degree of P
    if (n & 1) return res;
    if (sgn(c[n]) < 0) return res;
    ArbInt lead_root;
    if (!perfect_square_root(c[n], lead_root)) return res;

    // q = sum q_k t^k of degree n/2, solved from the top coefficient down
    std::size_t d = n / 2;
    std::vector<ArbInt> q(d + 1, ArbInt(0));
    q[d] = lead_root;
    ArbInt two_lead = 2 * lead_root;
    for (std::size_t step = 1; step <= d; ++step) {
        // coefficient of t^{2d - step} in q^2 must equal c[2d - step]; the only
        // unknown is q[d - step], which appears as 2 q[d-step] q[d]
        std::size_t target = 2 * d - step;
        ArbInt s(0);
        for (std::size_t a = 0; a <= d; ++a) {
            if (a > target) break;
            std::size_t bidx = target - a;
            if (bidx > d) continue;
            if (a == d - step || bidx == d - step) continue;
            s += q[a] * q[bidx];
        }
        ArbInt rem = c[target] - s;
        ArbInt qq, r2;
        mpz_fdiv_qr(qq.get_mpz_t(), r2.get_mpz_t(), rem.get_mpz_t(), two_lead.get_mpz_t());
        if (sgn(r2) != 0) return res;
        q[d - step] = qq;
    }
    // verify q^2 == P
    std::vector<ArbInt> sq(n + 1, ArbInt(0));
    for (std::size_t a = 0; a <= d; ++a)
        for (std::size_t b = 0; b <= d; ++b) sq[a + b] += q[a] * q[b];
    for (std::size_t i = 0; i <= n; ++i)
        if (sq[i] != c[i]) return res;

    res.is_square = true;
    for (std::size_t i = 0; i <= d; ++i)
        res.root += UniPoly::monomial(q[i], static_cast<int32_t>(i));
    return res;
}

} // namespace lgkit
