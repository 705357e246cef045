#include "lgkit/lpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lgkit {

namespace {
inline bool key_less(int32_t a0, int32_t a1, int32_t b0, int32_t b1) {
    return a0 != b0 ? a0 < b0 : a1 < b1;
}
} // namespace

LPoly LPoly::monomial(ArbInt c, int32_t e0x2, int32_t e1x2) {
    LPoly p;
    if (sgn(c) != 0) p.t_.push_back({e0x2, e1x2, std::move(c)});
    return p;
}

bool LPoly::is_one() const {
    return t_.size() == 1 && t_[0].e0 == 0 && t_[0].e1 == 0 && t_[0].c == 1;
}

bool LPoly::integer_exponents() const {
    for (const Term& t : t_)
        if ((t.e0 & 1) || (t.e1 & 1)) return false;
    return true;
}

void LPoly::normalize_sorted() {
    // combine equal keys, drop zeros; input must be sorted
    std::size_t out = 0;
    for (std::size_t i = 0; i < t_.size();) {
        std::size_t j = i + 1;
        while (j < t_.size() && t_[j].e0 == t_[i].e0 && t_[j].e1 == t_[i].e1) {
            t_[i].c += t_[j].c;
            ++j;
        }
        if (sgn(t_[i].c) != 0) {
            if (out != i) t_[out] = std::move(t_[i]);
            ++out;
        }
        i = j;
    }
    t_.resize(out);
}

LPoly& LPoly::operator+=(const LPoly& o) {
    if (o.t_.empty()) return *this;
    if (t_.empty()) { t_ = o.t_; return *this; }
    std::vector<Term> r;
    r.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        const Term& a = t_[i];
        const Term& b = o.t_[j];
        if (a.e0 == b.e0 && a.e1 == b.e1) {
            ArbInt s = a.c + b.c;
            if (sgn(s) != 0) r.push_back({a.e0, a.e1, std::move(s)});
            ++i; ++j;
        } else if (key_less(a.e0, a.e1, b.e0, b.e1)) {
            r.push_back(std::move(t_[i++]));
        } else {
            r.push_back(o.t_[j++]);
        }
    }
    for (; i < t_.size(); ++i) r.push_back(std::move(t_[i]));
    for (; j < o.t_.size(); ++j) r.push_back(o.t_[j]);
    t_ = std::move(r);
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
    add_scaled(o, ArbInt(-1));
    return *this;
}

void LPoly::add_scaled(const LPoly& p, const ArbInt& k, int32_t e0x2, int32_t e1x2) {
    if (p.t_.empty() || sgn(k) == 0) return;
    std::vector<Term> r;
    r.reserve(t_.size() + p.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < p.t_.size()) {
        const Term& a = t_[i];
        int32_t b0 = p.t_[j].e0 + e0x2, b1 = p.t_[j].e1 + e1x2;
        if (a.e0 == b0 && a.e1 == b1) {
            ArbInt s = a.c;
            mpz_addmul(s.get_mpz_t(), k.get_mpz_t(), p.t_[j].c.get_mpz_t());
            if (sgn(s) != 0) r.push_back({b0, b1, std::move(s)});
            ++i; ++j;
        } else if (key_less(a.e0, a.e1, b0, b1)) {
            r.push_back(std::move(t_[i++]));
        } else {
            r.push_back({b0, b1, k * p.t_[j].c});
            ++j;
        }
    }
    for (; i < t_.size(); ++i) r.push_back(std::move(t_[i]));
    for (; j < p.t_.size(); ++j)
        r.push_back({p.t_[j].e0 + e0x2, p.t_[j].e1 + e1x2, k * p.t_[j].c});
    t_ = std::move(r);
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    if (a.t_.empty() || b.t_.empty()) return r;
    if (a.t_.size() == 1) {
        r.add_scaled(b, a.t_[0].c, a.t_[0].e0, a.t_[0].e1);
        return r;
    }
    if (b.t_.size() == 1) {
        r.add_scaled(a, b.t_[0].c, b.t_[0].e0, b.t_[0].e1);
        return r;
    }
    std::vector<LPoly::Term> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const auto& ta : a.t_)
        for (const auto& tb : b.t_)
            acc.push_back({ta.e0 + tb.e0, ta.e1 + tb.e1, ta.c * tb.c});
    std::sort(acc.begin(), acc.end(), [](const LPoly::Term& x, const LPoly::Term& y) {
        return key_less(x.e0, x.e1, y.e0, y.e1);
    });
    r.t_ = std::move(acc);
    r.normalize_sorted();
    return r;
}

LPoly& LPoly::operator*=(const LPoly& o) {
    *this = *this * o;
    return *this;
}

LPoly& LPoly::scale(const ArbInt& k) {
    if (sgn(k) == 0) { t_.clear(); return *this; }
    for (Term& t : t_) t.c *= k;
    return *this;
}

LPoly operator-(LPoly a) {
    for (auto& t : a.t_) t.c = -t.c;
    return a;
}

bool operator==(const LPoly& a, const LPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].e0 != b.t_[i].e0 || a.t_[i].e1 != b.t_[i].e1 || a.t_[i].c != b.t_[i].c)
            return false;
    return true;
}

ArbInt LPoly::coeff(int32_t e0x2, int32_t e1x2) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), std::pair(e0x2, e1x2),
                               [](const Term& t, const std::pair<int32_t, int32_t>& k) {
                                   return key_less(t.e0, t.e1, k.first, k.second);
                               });
    if (it != t_.end() && it->e0 == e0x2 && it->e1 == e1x2) return it->c;
    return ArbInt(0);
}

LPoly LPoly::swap_vars() const {
    LPoly r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.e1, t.e0, t.c});
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) {
        return key_less(x.e0, x.e1, y.e0, y.e1);
    });
    return r;
}

LPoly LPoly::invert_vars() const {
    LPoly r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({-t.e0, -t.e1, t.c});
    std::reverse(r.t_.begin(), r.t_.end());
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) {
        return key_less(x.e0, x.e1, y.e0, y.e1);
    });
    return r;
}

LPoly LPoly::shifted(int32_t d0x2, int32_t d1x2) const {
    LPoly r = *this;
    for (Term& t : r.t_) { t.e0 += d0x2; t.e1 += d1x2; }
    return r;
}

namespace {
void print_exp(std::ostream& os, const char* var, int32_t ex2) {
    if (ex2 == 0) return;
    os << '*' << var << '^';
    if (ex2 % 2 == 0) os << ex2 / 2;
    else os << ex2 << "/2";
}
} // namespace

std::string LPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : t_) {
        if (!first) os << (sgn(t.c) < 0 ? " - " : " + ");
        else if (sgn(t.c) < 0) os << "-";
        first = false;
        ArbInt a = abs(t.c);
        os << a.get_str();
        print_exp(os, "t0", t.e0);
        print_exp(os, "t1", t.e1);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << p.str(); }

} // namespace lgkit
