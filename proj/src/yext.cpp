#include "lgkit/yext.hpp"

#include <ostream>

namespace lgkit {

const LPoly& YExt::y_squared() {
    // (t0 - 1)(1 - t1) = t0 + t1 - t0 t1 - 1
    static const LPoly v = [] {
        LPoly p = LPoly::t0() + LPoly::t1();
        p -= LPoly::t0() * LPoly::t1();
        p -= LPoly::one();
        return p;
    }();
    return v;
}

YExt& YExt::operator+=(const YExt& o) {
    ev_ += o.ev_;
    od_ += o.od_;
    return *this;
}

YExt& YExt::operator-=(const YExt& o) {
    ev_ -= o.ev_;
    od_ -= o.od_;
    return *this;
}

YExt operator*(const YExt& a, const YExt& b) {
    // (p1 + q1 Y)(p2 + q2 Y) = p1 p2 + q1 q2 Y^2 + (p1 q2 + q1 p2) Y
    LPoly even = a.ev_ * b.ev_;
    if (!a.od_.is_zero() && !b.od_.is_zero()) even += (a.od_ * b.od_) * YExt::y_squared();
    LPoly odd = a.ev_ * b.od_;
    odd += a.od_ * b.ev_;
    return YExt(std::move(even), std::move(odd));
}

void YExt::add_mul(const YExt& a, const YExt& b) {
    ev_ += a.ev_ * b.ev_;
    if (!a.od_.is_zero() && !b.od_.is_zero()) ev_ += (a.od_ * b.od_) * y_squared();
    if (!b.od_.is_zero()) od_ += a.ev_ * b.od_;
    if (!a.od_.is_zero()) od_ += a.od_ * b.ev_;
}

void YExt::add_scaled(const YExt& a, const ArbInt& k, int32_t e0x2, int32_t e1x2) {
    ev_.add_scaled(a.ev_, k, e0x2, e1x2);
    od_.add_scaled(a.od_, k, e0x2, e1x2);
}

YExt operator-(YExt a) {
    a.ev_ = -std::move(a.ev_);
    a.od_ = -std::move(a.od_);
    return a;
}

std::string YExt::str() const {
    if (od_.is_zero()) return ev_.str();
    std::string s;
    if (!ev_.is_zero()) s = ev_.str() + " + ";
    s += "(" + od_.str() + ")*Y";
    return s;
}

std::ostream& operator<<(std::ostream& os, const YExt& v) { return os << v.str(); }

} // namespace lgkit
