#ifndef LGKIT_YEXT_HPP
#define LGKIT_YEXT_HPP

#include <iosfwd>
#include <string>

#include "lgkit/lpoly.hpp"

namespace lgkit {

/**
 * Element p + q*Y of the quadratic extension with Y^2 = (t0 - 1)(1 - t1).
 *
 * Y is never expanded; every product reduces Y^2 to
 * t0 + t1 - t0*t1 - 1, keeping the (even, odd) pair canonical.
 */
class YExt {
public:
    YExt() = default;
    explicit YExt(LPoly even) : ev_(std::move(even)) {}
    YExt(LPoly even, LPoly odd) : ev_(std::move(even)), od_(std::move(odd)) {}
    explicit YExt(long v) : ev_(v) {}

    static const LPoly& y_squared();
    static YExt y() { return YExt(LPoly(), LPoly(1)); }

    const LPoly& even() const { return ev_; }
    const LPoly& odd() const { return od_; }
    bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }
    bool is_one() const { return ev_.is_one() && od_.is_zero(); }

    YExt& operator+=(const YExt& o);
    YExt& operator-=(const YExt& o);
    friend YExt operator+(YExt a, const YExt& b) { a += b; return a; }
    friend YExt operator-(YExt a, const YExt& b) { a -= b; return a; }
    friend YExt operator*(const YExt& a, const YExt& b);
    friend YExt operator-(YExt a);
    friend bool operator==(const YExt& a, const YExt& b) {
        return a.ev_ == b.ev_ && a.od_ == b.od_;
    }

    /// *this += a * b, sparing one temporary
    void add_mul(const YExt& a, const YExt& b);
    /// *this += k * t0^(e0x2/2) t1^(e1x2/2) * a
    void add_scaled(const YExt& a, const ArbInt& k, int32_t e0x2 = 0, int32_t e1x2 = 0);

    std::string str() const;

private:
    LPoly ev_;
    LPoly od_;
};

std::ostream& operator<<(std::ostream& os, const YExt& v);

} // namespace lgkit

#endif
