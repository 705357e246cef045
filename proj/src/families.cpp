#include "lgkit/families.hpp"

#include "lgkit/error.hpp"

namespace lgkit {

namespace {

LPoly mono(long c, int i, int j) { return LPoly::monomial(ArbInt(c), 2 * i, 2 * j); }

// sum_{l=0}^{count-1} t0^l (-1)^{count-1-l}
LPoly alt_geom_t0(int count) {
    LPoly s;
    for (int l = 0; l < count; ++l) s += mono((count - 1 - l) % 2 ? -1 : 1, l, 0);
    return s;
}

} // namespace

CoeffTable torus_lg(int n) {
    if (n < 1) fail(Errc::domain, "torus parameter must be >= 1, got " + std::to_string(n));
    LPoly acc = mono((n - 1) % 2 ? -1 : 1, 0, 0);
    for (int k = 2; k <= n; ++k) {
        LPoly green = mono(1, 1, n - k) * alt_geom_t0(k - 1);
        LPoly blue = mono(1, 0, n - k + 1) * alt_geom_t0(k);
        acc += green;
        acc -= blue;
    }
    return CoeffTable::from_poly(acc, n % 2 ? 1 : 2);
}

CoeffTable twist_lg(int n) {
    if (n == 0) return CoeffTable::from_poly(LPoly(1), 1);
    if (n <= -1) {
        const int l = -n;
        LPoly a = mono(2, 0, 0) + mono(-1, 1, 0) + mono(-1, 0, 1) + mono(-1, -1, 0) +
                  mono(-1, 0, -1) + mono(1, 1, 1) + mono(1, -1, -1);
        LPoly b = mono(4, 0, 0) + mono(-2, 1, 0) + mono(-2, 0, 1) + mono(-2, -1, 0) +
                  mono(-2, 0, -1) + mono(1, 1, 1) + mono(1, -1, -1) + mono(1, 1, -1) +
                  mono(1, -1, 1);
        LPoly geom, weighted;
        for (int k = 0; k < l; ++k) {
            geom += mono(1, k, k);
            weighted += mono(2 * l - 2 * k - 1, k, k);
        }
        LPoly acc = mono(1, 0, 0) + a * geom + b * weighted;
        return CoeffTable::from_poly(acc, 1);
    }
    // n >= 1, three layers in the variables (t0^-1, t1^-1)
    LPoly red = mono(1, n - 1, n - 1) *
                (mono(-1, 2, 1) + mono(-1, 1, 2) + mono(1, 2, 0) + mono(1, 0, 2) +
                 mono(2, 1, 1) + mono(-1, 1, 0) + mono(-1, 0, 1) + mono(1, 0, 0));
    LPoly green_c = mono(1, 2, 2) + mono(-3, 2, 1) + mono(-3, 1, 2) + mono(2, 2, 0) +
                    mono(2, 0, 2) + mono(5, 1, 1) + mono(-3, 1, 0) + mono(-3, 0, 1) +
                    mono(2, 0, 0);
    LPoly blue_c = mono(1, 2, 2) + mono(-2, 2, 1) + mono(-2, 1, 2) + mono(1, 2, 0) +
                   mono(1, 0, 2) + mono(4, 1, 1) + mono(-2, 1, 0) + mono(-2, 0, 1) +
                   mono(1, 0, 0);
    LPoly geom, weighted;
    for (int k = 0; k <= n - 2; ++k) {
        geom += mono(1, k, k);
        weighted += mono(2 * n - 2 * k - 3, k, k);
    }
    LPoly acc = red + green_c * geom + blue_c * weighted;
    return CoeffTable::from_poly(acc.invert_vars(), 1);
}

AlexanderResult alexander_from_lg(const CoeffTable& t) {
    AlexanderResult r;
    r.squared_var = specialize(t.to_poly(), -1, -1);
    r.delta = r.squared_var.halve_exponents(); // throws ODD_EXPONENT
    return r;
}

SquareCheck square_specialization_check(const CoeffTable& t) {
    SquareCheck c;
    c.specialized = specialize(t.to_poly(), +1, -1);
    c.root = is_perfect_square(c.specialized);
    c.pass = c.root.is_square;
    if (!c.pass) c.witness = "not a perfect square: " + c.specialized.str("t0");
    return c;
}

} // namespace lgkit
