#include "lgkit/rmatrix.hpp"

#include <map>

#include "lgkit/error.hpp"

namespace lgkit {

namespace {

LPoly mono(long c, int e0x2, int e1x2) { return LPoly::monomial(ArbInt(c), e0x2, e1x2); }

// shorthands for the R-matrix entries
LPoly c_t0() { return mono(1, 2, 0); }
LPoly c_t1() { return mono(1, 0, 2); }
LPoly c_rt0() { return mono(1, 1, 0); }          // t0^{1/2}
LPoly c_rt1() { return mono(1, 0, 1); }          // t1^{1/2}
LPoly c_rt01() { return mono(1, 1, 1); }         // t0^{1/2} t1^{1/2}
LPoly c_t0m1() { return mono(1, 2, 0) + mono(-1, 0, 0); } // t0 - 1
LPoly c_t1m1() { return mono(1, 0, 2) + mono(-1, 0, 0); } // t1 - 1
LPoly c_t0t1m1() { return mono(1, 2, 2) + mono(-1, 0, 0); } // t0 t1 - 1

} // namespace

Gate Gate::identity() {
    Gate g;
    for (int i = 0; i < dim; ++i) g.at(i, i) = YExt(1);
    return g;
}

bool Gate::is_identity() const {
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const YExt& v = at(r, c);
            if (r == c ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

Gate Gate::compose(const Gate& rhs) const {
    Gate out;
    for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k) {
            const YExt& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < dim; ++c) {
                const YExt& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c).add_mul(a, b);
            }
        }
    return out;
}

std::vector<std::pair<int, const YExt*>> Gate::column(int col) const {
    std::vector<std::pair<int, const YExt*>> v;
    for (int r = 0; r < dim; ++r)
        if (!at(r, col).is_zero()) v.emplace_back(r, &at(r, col));
    return v;
}

Gate build_R() {
    Gate R;
    auto set = [&R](int out_i, int out_j, int in_i, int in_j, YExt v) {
        R.at(Gate::idx(out_i, out_j), Gate::idx(in_i, in_j)) = std::move(v);
    };
    // column (i, j) holds R(w_i (x) w_j)
    set(1, 1, 1, 1, YExt(c_t0()));
    set(2, 1, 1, 2, YExt(c_rt0()));
    set(3, 1, 1, 3, YExt(c_rt0()));
    set(4, 1, 1, 4, YExt(1));

    set(1, 2, 2, 1, YExt(c_rt0()));
    set(2, 1, 2, 1, YExt(c_t0m1()));
    set(2, 2, 2, 2, YExt(-1));
    set(2, 3, 2, 3, YExt(c_t0t1m1()));
    set(3, 2, 2, 3, YExt(-c_rt01()));
    set(4, 1, 2, 3, YExt(LPoly(), -c_rt01())); // -t0^{1/2} t1^{1/2} Y
    set(4, 2, 2, 4, YExt(c_rt1()));

    set(1, 3, 3, 1, YExt(c_rt0()));
    set(3, 1, 3, 1, YExt(c_t0m1()));
    set(2, 3, 3, 2, YExt(-c_rt01()));
    set(4, 1, 3, 2, YExt(LPoly(), LPoly(1))); // Y
    set(3, 3, 3, 3, YExt(-1));
    set(4, 3, 3, 4, YExt(c_rt1()));

    set(1, 4, 4, 1, YExt(1));
    set(2, 3, 4, 1, YExt(LPoly(), -c_rt01()));
    set(3, 2, 4, 1, YExt(LPoly(), LPoly(1)));
    set(4, 1, 4, 1, YExt(YExt::y_squared())); // Y^2, reduced
    set(2, 4, 4, 2, YExt(c_rt1()));
    set(4, 2, 4, 2, YExt(c_t1m1()));
    set(3, 4, 4, 3, YExt(c_rt1()));
    set(4, 3, 4, 3, YExt(c_t1m1()));
    set(4, 4, 4, 4, YExt(c_t1()));
    return R;
}

Enhancement build_h() {
    return Enhancement{{mono(1, -2, 0), mono(-1, 0, 2), mono(-1, -2, 0), mono(1, 0, 2)}};
}

Enhancement Enhancement::inverse() const {
    Enhancement inv;
    for (int k = 0; k < 4; ++k) {
        const auto& terms = diag[k].terms();
        if (terms.size() != 1)
            fail(Errc::domain, "enhancement entry is not a monomial");
        const auto& t = terms[0];
        if (abs(t.c) != 1)
            fail(Errc::domain, "enhancement entry is not invertible over the Laurent ring");
        inv.diag[k] = LPoly::monomial(t.c, -t.e0, -t.e1);
    }
    return inv;
}

Gate invert_R(const Gate& R) {
    Gate R2 = R.compose(R);
    Gate cand;
    // -(R^2 - (t0 + t1 - 1) R + (t0 t1 - t0 - t1) Id) * t0^-1 t1^-1
    LPoly lin = c_t0() + c_t1() + mono(-1, 0, 0);         // t0 + t1 - 1
    LPoly cst = mono(1, 2, 2) + mono(-1, 2, 0) + mono(-1, 0, 2); // t0 t1 - t0 - t1
    for (int r = 0; r < Gate::dim; ++r)
        for (int c = 0; c < Gate::dim; ++c) {
            YExt v = R2.at(r, c);
            v -= YExt(lin) * R.at(r, c);
            if (r == c) v += YExt(cst);
            // multiply by -t0^-1 t1^-1
            cand.at(r, c).add_scaled(v, ArbInt(-1), -2, -2);
        }
    if (!R.compose(cand).is_identity() || !cand.compose(R).is_identity())
        fail(Errc::inverse_verification_failed,
             "cubic-relation candidate is not a two-sided inverse");
    return cand;
}

Gate rotate(const Gate& A, RotDir dir) {
    Gate B;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    const YExt& v = A.at(Gate::idx(k, l), Gate::idx(i, j));
                    if (v.is_zero()) continue;
                    if (dir == RotDir::left)
                        B.at(Gate::idx(l, j), Gate::idx(k, i)) = v;
                    else
                        B.at(Gate::idx(i, k), Gate::idx(j, l)) = v;
                }
    return B;
}

std::array<std::array<YExt, 4>, 4> partial_trace2(const Gate& A, const Enhancement& weight) {
    std::array<std::array<YExt, 4>, 4> N;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            YExt acc;
            for (int s = 1; s <= 4; ++s) {
                const YExt& v = A.at(Gate::idx(a, s), Gate::idx(b, s));
                if (!v.is_zero()) acc += YExt(weight.diag[s - 1]) * v;
            }
            N[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = std::move(acc);
        }
    return N;
}

namespace {

// sparse operator on V^{(x)3} used only for the Yang-Baxter check
using Op3 = std::map<std::pair<int, int>, YExt>;

Op3 embed3(const Gate& g, int site) {
    // site 1: g acts on factors (1,2); site 2: on (2,3)
    Op3 m;
    for (int r = 0; r < Gate::dim; ++r)
        for (int c = 0; c < Gate::dim; ++c) {
            const YExt& v = g.at(r, c);
            if (v.is_zero()) continue;
            for (int d = 0; d < 4; ++d) {
                int row = site == 1 ? r * 4 + d : d * 16 + r;
                int col = site == 1 ? c * 4 + d : d * 16 + c;
                m[{row, col}] = v;
            }
        }
    return m;
}

Op3 mul3(const Op3& a, const Op3& b) {
    // group b by row for the contraction
    std::map<int, std::vector<std::pair<int, const YExt*>>> brow;
    for (const auto& [rc, v] : b) brow[rc.first].emplace_back(rc.second, &v);
    Op3 out;
    for (const auto& [rc, v] : a) {
        auto it = brow.find(rc.second);
        if (it == brow.end()) continue;
        for (const auto& [c2, bv] : it->second) out[{rc.first, c2}].add_mul(v, *bv);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::string pair_name(int idx16) { return "(" + std::to_string(idx16 / 4 + 1) + "," + std::to_string(idx16 % 4 + 1) + ")"; }

} // namespace

bool AxiomReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

AxiomReport verify_axioms(const Gate& R, const Enhancement& h) {
    AxiomReport rep;
    auto add = [&rep](std::string name, bool pass, std::string witness) {
        rep.entries.push_back({std::move(name), pass, std::move(witness)});
    };

    // (a) R (h (x) h) = (h (x) h) R
    {
        bool pass = true;
        std::string wit;
        for (int r = 0; r < Gate::dim && pass; ++r)
            for (int c = 0; c < Gate::dim && pass; ++c) {
                const LPoly& hr_a = h.diag[static_cast<std::size_t>(r / 4)];
                const LPoly& hr_b = h.diag[static_cast<std::size_t>(r % 4)];
                const LPoly& hc_a = h.diag[static_cast<std::size_t>(c / 4)];
                const LPoly& hc_b = h.diag[static_cast<std::size_t>(c % 4)];
                YExt lhs = R.at(r, c) * YExt(hc_a * hc_b);
                YExt rhs = YExt(hr_a * hr_b) * R.at(r, c);
                if (!(lhs == rhs)) {
                    pass = false;
                    wit = "entry " + pair_name(r) + "<-" + pair_name(c);
                }
            }
        add("2.1a commutation with h(x)h", pass, wit);
    }

    Gate Rinv;
    bool have_inv = true;
    try {
        Rinv = invert_R(R);
    } catch (const Error&) {
        have_inv = false;
    }

    // (b) tr_2((id (x) h) R^{±1}) = id
    auto check_trace = [&](const Gate& g, const char* tag) {
        bool pass = true;
        std::string wit;
        auto N = partial_trace2(g, h);
        for (int a = 0; a < 4 && pass; ++a)
            for (int b = 0; b < 4 && pass; ++b) {
                bool ok = a == b ? N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].is_one()
                                 : N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].is_zero();
                if (!ok) {
                    pass = false;
                    wit = std::string("entry (") + std::to_string(a + 1) + "," +
                          std::to_string(b + 1) + ") = " +
                          N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].str();
                }
            }
        add(std::string("2.1b partial trace, ") + tag, pass, wit);
    };
    check_trace(R, "R");
    if (have_inv)
        check_trace(Rinv, "R^-1");
    else
        add("2.1b partial trace, R^-1", false, "cubic inverse candidate failed verification");

    // (c) (R^-1)^left ∘ ((id (x) h) R (h^-1 (x) id))^right = id
    if (have_inv) {
        bool pass = true;
        std::string wit;
        try {
            Enhancement hinv = h.inverse();
            Gate mid;
            for (int r = 0; r < Gate::dim; ++r)
                for (int c = 0; c < Gate::dim; ++c) {
                    const YExt& v = R.at(r, c);
                    if (v.is_zero()) continue;
                    // left-multiply by id(x)h, right-multiply by h^-1(x)id
                    mid.at(r, c) = YExt(h.diag[static_cast<std::size_t>(r % 4)] *
                                        hinv.diag[static_cast<std::size_t>(c / 4)]) * v;
                }
            Gate prod = rotate(Rinv, RotDir::left).compose(rotate(mid, RotDir::right));
            if (!prod.is_identity()) {
                pass = false;
                for (int r = 0; r < Gate::dim && wit.empty(); ++r)
                    for (int c = 0; c < Gate::dim && wit.empty(); ++c) {
                        const YExt& v = prod.at(r, c);
                        bool ok = r == c ? v.is_one() : v.is_zero();
                        if (!ok) wit = "entry " + pair_name(r) + "<-" + pair_name(c) + " = " + v.str();
                    }
            }
        } catch (const Error& e) {
            pass = false;
            wit = e.what();
        }
        add("2.1c rotation identity", pass, wit);
    } else {
        add("2.1c rotation identity", false, "cubic inverse candidate failed verification");
    }

    // (d) Yang-Baxter on V^{(x)3}
    {
        Op3 r12 = embed3(R, 1), r23 = embed3(R, 2);
        Op3 lhs = mul3(mul3(r12, r23), r12);
        Op3 rhs = mul3(mul3(r23, r12), r23);
        bool pass = lhs == rhs;
        std::string wit;
        if (!pass) {
            for (const auto& [rc, v] : lhs) {
                auto it = rhs.find(rc);
                if (it == rhs.end() || !(it->second == v)) {
                    wit = "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ")";
                    break;
                }
            }
            if (wit.empty()) wit = "rhs has extra entries";
        }
        add("2.1d Yang-Baxter", pass, wit);
    }
    return rep;
}

} // namespace lgkit
