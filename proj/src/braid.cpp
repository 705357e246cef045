#include "lgkit/braid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "lgkit/error.hpp"

namespace lgkit {

BraidWord parse_braid(const std::string& text) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    BraidWord b;
    int explicit_n = 0;
    std::string tok;
    bool first = true;
    int max_abs = 0;
    while (in >> tok) {
        if (first && tok.rfind("n=", 0) == 0) {
            first = false;
            try {
                std::size_t pos = 0;
                explicit_n = std::stoi(tok.substr(2), &pos);
                if (pos != tok.size() - 2 || explicit_n < 1)
                    fail(Errc::parse_error, "bad strand count '" + tok + "'");
            } catch (const Error&) {
                throw;
            } catch (...) {
                fail(Errc::parse_error, "bad strand count '" + tok + "'");
            }
            continue;
        }
        first = false;
        int v = 0;
        try {
            std::size_t pos = 0;
            v = std::stoi(tok, &pos);
            if (pos != tok.size()) fail(Errc::parse_error, "malformed token '" + tok + "'");
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(Errc::parse_error, "malformed token '" + tok + "'");
        }
        if (v == 0) fail(Errc::parse_error, "generator index 0 is not a braid letter");
        b.letters.push_back(v);
        max_abs = std::max(max_abs, std::abs(v));
    }
    b.strands = explicit_n > 0 ? explicit_n : max_abs + 1;
    if (max_abs >= b.strands)
        fail(Errc::parse_error, "letter " + std::to_string(max_abs) + " needs at least " +
                                    std::to_string(max_abs + 1) + " strands, got " +
                                    std::to_string(b.strands));
    return b;
}

int component_count(const BraidWord& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : b.letters) {
        int k = std::abs(letter) - 1;
        std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k) + 1]);
    }
    std::vector<bool> seen(static_cast<std::size_t>(b.strands), false);
    int cycles = 0;
    for (int s = 0; s < b.strands; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++cycles;
        int cur = s;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = perm[static_cast<std::size_t>(cur)];
        }
    }
    return cycles;
}

SparseOp SparseOp::identity(int strands) {
    if (strands < 1 || strands > 8)
        fail(Errc::resource_limit, "strand count " + std::to_string(strands) + " outside 1..8");
    SparseOp op(strands);
    for (uint32_t i = 0; i < op.dim(); ++i) op.m_.emplace(key(i, i), YExt(1));
    return op;
}

void SparseOp::set(uint32_t row, uint32_t col, YExt v) {
    if (v.is_zero()) m_.erase(key(row, col));
    else m_[key(row, col)] = std::move(v);
}

const YExt* SparseOp::find(uint32_t row, uint32_t col) const {
    auto it = m_.find(key(row, col));
    return it == m_.end() ? nullptr : &it->second;
}

bool SparseOp::is_identity() const {
    if (m_.size() != dim()) return false;
    for (const auto& [k, v] : m_) {
        if ((k >> 16) != (k & 0xffffu)) return false;
        if (!v.is_one()) return false;
    }
    return true;
}

bool operator==(const SparseOp& a, const SparseOp& b) {
    if (a.strands_ != b.strands_ || a.m_.size() != b.m_.size()) return false;
    for (const auto& [k, v] : a.m_) {
        auto it = b.m_.find(k);
        if (it == b.m_.end() || !(it->second == v)) return false;
    }
    return true;
}

SparseOp apply_gate(const SparseOp& op, const Gate& g, int site, int strands) {
    if (site < 1 || site >= strands)
        fail(Errc::site_out_of_range,
             "site " + std::to_string(site) + " on " + std::to_string(strands) + " strands");
    // digit shift of the pair (site, site+1); site 1 is most significant
    const int shift = 2 * (strands - site - 1);
    const uint32_t pair_mask = 0xfu << shift;

    // gate columns, indexed by the packed input pair
    std::array<std::vector<std::pair<int, const YExt*>>, 16> cols;
    for (int c = 0; c < Gate::dim; ++c) cols[static_cast<std::size_t>(c)] = g.column(c);

    SparseOp out(strands);
    std::unordered_map<uint32_t, YExt> acc;
    acc.reserve(op.entries().size() * 2);
    for (const auto& [k, v] : op.entries()) {
        uint32_t row = k >> 16, col = k & 0xffffu;
        uint32_t in_pair = (row & pair_mask) >> shift;
        uint32_t base = row & ~pair_mask;
        for (const auto& [out_pair, gv] : cols[in_pair]) {
            uint32_t new_row = base | (static_cast<uint32_t>(out_pair) << shift);
            acc[SparseOp::key(new_row, col)].add_mul(*gv, v);
        }
    }
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.set(k >> 16, k & 0xffffu, std::move(v));
    return out;
}

namespace {
const Gate& cached_R() {
    static const Gate R = build_R();
    return R;
}
const Gate& cached_Rinv() {
    static const Gate Ri = invert_R(cached_R());
    return Ri;
}
} // namespace

SparseOp rho(const BraidWord& b) {
    if (b.strands > 8)
        fail(Errc::resource_limit, "strand count " + std::to_string(b.strands) + " exceeds 8");
    if (b.letters.size() > 64)
        fail(Errc::resource_limit, "word length " + std::to_string(b.letters.size()) + " exceeds 64");
    for (int letter : b.letters)
        if (letter == 0 || std::abs(letter) >= b.strands)
            fail(Errc::parse_error, "letter " + std::to_string(letter) + " invalid in B_" +
                                        std::to_string(b.strands));
    SparseOp op = SparseOp::identity(b.strands);
    for (int letter : b.letters)
        op = apply_gate(op, letter > 0 ? cached_R() : cached_Rinv(), std::abs(letter), b.strands);
    return op;
}

CoeffTable lg_of_braid(const BraidWord& b) {
    SparseOp op = rho(b);
    const int n = b.strands;
    const Enhancement h = build_h();

    // weight of the traced digits d_2..d_n is a signed monomial
    struct Mono {
        int sign;
        int32_t e0x2, e1x2;
    };
    std::array<Mono, 4> hm{};
    for (int d = 0; d < 4; ++d) {
        const auto& t = h.diag[static_cast<std::size_t>(d)].terms()[0];
        hm[static_cast<std::size_t>(d)] = {sgn(t.c) < 0 ? -1 : 1, t.e0, t.e1};
    }

    std::array<YExt, 16> N{}; // 4x4 accumulator, N[a*4+b]
    const uint32_t rest_digits = static_cast<uint32_t>(n - 1);
    const int top_shift = 2 * (n - 1);
    for (const auto& [k, v] : op.entries()) {
        uint32_t row = k >> 16, col = k & 0xffffu;
        uint32_t row_rest = row & ((1u << top_shift) - 1u);
        uint32_t col_rest = col & ((1u << top_shift) - 1u);
        if (row_rest != col_rest) continue;
        uint32_t a = row >> top_shift, bidx = col >> top_shift;
        int sign = 1;
        int32_t e0 = 0, e1 = 0;
        uint32_t rest = row_rest;
        for (uint32_t d = 0; d < rest_digits; ++d) {
            const Mono& m = hm[rest & 3u];
            sign *= m.sign;
            e0 += m.e0x2;
            e1 += m.e1x2;
            rest >>= 2;
        }
        N[a * 4 + bidx].add_scaled(v, ArbInt(sign), e0, e1);
    }

    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c)
            if (a != c && !N[static_cast<std::size_t>(a * 4 + c)].is_zero())
                fail(Errc::not_scalar, "off-diagonal entry (" + std::to_string(a + 1) + "," +
                                           std::to_string(c + 1) + ") = " +
                                           N[static_cast<std::size_t>(a * 4 + c)].str());
    for (int a = 1; a < 4; ++a)
        if (!(N[static_cast<std::size_t>(a * 4 + a)] == N[0]))
            fail(Errc::not_scalar, "diagonal entries differ: " + N[0].str() + " vs " +
                                       N[static_cast<std::size_t>(a * 4 + a)].str());
    return to_coeff_table(N[0], component_count(b));
}

} // namespace lgkit
