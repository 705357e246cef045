#include "lgkit/mpoly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "lgkit/error.hpp"

namespace lgkit {

void MPoly::add(const ExpVec& alpha, const Rational& coeff) {
    if (static_cast<int>(alpha.size()) != nvars_)
        fail(Errc::domain, "exponent vector length mismatch");
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = c_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) c_.erase(it);
    }
}

Rational MPoly::coeff(const ExpVec& alpha) const {
    auto it = c_.find(alpha);
    return it == c_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const {
    int d = 0;
    for (const auto& [a, c] : c_)
        d = std::max(d, std::accumulate(a.begin(), a.end(), 0));
    return d;
}

bool MPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [a, c] : c_) {
        int s = std::accumulate(a.begin(), a.end(), 0);
        if (d < 0) d = s;
        else if (s != d) return false;
    }
    return true;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars_);
    ExpVec e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.c_) a.add(e, c);
    return a;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.c_ == b.c_; }

std::string MPoly::str(const std::vector<std::string>& var_names) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        os << abs(c).get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << '*';
            if (i < var_names.size()) os << var_names[i];
            else os << 'w' << i + 1;
            if (e[i] != 1) os << '^' << e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

void SymMat::set(int i, int j, const Rational& v) {
    a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] = v;
    a_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)] = v;
}

bool SymMat::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string SymMat::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        os << '[';
        for (int j = 0; j < n_; ++j) {
            os << at(i, j);
            if (j + 1 < n_) os << ',';
        }
        os << ']';
        if (i + 1 < n_) os << ',';
    }
    os << ']';
    return os.str();
}

std::vector<ExpVec> discrete_simplex(int m, int d) {
    std::vector<ExpVec> out;
    if (m <= 0 || d < 0) return out;
    ExpVec cur(static_cast<std::size_t>(m), 0);
    // lexicographic enumeration by recursion on the first coordinate
    struct Rec {
        int m;
        std::vector<ExpVec>& out;
        ExpVec& cur;
        void go(int pos, int rem) {
            if (pos == m - 1) {
                cur[static_cast<std::size_t>(pos)] = rem;
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                go(pos + 1, rem - v);
            }
        }
    } rec{m, out, cur};
    rec.go(0, d);
    return out;
}

} // namespace lgkit
