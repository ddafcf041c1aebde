#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace wmn {

/// Integral weight of gl(m|n) in the (eps_1..eps_m, del_1..del_n) basis.
struct Weight {
    std::vector<int> eps;
    std::vector<int> del;

    Weight() = default;
    Weight(int m, int n) : eps(m, 0), del(n, 0) {}
    Weight(std::vector<int> e, std::vector<int> d) : eps(std::move(e)), del(std::move(d)) {}

    int m() const { return static_cast<int>(eps.size()); }
    int n() const { return static_cast<int>(del.size()); }

    // coordinate sum; invariant under all gl(m|n) roots
    int total() const {
        return std::accumulate(eps.begin(), eps.end(), 0) +
               std::accumulate(del.begin(), del.end(), 0);
    }

    // parity of any weight vector of this weight: sum of delta coordinates mod 2,
    // possibly offset by a per-module convention
    int delta_sum() const { return std::accumulate(del.begin(), del.end(), 0); }

    bool is_zero() const {
        for (int v : eps) if (v != 0) return false;
        for (int v : del) if (v != 0) return false;
        return true;
    }

    bool is_dominant() const {
        for (size_t i = 0; i + 1 < eps.size(); ++i) if (eps[i] < eps[i + 1]) return false;
        for (size_t j = 0; j + 1 < del.size(); ++j) if (del[j] < del[j + 1]) return false;
        return true;
    }

    auto operator<=>(const Weight&) const = default;

    Weight& operator+=(const Weight& o) {
        for (size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
        for (size_t j = 0; j < del.size(); ++j) del[j] += o.del[j];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (size_t i = 0; i < eps.size(); ++i) eps[i] -= o.eps[i];
        for (size_t j = 0; j < del.size(); ++j) del[j] -= o.del[j];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { a += b; return a; }
    friend Weight operator-(Weight a, const Weight& b) { a -= b; return a; }
    friend Weight operator-(const Weight& a) {
        Weight r(a.m(), a.n());
        for (int i = 0; i < a.m(); ++i) r.eps[i] = -a.eps[i];
        for (int j = 0; j < a.n(); ++j) r.del[j] = -a.del[j];
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < m(); ++i) os << (i ? "," : "") << eps[i];
        os << "|";
        for (int j = 0; j < n(); ++j) os << (j ? "," : "") << del[j];
        os << ")";
        return os.str();
    }
};

inline Weight eps_weight(int m, int n, int i) { Weight w(m, n); w.eps[i - 1] = 1; return w; }
inline Weight del_weight(int m, int n, int s) { Weight w(m, n); w.del[s - 1] = 1; return w; }

// weight of the a-th basis direction of the natural module, a in [1, m+n]
inline Weight unit_weight(int m, int n, int a) {
    return a <= m ? eps_weight(m, n, a) : del_weight(m, n, a - m);
}

// omega_k: 0, eps_1+..+eps_k (k <= m), eps_1+..+eps_m + (k-m) del_1 (k > m)
inline Weight omega_weight(int m, int n, int k) {
    Weight w(m, n);
    for (int i = 0; i < std::min(k, m); ++i) w.eps[i] = 1;
    if (k > m) w.del[0] = k - m;
    return w;
}

// theta_q = sum eps_i - sum del_j - q del_n
inline Weight theta_weight(int m, int n, int q) {
    Weight w(m, n);
    for (int i = 0; i < m; ++i) w.eps[i] = 1;
    for (int j = 0; j < n; ++j) w.del[j] = -1;
    w.del[n - 1] -= q;
    return w;
}

// the semi-infinite weight E = sum eps_i - sum del_j
inline Weight script_e_weight(int m, int n) { return theta_weight(m, n, 0); }

// longest Weyl element of gl(m) x gl(n): reverses both coordinate groups
inline Weight w0_action(const Weight& w) {
    Weight r = w;
    std::reverse(r.eps.begin(), r.eps.end());
    std::reverse(r.del.begin(), r.del.end());
    return r;
}

struct ExceptionalTag {
    enum class Kind { Omega, Theta, NonExceptional } kind = Kind::NonExceptional;
    int index = -1;

    static ExceptionalTag omega(int k) { return {Kind::Omega, k}; }
    static ExceptionalTag theta(int q) { return {Kind::Theta, q}; }
    static ExceptionalTag none() { return {}; }

    bool operator==(const ExceptionalTag&) const = default;
    std::string str() const {
        switch (kind) {
            case Kind::Omega: return "omega:" + std::to_string(index);
            case Kind::Theta: return "theta:" + std::to_string(index);
            default: return "non-exceptional";
        }
    }
};

// Total classification of a weight against the two exceptional families.
// omega_0 = 0 and theta_q never collide for m, n >= 1.
inline ExceptionalTag exceptional_type(const Weight& w) {
    const int m = w.m(), n = w.n();
    if (w.is_zero()) return ExceptionalTag::omega(0);
    for (int k = 1; k <= m; ++k) if (w == omega_weight(m, n, k)) return ExceptionalTag::omega(k);
    if (m >= 1 && n >= 1 && w.del[0] > 0 && w == omega_weight(m, n, m + w.del[0]))
        return ExceptionalTag::omega(m + w.del[0]);
    if (n >= 1) {
        int q = -1 - w.del[n - 1];
        if (q >= 0 && w == theta_weight(m, n, q)) return ExceptionalTag::theta(q);
    }
    return ExceptionalTag::none();
}

} // namespace wmn
