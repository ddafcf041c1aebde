#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wmn/rational.hpp"
#include "wmn/weight.hpp"

namespace wmn {

/// Basis monomial x^alpha y_mu of R = F[x_1..x_m] (x) Lambda(y_1..y_n).
/// mu is a bitmask over [1,n]; bit s-1 set means y_s is a factor, stored
/// in increasing order (the canonical form).
struct SuperMonomial {
    std::vector<int> alpha;
    std::uint32_t mu = 0;

    SuperMonomial() = default;
    SuperMonomial(std::vector<int> a, std::uint32_t u) : alpha(std::move(a)), mu(u) {}
    static SuperMonomial one(int m) { return SuperMonomial(std::vector<int>(m, 0), 0); }

    int m() const { return static_cast<int>(alpha.size()); }
    int alpha_norm() const { int s = 0; for (int a : alpha) s += a; return s; }
    int mu_size() const { return std::popcount(mu); }
    int degree() const { return alpha_norm() + mu_size(); }
    int parity() const { return mu_size() & 1; }

    Weight weight(int n) const {
        Weight w(m(), n);
        w.eps = alpha;
        for (int s = 0; s < n; ++s) if (mu >> s & 1) w.del[s] = 1;
        return w;
    }

    bool operator==(const SuperMonomial& o) const { return alpha == o.alpha && mu == o.mu; }
    // graded, then lexicographic on (alpha, mu)
    bool operator<(const SuperMonomial& o) const {
        int d = degree(), e = o.degree();
        if (d != e) return d < e;
        if (alpha != o.alpha) return alpha < o.alpha;
        return mu < o.mu;
    }
};

/// Sparse polynomial in R with exact rational coefficients; no zero terms stored.
class SuperPolynomial {
public:
    std::map<SuperMonomial, Rat> terms;

    SuperPolynomial() = default;
    explicit SuperPolynomial(const SuperMonomial& mono, Rat c = 1) {
        if (c != 0) terms.emplace(mono, std::move(c));
    }
    static SuperPolynomial zero() { return {}; }
    static SuperPolynomial constant(int m, Rat c) { return SuperPolynomial(SuperMonomial::one(m), std::move(c)); }
    static SuperPolynomial x(int m, int i) {
        SuperMonomial mo = SuperMonomial::one(m);
        mo.alpha[i - 1] = 1;
        return SuperPolynomial(mo);
    }
    static SuperPolynomial y(int m, int s) {
        SuperMonomial mo = SuperMonomial::one(m);
        mo.mu = 1u << (s - 1);
        return SuperPolynomial(mo);
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const SuperMonomial& mono, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(mono);
        if (it == terms.end()) { terms.emplace(mono, c); return; }
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }

    SuperPolynomial& operator+=(const SuperPolynomial& o) {
        for (auto& [mo, c] : o.terms) add_term(mo, c);
        return *this;
    }
    SuperPolynomial& operator-=(const SuperPolynomial& o) {
        for (auto& [mo, c] : o.terms) add_term(mo, -c);
        return *this;
    }
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { a += b; return a; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { a -= b; return a; }
    friend SuperPolynomial operator*(const Rat& c, const SuperPolynomial& p) {
        SuperPolynomial r;
        if (c == 0) return r;
        for (auto& [mo, v] : p.terms) r.terms.emplace(mo, c * v);
        return r;
    }
    bool operator==(const SuperPolynomial& o) const { return terms == o.terms; }

    bool is_degree_homogeneous(int* deg = nullptr) const {
        int d = -1;
        for (auto& [mo, c] : terms) {
            if (d == -1) d = mo.degree();
            else if (mo.degree() != d) return false;
        }
        if (deg) *deg = d;
        return true;
    }
    bool is_parity_homogeneous(int* par = nullptr) const {
        int p = -1;
        for (auto& [mo, c] : terms) {
            if (p == -1) p = mo.parity();
            else if (mo.parity() != p) return false;
        }
        if (par) *par = p;
        return true;
    }
    SuperPolynomial parity_part(int p) const {
        SuperPolynomial r;
        for (auto& [mo, c] : terms) if (mo.parity() == p) r.terms.emplace(mo, c);
        return r;
    }

    std::string str() const;
};

// sign of merging two increasing index sets: (-1)^{#inversions}; 0 overlap assumed checked
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    while (a) {
        std::uint32_t low = a & -a;  // lowest set bit of a
        inv += std::popcount(b & (low - 1));
        a ^= low;
    }
    return (inv & 1) ? -1 : 1;
}

inline SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g) {
    SuperPolynomial r;
    for (auto& [a, ca] : f.terms)
        for (auto& [b, cb] : g.terms) {
            if (a.mu & b.mu) continue;  // y_s^2 = 0
            SuperMonomial mo = a;
            for (int i = 0; i < a.m(); ++i) mo.alpha[i] += b.alpha[i];
            mo.mu = a.mu | b.mu;
            int sgn = merge_sign(a.mu, b.mu);
            r.add_term(mo, sgn > 0 ? ca * cb : -(ca * cb));
        }
    return r;
}

inline SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) { return mul(a, b); }

inline SuperPolynomial partial_x(int i, const SuperPolynomial& f) {
    if (f.terms.empty()) return {};
    if (i < 1 || i > f.terms.begin()->first.m()) throw std::out_of_range("partial_x index");
    SuperPolynomial r;
    for (auto& [mo, c] : f.terms) {
        if (mo.alpha[i - 1] == 0) continue;
        SuperMonomial d = mo;
        d.alpha[i - 1] -= 1;
        r.add_term(d, c * mo.alpha[i - 1]);
    }
    return r;
}

// odd derivation: D_t(y_mu) = (-1)^{#{s in mu : s < t}} y_{mu \ t}
inline SuperPolynomial partial_y(int t, const SuperPolynomial& f) {
    SuperPolynomial r;
    for (auto& [mo, c] : f.terms) {
        if (!(mo.mu >> (t - 1) & 1)) continue;
        SuperMonomial d = mo;
        d.mu &= ~(1u << (t - 1));
        int before = std::popcount(mo.mu & ((1u << (t - 1)) - 1));
        r.add_term(d, (before & 1) ? -c : c);
    }
    return r;
}

// partial^alpha of the degree conventions: product of partial_x powers
inline SuperPolynomial apply_partial_alpha(const std::vector<int>& alpha, SuperPolynomial f) {
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int k = 0; k < alpha[i]; ++k) f = partial_x(static_cast<int>(i) + 1, f);
    return f;
}

// D_eta = D_{i_1} ... D_{i_k} for eta = {i_1 < ... < i_k}; leftmost factor applied last
inline SuperPolynomial apply_d_eta(std::uint32_t eta, SuperPolynomial f) {
    for (int t = 32; t >= 1; --t)
        if (eta >> (t - 1) & 1) f = partial_y(t, f);
    return f;
}

// kappa <= alpha componentwise
inline bool leq_multi(const std::vector<int>& kappa, const std::vector<int>& alpha) {
    for (size_t i = 0; i < alpha.size(); ++i) if (kappa[i] > alpha[i]) return false;
    return true;
}

inline Int C_multi(const std::vector<int>& alpha, const std::vector<int>& kappa) {
    Int r = 1;
    for (size_t i = 0; i < alpha.size(); ++i) r *= binomial(alpha[i], kappa[i]);
    return r;
}

inline Int P_multi(const std::vector<int>& alpha, const std::vector<int>& kappa) {
    Int r = 1;
    for (size_t i = 0; i < alpha.size(); ++i) r *= falling(alpha[i], kappa[i]);
    return r;
}

// all monomials of total degree exactly d, in the canonical order
inline std::vector<SuperMonomial> enumerate_monomials(int d, int m, int n) {
    std::vector<SuperMonomial> out;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t u = 0; u < (1u << n); ++u) masks.push_back(u);
    std::vector<int> alpha(m, 0);
    // recursive enumeration of alpha with |alpha| = d - |mu|
    auto rec = [&](auto&& self, int pos, int rem, std::uint32_t mu) -> void {
        if (pos == m) {
            if (rem == 0) out.emplace_back(alpha, mu);
            return;
        }
        for (int a = 0; a <= rem; ++a) {
            alpha[pos] = a;
            self(self, pos + 1, rem - a, mu);
        }
        alpha[pos] = 0;
    };
    for (std::uint32_t mu : masks) {
        int k = std::popcount(mu);
        if (k > d) continue;
        rec(rec, 0, d - k, mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string SuperPolynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mo, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::ostringstream body;
        for (int i = 0; i < mo.m(); ++i) {
            if (mo.alpha[i] == 0) continue;
            if (body.tellp() > 0) body << "*";
            body << "x" << (i + 1);
            if (mo.alpha[i] > 1) body << "^" << mo.alpha[i];
        }
        for (int s = 0; s < 32; ++s)
            if (mo.mu >> s & 1) {
                if (body.tellp() > 0) body << "*";
                body << "y" << (s + 1);
            }
        if (body.tellp() == 0) os << a;
        else if (a == 1) os << body.str();
        else os << a << "*" << body.str();
    }
    return os.str();
}

} // namespace wmn
