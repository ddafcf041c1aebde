#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wmn/superpoly.hpp"

namespace wmn {

/// One of the free-module generators of W(m,n): partial_i (even) or D_t (odd).
struct DerGen {
    bool odd = false;  // false: partial_idx, true: D_idx
    int idx = 1;       // 1-based

    int parity() const { return odd ? 1 : 0; }
    Weight weight(int m, int n) const {
        return odd ? -del_weight(m, n, idx) : -eps_weight(m, n, idx);
    }
    auto operator<=>(const DerGen&) const = default;
};

inline SuperPolynomial apply_gen(const DerGen& g, const SuperPolynomial& f) {
    return g.odd ? partial_y(g.idx, f) : partial_x(g.idx, f);
}

/// Finite sum  f partial_i + g D_t : the computational form of an element of W(m,n).
class WittElement {
public:
    std::map<DerGen, SuperPolynomial> terms;

    WittElement() = default;
    WittElement(SuperPolynomial f, DerGen g) {
        if (!f.is_zero()) terms.emplace(g, std::move(f));
    }
    static WittElement zero() { return {}; }
    static WittElement dx(int m, int i) { return WittElement(SuperPolynomial::constant(m, 1), DerGen{false, i}); }
    static WittElement dy(int m, int t) { return WittElement(SuperPolynomial::constant(m, 1), DerGen{true, t}); }

    bool is_zero() const { return terms.empty(); }

    void add_term(const DerGen& g, const SuperPolynomial& f) {
        if (f.is_zero()) return;
        auto it = terms.find(g);
        if (it == terms.end()) { terms.emplace(g, f); return; }
        it->second += f;
        if (it->second.is_zero()) terms.erase(it);
    }

    WittElement& operator+=(const WittElement& o) {
        for (auto& [g, f] : o.terms) add_term(g, f);
        return *this;
    }
    WittElement& operator-=(const WittElement& o) {
        for (auto& [g, f] : o.terms) add_term(g, Rat(-1) * f);
        return *this;
    }
    friend WittElement operator+(WittElement a, const WittElement& b) { a += b; return a; }
    friend WittElement operator-(WittElement a, const WittElement& b) { a -= b; return a; }
    friend WittElement operator*(const Rat& c, const WittElement& e) {
        WittElement r;
        for (auto& [g, f] : e.terms) r.add_term(g, c * f);
        return r;
    }
    bool operator==(const WittElement& o) const { return terms == o.terms; }

    // Z-degree k means every coefficient of a generator term has degree k+1.
    bool is_z_homogeneous(int* deg = nullptr) const {
        int d = INT32_MIN;
        for (auto& [g, f] : terms) {
            int fd;
            if (!f.is_degree_homogeneous(&fd)) return false;
            if (d == INT32_MIN) d = fd - 1;
            else if (fd - 1 != d) return false;
        }
        if (deg) *deg = d;
        return true;
    }
    // parity(f dX) = parity(f) xor parity(X)
    bool is_parity_homogeneous(int* par = nullptr) const {
        int p = -1;
        for (auto& [g, f] : terms) {
            int fp;
            if (!f.is_parity_homogeneous(&fp)) {
                // inspect term by term
                for (auto& [mo, c] : f.terms) {
                    int tp = mo.parity() ^ g.parity();
                    if (p == -1) p = tp;
                    else if (tp != p) return false;
                }
                continue;
            }
            int tp = fp ^ g.parity();
            if (p == -1) p = tp;
            else if (tp != p) return false;
        }
        if (par) *par = p;
        return true;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [g, f] : terms) {
            if (!first) os << " + ";
            first = false;
            os << "(" << f.str() << ")*" << (g.odd ? "D" : "d") << g.idx;
        }
        return os.str();
    }
};

inline SuperPolynomial apply(const WittElement& e, const SuperPolynomial& f) {
    SuperPolynomial r;
    for (auto& [g, coeff] : e.terms) r += mul(coeff, apply_gen(g, f));
    return r;
}

// [fA, gB] = f A(g) B - (-1)^{p(fA) p(gB)} g B(f) A  for parity-homogeneous f, g;
// the second-order parts cancel because the basic derivations super-commute.
inline WittElement bracket(const WittElement& e1, const WittElement& e2) {
    WittElement r;
    for (auto& [a, fa] : e1.terms)
        for (auto& [b, fb] : e2.terms)
            for (int pf = 0; pf <= 1; ++pf)
                for (int pg = 0; pg <= 1; ++pg) {
                    SuperPolynomial f = fa.parity_part(pf), g = fb.parity_part(pg);
                    if (f.is_zero() || g.is_zero()) continue;
                    int pe = pf ^ a.parity(), pfc = pg ^ b.parity();
                    r.add_term(b, mul(f, apply_gen(a, g)));
                    SuperPolynomial back = mul(g, apply_gen(b, f));
                    r.add_term(a, ((pe & pfc) ? Rat(1) : Rat(-1)) * back);
                }
    return r;
}

// basis {x^alpha y_mu partial_j, x^alpha y_mu D_t : |alpha| + |mu| = i+1}, monomial-major
inline std::vector<WittElement> basis_of_gi(int i, int m, int n) {
    if (i < -1) throw std::invalid_argument("basis_of_gi: i >= -1 required");
    std::vector<WittElement> out;
    for (const SuperMonomial& mo : enumerate_monomials(i + 1, m, n)) {
        SuperPolynomial f{mo};
        for (int j = 1; j <= m; ++j) out.emplace_back(f, DerGen{false, j});
        for (int t = 1; t <= n; ++t) out.emplace_back(f, DerGen{true, t});
    }
    return out;
}

/// Element of gl(m|n) as an (m+n)x(m+n) exact matrix with the block parity structure.
struct GlMatrix {
    int m = 0, n = 0;
    MatQ a;

    GlMatrix() = default;
    GlMatrix(int m_, int n_) : m(m_), n(n_), a(MatQ::Zero(m_ + n_, m_ + n_)) {}
    static GlMatrix unit(int m, int n, int r, int c) {
        GlMatrix g(m, n);
        g.a(r - 1, c - 1) = 1;
        return g;
    }

    int entry_parity(int r, int c) const { return (r > m ? 1 : 0) ^ (c > m ? 1 : 0); }  // 1-based

    Rat supertrace() const {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += a(i, i);
        for (int j = 0; j < n; ++j) s -= a(m + j, m + j);
        return s;
    }

    // block super transpose per the dual-module convention
    GlMatrix super_transpose() const {
        GlMatrix r(m, n);
        for (int i = 1; i <= m + n; ++i)
            for (int j = 1; j <= m + n; ++j) {
                Rat v = a(i - 1, j - 1);
                if (i > m && j <= m) v = -v;  // C block picks up a sign
                r.a(j - 1, i - 1) = v;
            }
        return r;
    }

    bool operator==(const GlMatrix& o) const { return m == o.m && n == o.n && a == o.a; }
};

// super commutator of parity-homogeneous matrices
inline GlMatrix super_commutator(const GlMatrix& x, int px, const GlMatrix& y, int py) {
    GlMatrix r(x.m, x.n);
    r.a = x.a * y.a;
    if (px & py) r.a += y.a * x.a; else r.a -= y.a * x.a;
    return r;
}

// x_i d_j -> E_ij, x_i D_s -> E_{i,m+s}, y_r d_j -> E_{m+r,j}, y_r D_s -> E_{m+r,m+s}
inline GlMatrix g0_to_gl(const WittElement& e, int m, int n) {
    GlMatrix g(m, n);
    for (auto& [gen, f] : e.terms) {
        int col = gen.odd ? m + gen.idx : gen.idx;
        for (auto& [mo, c] : f.terms) {
            if (mo.degree() != 1) throw std::invalid_argument("g0_to_gl: element not in g0");
            int row;
            if (mo.mu) row = m + std::countr_zero(mo.mu) + 1;
            else {
                row = 0;
                for (int i = 0; i < m; ++i) if (mo.alpha[i] == 1) row = i + 1;
            }
            g.a(row - 1, col - 1) += c;
        }
    }
    return g;
}

inline WittElement gl_to_g0(const GlMatrix& g) {
    WittElement e;
    const int m = g.m, n = g.n;
    for (int r = 1; r <= m + n; ++r)
        for (int c = 1; c <= m + n; ++c) {
            Rat v = g.a(r - 1, c - 1);
            if (v == 0) continue;
            SuperPolynomial f = r <= m ? SuperPolynomial::x(m, r) : SuperPolynomial::y(m, r - m);
            DerGen gen = c <= m ? DerGen{false, c} : DerGen{true, c - m};
            e.add_term(gen, v * f);
        }
    return e;
}

// canonical basis of g0 in E_{ab} order (a-major), as Witt elements
inline std::vector<WittElement> g0_basis(int m, int n) {
    std::vector<WittElement> out;
    for (int a = 1; a <= m + n; ++a)
        for (int b = 1; b <= m + n; ++b)
            out.push_back(gl_to_g0(GlMatrix::unit(m, n, a, b)));
    return out;
}

inline int gl_unit_parity(int m, int n, int a, int b) { return (a > m ? 1 : 0) ^ (b > m ? 1 : 0); }

// decompose a g0 element over the E_{ab} basis; coefficient of E_{ab}
inline MatQ g0_coords(const WittElement& e, int m, int n) { return g0_to_gl(e, m, n).a; }

// str(ad X o ad Y |_{g0}) for X in g1, Y in g_{-1}
inline Rat supertrace_ad_pair(const WittElement& x, const WittElement& y, int m, int n) {
    {
        int dx, dy;
        if (!x.is_z_homogeneous(&dx) || dx != 1) throw std::invalid_argument("supertrace_ad_pair: X not in g1");
        if (!y.is_z_homogeneous(&dy) || dy != -1) throw std::invalid_argument("supertrace_ad_pair: Y not in g-1");
    }
    Rat s = 0;
    for (int a = 1; a <= m + n; ++a)
        for (int b = 1; b <= m + n; ++b) {
            WittElement z = gl_to_g0(GlMatrix::unit(m, n, a, b));
            WittElement img = bracket(x, bracket(y, z));
            Rat diag = g0_coords(img, m, n)(a - 1, b - 1);
            if (gl_unit_parity(m, n, a, b)) s -= diag; else s += diag;
        }
    return s;
}

// the semi-infinite character E on g0: E(x_i d_j) = delta_ij, E(y_r D_t) = -delta_rt
inline Rat script_e_of(const WittElement& e, int m, int n) {
    MatQ c = g0_coords(e, m, n);
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += c(i, i);
    for (int t = 0; t < n; ++t) s -= c(m + t, m + t);
    return s;
}

} // namespace wmn
