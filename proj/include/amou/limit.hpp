#pragma once

#include <map>
#include <optional>
#include <utility>

#include "amou/algebra.hpp"

namespace amou {

// An element of the *-algebra F of infinite complex matrices with finitely
// many nonzero entries; indices are 1-based as in the matrix units e_{ij}.
class FMatrix {
public:
    FMatrix() = default;

    static FMatrix unit(int i, int j, cplx value = 1.0); // value * e_{ij}
    static FMatrix identity_n(int n);                    // i_n = sum e_{ii}
    static FMatrix shift(int n);                         // J_n = sum_{i<=n} e_{i,n+i}
    static FMatrix from_corner(const CMatrix& a);        // dense n x n corner

    FMatrix adjoint() const;
    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator*(const FMatrix& o) const; // e_{ij} e_{kl} = delta_{jk} e_{il}
    FMatrix operator*(cplx s) const;

    // Largest index appearing in the support (rows and columns jointly); 0 when empty.
    int order() const;
    CMatrix corner(int n) const;
    double norm(const Tolerance& tol = {}) const; // operator norm of the order-sized corner
    bool is_local_unitary(const Tolerance& tol = {}) const;

    const std::map<std::pair<int, int>, cplx>& support() const { return entries_; }

private:
    void put(int i, int j, cplx value); // drops exact zeros

    std::map<std::pair<int, int>, cplx> entries_;
};

// An element of the matricial inductive limit M_infty(V), stored trimmed to
// its order: the payload is the square level-o(v) representative and no
// further boundary row/column is zero. Equality of limit elements is payload
// equality after trimming.
class LimitElement {
public:
    LimitElement() = default;

    const AElement& payload() const { return payload_; }
    int order() const { return payload_.level_rows(); }
    const Algebra& algebra() const { return payload_.algebra(); }

    // Payload at level n >= order (zero-padded).
    AElement at_level(int n) const;

    friend LimitElement lift(const AElement& v, const Tolerance& tol);

private:
    AElement payload_;
};

// Canonicalize a square element: trim zero boundary rows/columns (every entry
// magnitude < 0.5 * eps) and record the order.
LimitElement lift(const AElement& v, const Tolerance& tol = {});

LimitElement add(const LimitElement& u, const LimitElement& v, const Tolerance& tol = {});
LimitElement adjoint(const LimitElement& v, const Tolerance& tol = {});
bool approx_equal(const LimitElement& u, const LimitElement& v, const Tolerance& tol);
bool is_positive(const LimitElement& v, const Tolerance& tol);

// a v b for a, b in F: embed everything at a common level and act.
LimitElement f_act(const FMatrix& a, const LimitElement& v, const FMatrix& b,
                   const Tolerance& tol = {});

// |v| = T_{o(v)}(|T_{o(v)}^{-1}(v)|); o(|v|) <= o(v).
LimitElement abs(const LimitElement& v, const Tolerance& tol = {});

// (v1, v2)_n^+ = v1 + J_n* v2 J_n; requires n >= o(v1), o(v2).
LimitElement pair_plus(const LimitElement& v1, const LimitElement& v2, int n,
                       const Tolerance& tol = {});
// sa_n(v) = i_n v J_n + J_n* v* i_n; requires n >= o(v).
LimitElement sa_n(const LimitElement& v, int n, const Tolerance& tol = {});

// inf{ k > 0 : (k e^n, k e^n)_n^+ + sa_n(v) positive } at n = o(v), by bisection.
double limit_norm(const LimitElement& v, const Tolerance& tol = {});

// Disjoint diagonal supports (r, s) with r u r = u and s v s = v, when the
// used index sets are disjoint.
std::optional<std::pair<FMatrix, FMatrix>> f_independent(const LimitElement& u,
                                                         const LimitElement& v,
                                                         const Tolerance& tol = {});

} // namespace amou
