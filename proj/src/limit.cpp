#include "amou/limit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace amou {

void FMatrix::put(int i, int j, cplx value) {
    if (i < 1 || j < 1) fail("ShapeMismatch", "FMatrix indices are 1-based");
    if (value == cplx(0.0))
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

FMatrix FMatrix::unit(int i, int j, cplx value) {
    FMatrix a;
    a.put(i, j, value);
    return a;
}

FMatrix FMatrix::identity_n(int n) {
    FMatrix a;
    for (int i = 1; i <= n; ++i) a.put(i, i, 1.0);
    return a;
}

FMatrix FMatrix::shift(int n) {
    FMatrix a;
    for (int i = 1; i <= n; ++i) a.put(i, n + i, 1.0);
    return a;
}

FMatrix FMatrix::from_corner(const CMatrix& m) {
    FMatrix a;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != cplx(0.0)) a.put(i + 1, j + 1, m(i, j));
    return a;
}

FMatrix FMatrix::adjoint() const {
    FMatrix a;
    for (const auto& [ij, z] : entries_) a.put(ij.second, ij.first, std::conj(z));
    return a;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    FMatrix a = *this;
    for (const auto& [ij, z] : o.entries_) {
        auto it = a.entries_.find(ij);
        const cplx sum = (it == a.entries_.end() ? z : it->second + z);
        a.put(ij.first, ij.second, sum);
    }
    return a;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    FMatrix a;
    for (const auto& [ij, z] : entries_)
        for (const auto& [kl, w] : o.entries_) {
            if (ij.second != kl.first) continue;
            auto it = a.entries_.find({ij.first, kl.second});
            const cplx sum = (it == a.entries_.end() ? z * w : it->second + z * w);
            a.put(ij.first, kl.second, sum);
        }
    return a;
}

FMatrix FMatrix::operator*(cplx s) const {
    FMatrix a;
    for (const auto& [ij, z] : entries_) a.put(ij.first, ij.second, z * s);
    return a;
}

int FMatrix::order() const {
    int n = 0;
    for (const auto& [ij, z] : entries_) n = std::max({n, ij.first, ij.second});
    return n;
}

CMatrix FMatrix::corner(int n) const {
    CMatrix m(n, n);
    for (const auto& [ij, z] : entries_) {
        if (ij.first > n || ij.second > n)
            fail("ShapeMismatch", "FMatrix support exceeds requested corner");
        m(ij.first - 1, ij.second - 1) = z;
    }
    return m;
}

double FMatrix::norm(const Tolerance& tol) const { return op_norm(corner(order()), tol); }

bool FMatrix::is_local_unitary(const Tolerance& tol) const {
    const int n = order();
    if (n == 0) return false;
    const CMatrix a = corner(n);
    const CMatrix id = CMatrix::identity(n);
    return (a.adjoint() * a - id).frobenius() <= tol.scaled(1.0 + a.frobenius()) &&
           (a * a.adjoint() - id).frobenius() <= tol.scaled(1.0 + a.frobenius());
}

namespace {

// Grid row/col r (0-based) of a square element is zero when every entry in it
// stays below half the trimming tolerance.
bool grid_index_zero(const AElement& v, int r, double cutoff) {
    for (int i = 0; i < v.block_count(); ++i) {
        const CMatrix& b = v.block(i);
        const int ni = v.algebra().block_size(i);
        for (int a = 0; a < ni; ++a) {
            for (int c = 0; c < b.cols(); ++c)
                if (std::abs(b(r * ni + a, c)) >= cutoff) return false;
            for (int rr = 0; rr < b.rows(); ++rr)
                if (std::abs(b(rr, r * ni + a)) >= cutoff) return false;
        }
    }
    return true;
}

} // namespace

AElement LimitElement::at_level(int n) const {
    if (n < order()) fail("LevelTooSmall", "at_level below the element order");
    return payload_.embedded(n, n);
}

LimitElement lift(const AElement& v, const Tolerance& tol) {
    if (!v.square_level()) fail("ShapeMismatch", "lift needs a square level");
    const double cutoff = 0.5 * tol.eps;
    int n = v.level_rows();
    AElement p = v;
    while (n > 0 && grid_index_zero(p, n - 1, cutoff)) {
        p = p.truncated(n - 1, n - 1);
        --n;
    }
    LimitElement out;
    out.payload_ = std::move(p);
    return out;
}

LimitElement add(const LimitElement& u, const LimitElement& v, const Tolerance& tol) {
    const int n = std::max(u.order(), v.order());
    return lift(u.at_level(n) + v.at_level(n), tol);
}

LimitElement adjoint(const LimitElement& v, const Tolerance& tol) {
    return lift(v.payload().adjoint(), tol);
}

bool approx_equal(const LimitElement& u, const LimitElement& v, const Tolerance& tol) {
    const int n = std::max(u.order(), v.order());
    if (n == 0) return true;
    return approx_equal(u.at_level(n), v.at_level(n), tol);
}

bool is_positive(const LimitElement& v, const Tolerance& tol) {
    return is_positive(v.payload(), tol);
}

LimitElement f_act(const FMatrix& a, const LimitElement& v, const FMatrix& b,
                   const Tolerance& tol) {
    const int n = std::max({a.order(), v.order(), b.order()});
    if (n == 0) return lift(AElement(v.algebra(), 0, 0), tol);
    return lift(scalar_act(a.corner(n), v.at_level(n), b.corner(n)), tol);
}

LimitElement abs(const LimitElement& v, const Tolerance& tol) {
    return lift(abs(v.payload(), tol), tol);
}

LimitElement pair_plus(const LimitElement& v1, const LimitElement& v2, int n,
                       const Tolerance& tol) {
    if (n < v1.order() || n < v2.order())
        fail("LevelTooSmall", "pair_plus needs n >= o(v1), o(v2)");
    const FMatrix jn = FMatrix::shift(n);
    return add(v1, f_act(jn.adjoint(), v2, jn, tol), tol);
}

LimitElement sa_n(const LimitElement& v, int n, const Tolerance& tol) {
    if (n < v.order()) fail("LevelTooSmall", "sa_n needs n >= o(v)");
    const FMatrix jn = FMatrix::shift(n);
    const FMatrix in = FMatrix::identity_n(n);
    const LimitElement upper = f_act(in, v, jn, tol);
    const LimitElement lower = f_act(jn.adjoint(), adjoint(v, tol), in, tol);
    return add(upper, lower, tol);
}

double limit_norm(const LimitElement& v, const Tolerance& tol) {
    const int n = v.order();
    if (n == 0) return 0.0;
    const double bound = norm(v.payload(), tol);
    if (bound == 0.0) return 0.0;

    const LimitElement e_n = lift(AElement::unit(v.algebra(), n), tol);
    auto dilation_positive = [&](double k) {
        const LimitElement ke = lift(e_n.payload() * cplx(k), tol);
        const LimitElement d = add(pair_plus(ke, ke, n, tol), sa_n(v, n, tol), tol);
        return is_positive(d, tol);
    };

    double lo = 0.0, hi = 2.0 * bound;
    for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (dilation_positive(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::optional<std::pair<FMatrix, FMatrix>> f_independent(const LimitElement& u,
                                                         const LimitElement& v,
                                                         const Tolerance& tol) {
    const double cutoff = 0.5 * tol.eps;
    auto used = [&](const LimitElement& w) {
        std::set<int> s;
        for (int r = 0; r < w.order(); ++r)
            if (!grid_index_zero(w.payload(), r, cutoff)) s.insert(r + 1);
        return s;
    };
    const std::set<int> iu = used(u), iv = used(v);
    for (int i : iu)
        if (iv.count(i)) return std::nullopt;
    FMatrix r, s;
    for (int i : iu) r = r + FMatrix::unit(i, i);
    for (int j : iv) s = s + FMatrix::unit(j, j);
    return std::make_pair(r, s);
}

} // namespace amou
