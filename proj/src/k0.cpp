#include "amou/k0.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace amou {

namespace {

constexpr long long kRankCap = 1ll << 40;

long long add_checked(long long a, long long b) {
    const long long s = a + b;
    if (std::llabs(s) > kRankCap) fail("Overflow", "K0 rank arithmetic out of range");
    return s;
}

void require_same_algebra(const Algebra& a, const Algebra& b) {
    if (a != b) fail("AlgebraMismatch", "K0 data over different algebras");
}

} // namespace

K0Class class_of(const OrderProjection& p, const Tolerance& tol) {
    const std::vector<int> r = rank_vector(p, tol);
    K0Class c{p.algebra(), {}};
    c.ranks.assign(r.begin(), r.end());
    return c;
}

K0Class class_add(const K0Class& a, const K0Class& b) {
    require_same_algebra(a.algebra, b.algebra);
    K0Class c{a.algebra, a.ranks};
    for (std::size_t i = 0; i < c.ranks.size(); ++i)
        c.ranks[i] = add_checked(c.ranks[i], b.ranks[i]);
    return c;
}

K0Group k0_of(const Algebra& a, RandomGen& rng, const Tolerance& tol) {
    K0Group g;
    g.algebra = a;
    g.order_unit.assign(a.block_sizes.begin(), a.block_sizes.end());

    // Finiteness gate for properness: e^n finite for sampled n.
    g.finiteness_gate = true;
    for (int n = 1; n <= 3; ++n) {
        RandomGen sub = rng.fork(std::uint64_t(n));
        if (!is_finite(OrderProjection::unit(a, n), sub, tol, 5)) {
            g.finiteness_gate = false;
            break;
        }
    }

    // Constructive checks on generators: g_i = [(p_i, 0)] with rank e_i.
    const int k = a.block_count();
    std::vector<K0Element> gens;
    for (int i = 0; i < k; ++i) {
        K0Class c{a, std::vector<long long>(std::size_t(k), 0)};
        c.ranks[std::size_t(i)] = 1;
        const OrderProjection rep = synthesize_projection(c);
        if (class_of(rep, tol).ranks != c.ranks)
            fail("Internal", "generator representative has the wrong class");
        gens.push_back(k0_element(c, K0Class{a, std::vector<long long>(std::size_t(k), 0)}));
    }
    for (int i = 0; i < k; ++i) {
        // identity and inverse
        const K0Element zero = k0_add(gens[std::size_t(i)], k0_negate(gens[std::size_t(i)]));
        for (long long d : zero.diff)
            if (d != 0) fail("Internal", "generator inverse law failed");
        // cone closure and properness on generators
        if (!k0_in_cone(gens[std::size_t(i)])) fail("Internal", "generator not in cone");
        if (k0_in_cone(k0_negate(gens[std::size_t(i)])))
            fail("Internal", "cone not proper on generators");
        for (int j = 0; j < k; ++j) {
            const K0Element sum = k0_add(gens[std::size_t(i)], gens[std::size_t(j)]);
            const K0Element rev = k0_add(gens[std::size_t(j)], gens[std::size_t(i)]);
            if (sum.diff != rev.diff) fail("Internal", "generator addition not commutative");
            if (!k0_in_cone(sum)) fail("Internal", "cone not closed under addition");
        }
    }
    // the order unit is the cone combination sum n_i g_i
    K0Element unit{a, std::vector<long long>(std::size_t(k), 0)};
    for (int i = 0; i < k; ++i) unit.diff[std::size_t(i)] = g.order_unit[std::size_t(i)];
    if (order_unit_bound(unit) != 1) fail("Internal", "order unit bound of [e] is not 1");
    return g;
}

K0Element k0_element(const K0Class& plus, const K0Class& minus) {
    require_same_algebra(plus.algebra, minus.algebra);
    K0Element g{plus.algebra, plus.ranks};
    for (std::size_t i = 0; i < g.diff.size(); ++i)
        g.diff[i] = add_checked(g.diff[i], -minus.ranks[i]);
    return g;
}

K0Element k0_add(const K0Element& g, const K0Element& h) {
    require_same_algebra(g.algebra, h.algebra);
    K0Element s{g.algebra, g.diff};
    for (std::size_t i = 0; i < s.diff.size(); ++i) s.diff[i] = add_checked(s.diff[i], h.diff[i]);
    return s;
}

K0Element k0_negate(const K0Element& g) {
    K0Element n{g.algebra, g.diff};
    for (long long& d : n.diff) d = -d;
    return n;
}

bool k0_in_cone(const K0Element& g) {
    for (long long d : g.diff)
        if (d < 0) return false;
    return true;
}

bool k0_leq(const K0Element& g, const K0Element& h) {
    return k0_in_cone(k0_add(h, k0_negate(g)));
}

long long order_unit_bound(const K0Element& g) {
    long long n = 0;
    for (std::size_t i = 0; i < g.diff.size(); ++i) {
        const long long ni = g.algebra.block_sizes[i];
        const long long need = (std::llabs(g.diff[i]) + ni - 1) / ni;
        n = std::max(n, need);
    }
    // verify -n [e] <= g <= n [e]
    for (std::size_t i = 0; i < g.diff.size(); ++i) {
        const long long bound = n * g.algebra.block_sizes[i];
        if (g.diff[i] > bound || g.diff[i] < -bound)
            fail("Internal", "order unit bound inequality violated");
    }
    return n;
}

OrderProjection synthesize_projection(const K0Class& c) {
    int level = 1;
    for (std::size_t i = 0; i < c.ranks.size(); ++i) {
        if (c.ranks[i] < 0) fail("NotProjection", "negative rank has no representative");
        const int ni = c.algebra.block_sizes[i];
        level = std::max(level, int((c.ranks[i] + ni - 1) / ni));
    }
    AElement p(c.algebra, level, level);
    for (int i = 0; i < p.block_count(); ++i)
        for (long long d = 0; d < c.ranks[std::size_t(i)]; ++d)
            p.block(i)(int(d), int(d)) = 1.0;
    return OrderProjection::make(p, Tolerance{});
}

bool pairs_equivalent(const OrderProjection& p1, const OrderProjection& q1,
                      const OrderProjection& p2, const OrderProjection& q2,
                      const Tolerance& tol) {
    const OrderProjection lhs = OrderProjection::direct_sum(p1, q2);
    const OrderProjection rhs = OrderProjection::direct_sum(p2, q1);
    const auto w = stably_equivalent(lhs, rhs, tol);
    return w.has_value();
}

std::string render_group(const K0Group& g) {
    std::ostringstream os;
    const int k = g.rank();
    os << "K0 = Z" << (k == 1 ? "" : "^" + std::to_string(k));
    os << ", cone Z+" << (k == 1 ? "" : "^" + std::to_string(k));
    os << ", unit [";
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << g.order_unit[std::size_t(i)];
    os << "]";
    return os.str();
}

std::string render_element(const K0Element& g) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < g.diff.size(); ++i) os << (i ? "," : "") << g.diff[i];
    os << ")";
    return os.str();
}

} // namespace amou
