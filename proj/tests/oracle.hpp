#pragma once

// Test-side oracles, independent of the library's computation paths.

#include "crossedcoh/finite_group.hpp"
#include "crossedcoh/gamma_module.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Quaternion table from symbolic unit multiplication, written without the
/// library's builder. Elements 1,-1,i,-i,j,-j,k,-k in that order.
inline std::vector<std::vector<int>> quaternion_table() {
    // represent x as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    auto mul = [](std::pair<int, int> a, std::pair<int, int> b) {
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        return std::make_pair(a.first * b.first * sgn[a.second][b.second],
                              axis[a.second][b.second]);
    };
    auto decode = [](int e) { return std::make_pair(e % 2 ? -1 : 1, e / 2); };
    auto encode = [](std::pair<int, int> v) { return v.second * 2 + (v.first < 0 ? 1 : 0); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) t[x][y] = encode(mul(decode(x), decode(y)));
    return t;
}

/// Automorphism count by filtering all permutations; only for tiny groups.
inline std::size_t count_automorphisms_by_permutations(const ccoh::FiniteGroup& g) {
    std::vector<int> perm(g.order);
    for (int i = 0; i < g.order; ++i) perm[i] = i;
    std::size_t count = 0;
    do {
        bool ok = true;
        for (int x = 0; x < g.order && ok; ++x)
            for (int y = 0; y < g.order && ok; ++y)
                if (perm[g.mul(x, y)] != g.mul(perm[x], perm[y])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// |H^1| of a finite gamma-module by enumerating every cochain. Counts
/// cocycles and distinct coboundaries; the quotient is their ratio.
struct BruteH1 {
    std::uint64_t cocycles = 0;
    std::uint64_t coboundaries = 0;
    std::uint64_t h1_order() const { return cocycles / coboundaries; }
};

inline BruteH1 brute_module_h1(const ccoh::GammaModule& m, std::uint64_t cap = 1ull << 26) {
    using ccoh::Int;
    const std::vector<std::vector<Int>> elems = ccoh::module_elements(m.module);
    const std::size_t n = elems.size();
    const std::size_t gn = static_cast<std::size_t>(m.gamma.order);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < gn; ++i) {
        total *= n;
        if (total > cap) throw ccoh::bound_exceeded("brute-force cochain space too large");
    }

    // index elements by normal form for the coboundary count
    std::map<std::vector<Int>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[m.module.normal_form(elems[i])] = i;

    // precompute the action and addition on element indices
    std::vector<std::vector<std::size_t>> act(gn, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < gn; ++s)
        for (std::size_t i = 0; i < n; ++i)
            act[s][i] = index.at(m.module.normal_form(m.act(static_cast<ccoh::Elt>(s), elems[i])));
    std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Int> sum = elems[i];
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += elems[j][k];
            add[i][j] = index.at(m.module.normal_form(sum));
        }

    BruteH1 res;
    std::vector<std::size_t> c(gn);
    for (std::uint64_t r = 0; r < total; ++r) {
        std::uint64_t rr = r;
        for (std::size_t i = 0; i < gn; ++i) {
            c[i] = rr % n;
            rr /= n;
        }
        bool ok = true;
        for (ccoh::Elt s = 0; s < m.gamma.order && ok; ++s)
            for (ccoh::Elt t = 0; t < m.gamma.order && ok; ++t)
                if (c[static_cast<std::size_t>(m.gamma.mul(s, t))] !=
                    add[c[s]][act[s][c[t]]])
                    ok = false;
        if (ok) ++res.cocycles;
    }
    std::set<std::vector<std::size_t>> bset;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> bnd(gn);
        for (ccoh::Elt s = 0; s < m.gamma.order; ++s) {
            std::vector<Int> v = m.act(s, elems[i]);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= elems[i][k];
            bnd[static_cast<std::size_t>(s)] = index.at(m.module.normal_form(v));
        }
        bset.insert(std::move(bnd));
    }
    res.coboundaries = bset.size();
    return res;
}

/// Random finite gamma-modules whose brute-force cochain space stays small.
inline ccoh::GammaModule random_finite_module(std::mt19937_64& rng) {
    using ccoh::Int;
    using ccoh::IntMat;
    for (;;) {
        const int shape = static_cast<int>(rng() % 4);
        try {
            if (shape == 0) {
                // cyclic module with a unit action
                const int mod = 2 + static_cast<int>(rng() % 63);  // 2..64
                std::vector<int> units;
                for (int u = 1; u < mod; ++u)
                    if (std::gcd(u, mod) == 1) units.push_back(u);
                int u = units[rng() % units.size()];
                // order of u modulo mod
                int ord = 1, acc = u % mod;
                while (acc != 1) {
                    acc = acc * u % mod;
                    ++ord;
                }
                if (ord > 8) continue;
                ccoh::FiniteGroup gamma = ccoh::cyclic_group(ord);
                std::vector<IntMat> action;
                int pw = 1;
                for (int s = 0; s < ord; ++s) {
                    IntMat a(1, 1);
                    a(0, 0) = pw;
                    action.push_back(a);
                    pw = pw * u % mod;
                }
                IntMat rel(1, 1);
                rel(0, 0) = mod;
                auto m = ccoh::make_gamma_module(ccoh::make_fg_group(1, rel), gamma, action);
                if (std::pow(static_cast<double>(mod), ord) > 1 << 24) continue;
                return m;
            }
            if (shape == 1) {
                // sign-diagonal action of (Z/2)^k on mixed moduli
                const int p = 1 + static_cast<int>(rng() % 3);
                ccoh::FiniteGroup gamma =
                    (rng() % 2) ? ccoh::cyclic_group(2) : ccoh::klein_four();
                IntMat rel(p, p);
                Int total = 1;
                for (int i = 0; i < p; ++i) {
                    int d = 2 << (rng() % 3);  // 2,4,8
                    rel(i, i) = d;
                    total *= d;
                }
                std::vector<IntMat> action;
                std::vector<std::vector<int>> signs(gamma.order, std::vector<int>(p, 1));
                for (int i = 0; i < p; ++i) {
                    // assign a character of gamma to coordinate i
                    int mask = static_cast<int>(rng() % gamma.order);
                    for (ccoh::Elt s = 0; s < gamma.order; ++s) {
                        int bits = s & mask;
                        int par = __builtin_popcount(static_cast<unsigned>(bits)) % 2;
                        signs[s][i] = par ? -1 : 1;
                    }
                }
                for (ccoh::Elt s = 0; s < gamma.order; ++s) {
                    IntMat a(p, p);
                    for (int i = 0; i < p; ++i) a(i, i) = signs[s][i];
                    action.push_back(a);
                }
                auto m = ccoh::make_gamma_module(ccoh::make_fg_group(p, rel), gamma, action);
                if (std::pow(total.convert_to<double>(), gamma.order) > 1 << 24) continue;
                return m;
            }
            if (shape == 2) {
                // rank-2 rotation of order 4 over a uniform modulus
                const int d = 2 << (rng() % 3);
                ccoh::FiniteGroup gamma = ccoh::cyclic_group(4);
                IntMat rel(2, 2);
                rel(0, 0) = d;
                rel(1, 1) = d;
                IntMat rot(2, 2);
                rot(0, 1) = -1;
                rot(1, 0) = 1;
                std::vector<IntMat> action{IntMat::identity(2), rot, rot * rot, rot * rot * rot};
                auto m = ccoh::make_gamma_module(ccoh::make_fg_group(2, rel), gamma, action);
                if (std::pow(static_cast<double>(d) * d, 4) > 1 << 24) continue;
                return m;
            }
            // coordinate swap of Z/2 over two equal moduli, presented in a
            // skewed basis so the relation matrix is not diagonal
            const int d = 2 << (rng() % 4);
            ccoh::FiniteGroup gamma = ccoh::cyclic_group(2);
            IntMat rel(2, 2);
            rel(0, 0) = d;
            rel(1, 1) = d;
            IntMat swap(2, 2);
            swap(0, 1) = 1;
            swap(1, 0) = 1;
            // conjugate by a random unimodular change of generators
            IntMat t = IntMat::identity(2), tinv = IntMat::identity(2);
            for (int k = 0; k < 3; ++k) {
                long long c = static_cast<long long>(rng() % 5) - 2;
                IntMat e = IntMat::identity(2), einv = IntMat::identity(2);
                std::size_t at = rng() % 2;
                e(at, 1 - at) = c;
                einv(at, 1 - at) = -c;
                t = t * e;
                tinv = einv * tinv;
            }
            std::vector<IntMat> action{IntMat::identity(2), t * swap * tinv};
            auto m = ccoh::make_gamma_module(ccoh::make_fg_group(2, t * rel), gamma, action);
            if (std::pow(static_cast<double>(d) * d, 2) > 1 << 24) continue;
            return m;
        } catch (const ccoh::error&) {
            continue;
        }
    }
}

}  // namespace oracle
