#include "crossedcoh/h2.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccoh {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void tuple_of_rank(std::uint64_t rank, int base, std::vector<Elt>& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Elt>(rank % base);
        rank /= base;
    }
}

}  // namespace

bool band_is_homomorphism(const Band& band) {
    const FiniteGroup& Ga = band.gamma;
    if (band.beta[Ga.identity] != band.out.class_of[band.out.aut_index([&] {
            std::vector<Elt> id(band.out.group.order);
            for (Elt x = 0; x < band.out.group.order; ++x) id[x] = x;
            return id;
        }())])
        return false;
    for (Elt s = 0; s < Ga.order; ++s)
        for (Elt t = 0; t < Ga.order; ++t)
            if (band.out.compose_classes(band.beta[s], band.beta[t]) != band.beta[Ga.mul(s, t)])
                return false;
    return true;
}

bool same_band(const Band& a, const Band& b) {
    if (a.gamma.table != b.gamma.table) return false;
    if (a.out.group.table != b.out.group.table) return false;
    for (Elt s = 0; s < a.gamma.order; ++s)
        if (a.out.automorphisms[a.out.class_rep[a.beta[s]]] !=
            b.out.automorphisms[b.out.class_rep[b.beta[s]]])
            return false;
    return true;
}

CocycleCheck is_cocycle2(const Band& band, const TwoCocycle& c) {
    const FiniteGroup& Ga = band.gamma;
    const FiniteGroup& A = band.out.group;
    const int m = Ga.order;

    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t) {
            const auto& fs = band.out.automorphisms[c.f[s]];
            const auto& ft = band.out.automorphisms[c.f[t]];
            const auto& fst = band.out.automorphisms[c.f[Ga.mul(s, t)]];
            for (Elt x = 0; x < A.order; ++x)
                if (A.conj(c.u_at(m, s, t), fs[ft[x]]) != fst[x])
                    return {false, "composition condition at (" + Ga.name_of(s) + "," +
                                       Ga.name_of(t) + ")"};
        }
    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t)
            for (Elt v = 0; v < m; ++v) {
                const auto& fs = band.out.automorphisms[c.f[s]];
                Elt lhs = A.mul(c.u_at(m, s, Ga.mul(t, v)), fs[c.u_at(m, t, v)]);
                Elt rhs = A.mul(c.u_at(m, Ga.mul(s, t), v), c.u_at(m, s, t));
                if (lhs != rhs)
                    return {false, "product condition at (" + Ga.name_of(s) + "," + Ga.name_of(t) +
                                       "," + Ga.name_of(v) + ")"};
            }
    for (Elt s = 0; s < m; ++s)
        if (band.out.class_of[c.f[s]] != band.beta[s])
            return {false, "band condition at " + Ga.name_of(s)};
    return {};
}

TwoCocycle act_w(const Band& band, const std::vector<Elt>& w, const TwoCocycle& c) {
    const FiniteGroup& Ga = band.gamma;
    const FiniteGroup& A = band.out.group;
    const int m = Ga.order;
    TwoCocycle r;
    r.u.resize(static_cast<std::size_t>(m) * m);
    r.f.resize(m);
    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t) {
            const auto& fs = band.out.automorphisms[c.f[s]];
            Elt val = A.mul(w[Ga.mul(s, t)], c.u_at(m, s, t));
            val = A.mul(val, A.inv[fs[w[t]]]);
            val = A.mul(val, A.inv[w[s]]);
            r.u[static_cast<std::size_t>(s) * m + t] = val;
        }
    for (Elt s = 0; s < m; ++s) {
        const auto& fs = band.out.automorphisms[c.f[s]];
        std::vector<Elt> comp(A.order);
        for (Elt x = 0; x < A.order; ++x) comp[x] = A.conj(w[s], fs[x]);
        r.f[s] = band.out.aut_index(comp);
    }
    return r;
}

namespace {

bool w_trivializes(const Band& band, const TwoCocycle& c, const std::vector<Elt>& w) {
    const FiniteGroup& Ga = band.gamma;
    const FiniteGroup& A = band.out.group;
    const int m = Ga.order;
    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t) {
            const auto& fs = band.out.automorphisms[c.f[s]];
            Elt val = A.mul(w[Ga.mul(s, t)], c.u_at(m, s, t));
            val = A.mul(val, A.inv[fs[w[t]]]);
            val = A.mul(val, A.inv[w[s]]);
            if (val != A.identity) return false;
        }
    return true;
}

void check_w_budget(const Band& band, const Budget& budget) {
    double cost = std::pow(static_cast<double>(band.out.group.order), band.gamma.order);
    if (cost > budget.limit) throw bound_exceeded("neutrality search space exceeds budget");
}

}  // namespace

NeutralityResult is_neutral_class_serial(const Band& band, const TwoCocycle& c,
                                         const Budget& budget) {
    check_w_budget(band, budget);
    const int m = band.gamma.order;
    const int na = band.out.group.order;
    const std::uint64_t total = ipow(na, m);
    std::vector<Elt> w(m);
    for (std::uint64_t r = 0; r < total; ++r) {
        tuple_of_rank(r, na, w);
        if (w_trivializes(band, c, w)) return {true, w};
    }
    return {false, {}};
}

NeutralityResult is_neutral_class(const Band& band, const TwoCocycle& c, const Budget& budget) {
    check_w_budget(band, budget);
    const int m = band.gamma.order;
    const int na = band.out.group.order;
    const std::uint64_t total = ipow(na, m);
    const std::uint64_t block = 1 << 14;
    // blocks scanned in rank order; inside a block workers race but the least
    // rank wins, so the reported witness is the lexicographically least one
    for (std::uint64_t lo = 0; lo < total; lo += block) {
        const std::uint64_t hi = std::min(total, lo + block);
        std::uint64_t best = hi;
#ifdef _OPENMP
#pragma omp parallel
        {
            std::uint64_t local = hi;
            std::vector<Elt> w(m);
#pragma omp for nowait
            for (std::int64_t r = static_cast<std::int64_t>(lo); r < static_cast<std::int64_t>(hi);
                 ++r) {
                tuple_of_rank(static_cast<std::uint64_t>(r), na, w);
                if (w_trivializes(band, c, w)) local = std::min(local, static_cast<std::uint64_t>(r));
            }
#pragma omp critical
            best = std::min(best, local);
        }
#else
        std::vector<Elt> w(m);
        for (std::uint64_t r = lo; r < hi; ++r) {
            tuple_of_rank(r, na, w);
            if (w_trivializes(band, c, w)) {
                best = r;
                break;
            }
        }
#endif
        if (best < hi) {
            std::vector<Elt> w(m);
            tuple_of_rank(best, na, w);
            return {true, w};
        }
    }
    return {false, {}};
}

bool act_w_equivalent(const Band& band, const TwoCocycle& a, const TwoCocycle& b,
                      const Budget& budget) {
    check_w_budget(band, budget);
    const int m = band.gamma.order;
    const int na = band.out.group.order;
    const std::uint64_t total = ipow(na, m);
    std::vector<Elt> w(m);
    for (std::uint64_t r = 0; r < total; ++r) {
        tuple_of_rank(r, na, w);
        if (act_w(band, w, a) == b) return true;
    }
    return false;
}

std::pair<Band, TwoCocycle> delta_coboundary(const CrossedModule& cm, const Cochain1& c,
                                             const OutData& out_of_a) {
    CocycleCheck chk = is_cocycle1(cm, c);
    if (!chk.ok) throw not_a_cocycle("coboundary input: " + chk.witness);

    const FiniteGroup& Ga = cm.gamma();
    const FiniteGroup& A = cm.A();
    const int m = Ga.order;

    Band band;
    band.gamma = Ga;
    band.out = out_of_a;
    band.beta.resize(m);

    TwoCocycle t;
    t.u = c.u;
    t.f.resize(m);
    for (Elt s = 0; s < m; ++s) {
        std::vector<Elt> f(A.order);
        for (Elt x = 0; x < A.order; ++x) f[x] = cm.act_g(c.psi[s], cm.act_gamma_a(s, x));
        t.f[s] = band.out.aut_index(f);
        band.beta[s] = band.out.class_of[t.f[s]];
    }
    if (!band_is_homomorphism(band)) throw error("induced band is not a homomorphism");
    CocycleCheck c2 = is_cocycle2(band, t);
    if (!c2.ok) throw error("coboundary output fails cocycle conditions: " + c2.witness);
    return {std::move(band), std::move(t)};
}

std::pair<Band, TwoCocycle> delta_coboundary(const CrossedModule& cm, const Cochain1& c) {
    return delta_coboundary(cm, c, compute_out(cm.A()));
}

std::optional<std::vector<Elt>> two_neutral_witness(const CrossedModule& cm, const Cochain1& z,
                                                    const Budget& budget) {
    const FiniteGroup& Ga = cm.gamma();
    const FiniteGroup& A = cm.A();
    const int m = Ga.order;
    double cost = std::pow(static_cast<double>(A.order), m);
    if (cost > budget.limit) throw bound_exceeded("2-neutrality search space exceeds budget");

    const std::uint64_t total = ipow(A.order, m);
    std::vector<Elt> w(m);
    for (std::uint64_t r = 0; r < total; ++r) {
        tuple_of_rank(r, A.order, w);
        bool ok = true;
        for (Elt s = 0; s < m && ok; ++s)
            for (Elt t = 0; t < m && ok; ++t) {
                Elt val = A.mul(w[Ga.mul(s, t)], z.u_at(m, s, t));
                val = A.mul(val, A.inv[cm.act_g(z.psi[s], cm.act_gamma_a(s, w[t]))]);
                val = A.mul(val, A.inv[w[s]]);
                if (val != A.identity) ok = false;
            }
        if (ok) return w;
    }
    return std::nullopt;
}

ValidationReport kang_criterion(const CrossedModule& cm, const Budget& budget) {
    ValidationReport rep;
    const H1Decomposition h1 = h1_pointed(cm, budget);
    GammaGroup gg{cm.gamma(), cm.G(), cm.base.action};
    const GroupH1 h1g = group_h1(gg, budget);
    const OutData out = compute_out(cm.A());

    // image of the crossing map
    std::set<std::size_t> image;
    for (const auto& psi : h1g.reps) {
        Cochain1 z = identity_cochain1(cm);
        z.psi = psi;
        image.insert(h1.class_index(z));
    }

    const auto orbits = h1.orbits();
    for (std::size_t cls = 0; cls < h1.classes.size(); ++cls) {
        const Cochain1& rep_cocycle = h1.classes[cls].representative;
        const bool in_image = image.count(cls) > 0;

        auto [band, two] = delta_coboundary(cm, rep_cocycle, out);
        NeutralityResult neutral = is_neutral_class(band, two, budget);
        rep.add("class " + std::to_string(cls) + ": image membership equals neutrality",
                in_image == neutral.neutral,
                "in_image=" + std::to_string(in_image) +
                    " neutral=" + std::to_string(neutral.neutral));

        // 2-neutrality characterization: a trivializing w exists exactly when
        // the orbit contains a cocycle with u = 1
        bool orbit_has_unit_u = false;
        for (std::size_t zi : orbits[cls]) {
            const Cochain1& z = h1.z1[zi];
            if (std::all_of(z.u.begin(), z.u.end(),
                            [&](Elt a) { return a == cm.A().identity; })) {
                orbit_has_unit_u = true;
                break;
            }
        }
        bool has_witness = two_neutral_witness(cm, rep_cocycle, budget).has_value();
        rep.add("class " + std::to_string(cls) + ": 2-neutrality characterization",
                orbit_has_unit_u == has_witness);
    }
    return rep;
}

}  // namespace ccoh
