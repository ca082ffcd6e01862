#include "crossedcoh/hypercoh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccoh {

Budget Budget::from_env() {
    Budget b;
    if (const char* e = std::getenv("CROSSEDCOH_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(e, &end);
        if (end != e && v > 0) b.limit = v;
    }
    return b;
}

namespace {

void check_h1_budget(const CrossedModule& cm, const Budget& budget) {
    const double m = cm.gamma().order;
    double cost = std::pow(static_cast<double>(cm.G().order), m) *
                  std::pow(static_cast<double>(cm.A().order), m * m);
    if (cost > budget.limit)
        throw bound_exceeded("enumeration size " + std::to_string(cost) +
                             " exceeds budget " + std::to_string(budget.limit));
}

// decode rank into a tuple with digit 0 most significant, so ascending rank
// is lexicographic order on tuples
void tuple_of_rank(std::uint64_t rank, int base, std::vector<Elt>& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Elt>(rank % base);
        rank /= base;
    }
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Cochain1 identity_cochain1(const CrossedModule& cm) {
    const int m = cm.gamma().order;
    Cochain1 c;
    c.u.assign(static_cast<std::size_t>(m) * m, cm.A().identity);
    c.psi.assign(m, cm.G().identity);
    return c;
}

Cochain0 identity_cochain0(const CrossedModule& cm) {
    Cochain0 c;
    c.phi.assign(cm.gamma().order, cm.A().identity);
    c.g = cm.G().identity;
    return c;
}

CocycleCheck is_cocycle1(const CrossedModule& cm, const Cochain1& c) {
    const FiniteGroup& Ga = cm.gamma();
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    const int m = Ga.order;
    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t) {
            Elt lhs = G.mul(G.mul(cm.rho[c.u_at(m, s, t)], c.psi[s]),
                            cm.act_gamma_g(s, c.psi[t]));
            if (lhs != c.psi[Ga.mul(s, t)])
                return {false, "first condition at (" + Ga.name_of(s) + "," + Ga.name_of(t) + ")"};
        }
    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t)
            for (Elt v = 0; v < m; ++v) {
                Elt lhs = A.mul(c.u_at(m, s, Ga.mul(t, v)),
                                cm.act_g(c.psi[s], cm.act_gamma_a(s, c.u_at(m, t, v))));
                Elt rhs = A.mul(c.u_at(m, Ga.mul(s, t), v), c.u_at(m, s, t));
                if (lhs != rhs)
                    return {false, "second condition at (" + Ga.name_of(s) + "," + Ga.name_of(t) +
                                       "," + Ga.name_of(v) + ")"};
            }
    return {};
}

Cochain1 act_c0(const CrossedModule& cm, const Cochain1& z, const Cochain0& c) {
    const FiniteGroup& Ga = cm.gamma();
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    const int m = Ga.order;
    Cochain1 r;
    r.u.resize(static_cast<std::size_t>(m) * m);
    r.psi.resize(m);
    const Elt ginv = G.inv[c.g];
    for (Elt s = 0; s < m; ++s)
        for (Elt t = 0; t < m; ++t) {
            Elt inner = A.mul(c.phi[Ga.mul(s, t)], z.u_at(m, s, t));
            inner = A.mul(inner, A.inv[cm.act_g(z.psi[s], cm.act_gamma_a(s, c.phi[t]))]);
            inner = A.mul(inner, A.inv[c.phi[s]]);
            r.u[static_cast<std::size_t>(s) * m + t] = cm.act_g(ginv, inner);
        }
    for (Elt s = 0; s < m; ++s)
        r.psi[s] = G.mul(G.mul(G.mul(ginv, cm.rho[c.phi[s]]), z.psi[s]), cm.act_gamma_g(s, c.g));
    return r;
}

Cochain0 c0_plain_mul(const CrossedModule& cm, const Cochain0& x, const Cochain0& y) {
    const FiniteGroup& A = cm.A();
    Cochain0 r;
    r.phi.resize(x.phi.size());
    for (std::size_t s = 0; s < x.phi.size(); ++s)
        r.phi[s] = A.mul(cm.act_g(x.g, y.phi[s]), x.phi[s]);
    r.g = cm.G().mul(x.g, y.g);
    return r;
}

Cochain0 c0_plain_inv(const CrossedModule& cm, const Cochain0& x) {
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    Cochain0 r;
    r.g = G.inv[x.g];
    r.phi.resize(x.phi.size());
    for (std::size_t s = 0; s < x.phi.size(); ++s) r.phi[s] = cm.act_g(r.g, A.inv[x.phi[s]]);
    return r;
}

bool is_cocycle0(const CrossedModule& cm, const Cochain0& c) {
    const FiniteGroup& Ga = cm.gamma();
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    for (Elt s = 0; s < Ga.order; ++s) {
        if (G.mul(cm.rho[c.phi[s]], cm.act_gamma_g(s, c.g)) != c.g) return false;
        for (Elt t = 0; t < Ga.order; ++t)
            if (c.phi[Ga.mul(s, t)] != A.mul(c.phi[s], cm.act_gamma_a(s, c.phi[t]))) return false;
    }
    return true;
}

std::vector<Cochain0> coboundaries0(const CrossedModule& cm) {
    const FiniteGroup& A = cm.A();
    const FiniteGroup& Ga = cm.gamma();
    std::set<Cochain0> out;
    for (Elt s = 0; s < A.order; ++s) {
        Cochain0 c;
        c.phi.resize(Ga.order);
        for (Elt g = 0; g < Ga.order; ++g) c.phi[g] = A.mul(A.inv[s], cm.act_gamma_a(g, s));
        c.g = cm.G().inv[cm.rho[s]];
        out.insert(std::move(c));
    }
    return {out.begin(), out.end()};
}

std::vector<Cochain0> all_cochains0(const CrossedModule& cm) {
    const int m = cm.gamma().order;
    const int na = cm.A().order;
    const int ng = cm.G().order;
    const std::uint64_t total = ipow(na, m);
    std::vector<Cochain0> out;
    out.reserve(total * ng);
    std::vector<Elt> phi(m);
    for (std::uint64_t r = 0; r < total; ++r) {
        tuple_of_rank(r, na, phi);
        for (Elt g = 0; g < ng; ++g) out.push_back({phi, g});
    }
    return out;
}

namespace {

// Z^1 candidates for a block of psi ranks [lo, hi)
void z1_scan(const CrossedModule& cm, std::uint64_t lo, std::uint64_t hi,
             std::vector<Cochain1>& out) {
    const FiniteGroup& Ga = cm.gamma();
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    const int m = Ga.order;
    const std::size_t mm = static_cast<std::size_t>(m) * m;

    // fibers of rho, sorted ascending
    std::vector<std::vector<Elt>> fiber(G.order);
    for (Elt a = 0; a < A.order; ++a) fiber[cm.rho[a]].push_back(a);

    std::vector<Elt> psi(m);
    std::vector<const std::vector<Elt>*> cell(mm);
    std::vector<std::size_t> odo(mm);
    Cochain1 cand;
    cand.u.resize(mm);

    for (std::uint64_t r = lo; r < hi; ++r) {
        tuple_of_rank(r, G.order, psi);
        bool feasible = true;
        for (Elt s = 0; s < m && feasible; ++s)
            for (Elt t = 0; t < m && feasible; ++t) {
                // rho(u_{s,t}) = psi_{st} * (^s psi_t)^-1 * psi_s^-1
                Elt q = G.mul(G.mul(psi[Ga.mul(s, t)], G.inv[cm.act_gamma_g(s, psi[t])]),
                              G.inv[psi[s]]);
                if (fiber[q].empty()) {
                    feasible = false;
                    break;
                }
                cell[static_cast<std::size_t>(s) * m + t] = &fiber[q];
            }
        if (!feasible) continue;

        cand.psi = psi;
        std::fill(odo.begin(), odo.end(), 0);
        for (;;) {
            for (std::size_t i = 0; i < mm; ++i) cand.u[i] = (*cell[i])[odo[i]];
            // second cocycle condition
            bool ok = true;
            for (Elt s = 0; s < m && ok; ++s)
                for (Elt t = 0; t < m && ok; ++t)
                    for (Elt v = 0; v < m && ok; ++v) {
                        Elt lhs = A.mul(cand.u_at(m, s, Ga.mul(t, v)),
                                        cm.act_g(cand.psi[s], cm.act_gamma_a(s, cand.u_at(m, t, v))));
                        Elt rhs = A.mul(cand.u_at(m, Ga.mul(s, t), v), cand.u_at(m, s, t));
                        if (lhs != rhs) ok = false;
                    }
            if (ok) out.push_back(cand);
            // odometer
            std::size_t i = mm;
            while (i-- > 0) {
                if (++odo[i] < cell[i]->size()) break;
                odo[i] = 0;
                if (i == 0) goto done;
            }
            if (mm == 0) break;
        }
    done:;
    }
}

}  // namespace

std::vector<Cochain1> enumerate_z1_serial(const CrossedModule& cm, const Budget& budget) {
    check_h1_budget(cm, budget);
    const std::uint64_t total = ipow(cm.G().order, cm.gamma().order);
    std::vector<Cochain1> out;
    z1_scan(cm, 0, total, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cochain1> enumerate_z1(const CrossedModule& cm, const Budget& budget) {
    check_h1_budget(cm, budget);
    const std::uint64_t total = ipow(cm.G().order, cm.gamma().order);
#ifdef _OPENMP
    const int parts = std::min<std::uint64_t>(total, 4 * omp_get_max_threads());
#else
    const int parts = 1;
#endif
    std::vector<std::vector<Cochain1>> buckets(parts);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int p = 0; p < parts; ++p) {
        std::uint64_t lo = total * p / parts, hi = total * (p + 1) / parts;
        z1_scan(cm, lo, hi, buckets[p]);
    }
    std::vector<Cochain1> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t H1Decomposition::class_index(const Cochain1& z) const {
    auto it = std::lower_bound(z1.begin(), z1.end(), z);
    if (it == z1.end() || *it != z) throw not_a_cocycle("cochain is not a 1-cocycle of this module");
    return class_of[static_cast<std::size_t>(it - z1.begin())];
}

std::vector<std::vector<std::size_t>> H1Decomposition::orbits() const {
    std::vector<std::vector<std::size_t>> o(classes.size());
    for (std::size_t i = 0; i < z1.size(); ++i) o[class_of[i]].push_back(i);
    return o;
}

H1Decomposition h1_pointed(const CrossedModule& cm, const Budget& budget) {
    H1Decomposition d;
    d.z1 = enumerate_z1(cm, budget);
    const std::size_t n = d.z1.size();

    auto index_of = [&](const Cochain1& z) {
        auto it = std::lower_bound(d.z1.begin(), d.z1.end(), z);
        return static_cast<std::size_t>(it - d.z1.begin());
    };

    // union-find over orbit moves
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    const std::vector<Cochain0> c0 = all_cochains0(cm);
    for (std::size_t i = 0; i < n; ++i)
        for (const Cochain0& c : c0) unite(i, index_of(act_c0(cm, d.z1[i], c)));

    // classes keyed by root, ordered by least member (= lexicographically
    // least representative since z1 is sorted)
    std::map<std::size_t, std::size_t> root_to_class;
    d.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        auto [it, inserted] = root_to_class.try_emplace(r, d.classes.size());
        if (inserted) d.classes.push_back({d.z1[r], 0});
        d.class_of[i] = it->second;
        d.classes[it->second].orbit_size++;
    }
    d.distinguished = d.class_index(identity_cochain1(cm));
    return d;
}

std::size_t H0Decomposition::class_index(const Cochain0& z) const {
    auto it = std::lower_bound(z0.begin(), z0.end(), z);
    if (it == z0.end() || *it != z) throw not_a_cocycle("cochain is not a 0-cocycle of this module");
    return class_of[static_cast<std::size_t>(it - z0.begin())];
}

H0Decomposition h0_pointed(const CrossedModule& cm, const Budget& budget) {
    const double cost = std::pow(static_cast<double>(cm.A().order), cm.gamma().order) *
                        cm.G().order;
    if (cost > budget.limit) throw bound_exceeded("H^0 enumeration exceeds budget");

    H0Decomposition d;
    for (const Cochain0& c : all_cochains0(cm))
        if (is_cocycle0(cm, c)) d.z0.push_back(c);
    std::sort(d.z0.begin(), d.z0.end());

    const std::vector<Cochain0> b0 = coboundaries0(cm);
    d.class_of.assign(d.z0.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < d.z0.size(); ++i) {
        if (d.class_of[i] != static_cast<std::size_t>(-1)) continue;
        std::size_t cls = d.reps.size();
        Cochain0 best = d.z0[i];
        std::vector<std::size_t> members;
        for (const Cochain0& b : b0) {
            Cochain0 zb = c0_plain_mul(cm, d.z0[i], b);
            auto it = std::lower_bound(d.z0.begin(), d.z0.end(), zb);
            std::size_t j = static_cast<std::size_t>(it - d.z0.begin());
            if (d.class_of[j] == static_cast<std::size_t>(-1)) {
                d.class_of[j] = cls;
                members.push_back(j);
                if (zb < best) best = zb;
            }
        }
        d.reps.push_back(best);
    }
    d.distinguished = d.class_index(identity_cochain0(cm));
    return d;
}

bool is_group_cocycle(const GammaGroup& x, const std::vector<Elt>& a) {
    const FiniteGroup& Ga = x.gamma;
    for (Elt s = 0; s < Ga.order; ++s)
        for (Elt t = 0; t < Ga.order; ++t)
            if (a[Ga.mul(s, t)] != x.group.mul(a[s], x.act(s, a[t]))) return false;
    return true;
}

std::size_t GroupH1::class_index(const std::vector<Elt>& a) const {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), a);
    if (it == cocycles.end() || *it != a) throw not_a_cocycle("not a 1-cocycle of this gamma-group");
    return class_of[static_cast<std::size_t>(it - cocycles.begin())];
}

GroupH1 group_h1(const GammaGroup& x, const Budget& budget) {
    const FiniteGroup& Ga = x.gamma;
    const FiniteGroup& X = x.group;
    const double cost = std::pow(static_cast<double>(X.order), Ga.order);
    if (cost > budget.limit) throw bound_exceeded("group H^1 enumeration exceeds budget");

    GroupH1 h;
    const std::uint64_t total = ipow(X.order, Ga.order);
    std::vector<Elt> a(Ga.order);
    for (std::uint64_t r = 0; r < total; ++r) {
        tuple_of_rank(r, X.order, a);
        if (is_group_cocycle(x, a)) h.cocycles.push_back(a);
    }
    std::sort(h.cocycles.begin(), h.cocycles.end());

    h.class_of.assign(h.cocycles.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < h.cocycles.size(); ++i) {
        if (h.class_of[i] != static_cast<std::size_t>(-1)) continue;
        std::size_t cls = h.reps.size();
        std::vector<Elt> best = h.cocycles[i];
        for (Elt s = 0; s < X.order; ++s) {
            std::vector<Elt> twisted(Ga.order);
            for (Elt g = 0; g < Ga.order; ++g)
                twisted[g] = X.mul(X.mul(X.inv[s], h.cocycles[i][g]), x.act(g, s));
            auto it = std::lower_bound(h.cocycles.begin(), h.cocycles.end(), twisted);
            std::size_t j = static_cast<std::size_t>(it - h.cocycles.begin());
            if (h.class_of[j] == static_cast<std::size_t>(-1)) {
                h.class_of[j] = cls;
                if (twisted < best) best = twisted;
            }
        }
        h.reps.push_back(best);
    }
    std::vector<Elt> unit(Ga.order, X.identity);
    h.distinguished = h.class_index(unit);
    return h;
}

std::vector<Elt> group_h0(const GammaGroup& x) {
    std::vector<Elt> fixed;
    for (Elt e = 0; e < x.group.order; ++e) {
        bool ok = true;
        for (Elt s = 0; s < x.gamma.order && ok; ++s)
            if (x.act(s, e) != e) ok = false;
        if (ok) fixed.push_back(e);
    }
    return fixed;
}

std::size_t cr1(const CrossedModule& cm, const std::vector<Elt>& psi, const H1Decomposition& h1) {
    GammaGroup gg{cm.gamma(), cm.G(), cm.base.action};
    if (!is_group_cocycle(gg, psi))
        throw not_a_cocycle("psi fails the G-valued cocycle identity");
    Cochain1 z = identity_cochain1(cm);
    z.psi = psi;
    return h1.class_index(z);
}

Cochain1 push_cochain(const CrossedMorphism& m, const Cochain1& z) {
    Cochain1 r;
    r.u.resize(z.u.size());
    r.psi.resize(z.psi.size());
    for (std::size_t i = 0; i < z.u.size(); ++i) r.u[i] = m.fA[z.u[i]];
    for (std::size_t i = 0; i < z.psi.size(); ++i) r.psi[i] = m.fG[z.psi[i]];
    return r;
}

std::vector<std::size_t> h1_induced(const CrossedMorphism& m, const H1Decomposition& src,
                                    const H1Decomposition& tgt) {
    std::vector<std::size_t> map(src.classes.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < src.z1.size(); ++i) {
        std::size_t cls = src.class_of[i];
        std::size_t t = tgt.class_index(push_cochain(m, src.z1[i]));
        if (map[cls] == static_cast<std::size_t>(-1))
            map[cls] = t;
        else if (map[cls] != t)
            throw error("induced map is not well defined on class " + std::to_string(cls));
    }
    return map;
}

namespace {

std::string junction_witness(const std::vector<std::size_t>& im, const std::vector<std::size_t>& ker) {
    std::set<std::size_t> si(im.begin(), im.end()), sk(ker.begin(), ker.end());
    for (std::size_t x : si)
        if (!sk.count(x)) return "image element " + std::to_string(x) + " is not in the kernel";
    for (std::size_t x : sk)
        if (!si.count(x)) return "kernel element " + std::to_string(x) + " is not in the image";
    return "";
}

}  // namespace

ValidationReport check_exact_sequence(const CrossedModule& cm, const Budget& budget) {
    ValidationReport rep;
    const GammaGroup& ga = cm.coeff;
    GammaGroup gg{cm.gamma(), cm.G(), cm.base.action};

    const std::vector<Elt> h0a = group_h0(ga);
    const std::vector<Elt> h0g = group_h0(gg);
    const H0Decomposition h0cm = h0_pointed(cm, budget);
    const GroupH1 h1a = group_h1(ga, budget);
    const GroupH1 h1g = group_h1(gg, budget);
    const H1Decomposition h1cm = h1_pointed(cm, budget);

    // the connecting map [phi, g] -> [phi] (phi satisfies the A-valued
    // cocycle identity on Z^0), followed by the two term-to-term maps
    auto delta = [&](std::size_t h0_class) { return h1a.class_index(h0cm.reps[h0_class].phi); };
    auto rho_star1 = [&](std::size_t h1a_class) {
        std::vector<Elt> img(cm.gamma().order);
        for (Elt s = 0; s < cm.gamma().order; ++s) img[s] = cm.rho[h1a.reps[h1a_class][s]];
        return h1g.class_index(img);
    };
    auto cr1_of = [&](std::size_t h1g_class) {
        Cochain1 z = identity_cochain1(cm);
        z.psi = h1g.reps[h1g_class];
        return h1cm.class_index(z);
    };

    // im(rho_*: H0 A -> H0 G) = ker(cr0)
    {
        std::vector<std::size_t> im;
        for (Elt a : h0a) im.push_back(static_cast<std::size_t>(cm.rho[a]));
        std::vector<std::size_t> ker;
        for (Elt g : h0g) {
            Cochain0 c = identity_cochain0(cm);
            c.g = g;
            if (h0cm.class_index(c) == h0cm.distinguished) ker.push_back(static_cast<std::size_t>(g));
        }
        std::string w = junction_witness(im, ker);
        rep.add("exact at H0(G)", w.empty(), w);
    }
    // im(cr0) = ker(delta)
    {
        std::vector<std::size_t> im;
        for (Elt g : h0g) {
            Cochain0 c = identity_cochain0(cm);
            c.g = g;
            im.push_back(h0cm.class_index(c));
        }
        std::vector<std::size_t> ker;
        for (std::size_t cls = 0; cls < h0cm.reps.size(); ++cls)
            if (delta(cls) == h1a.distinguished) ker.push_back(cls);
        std::string w = junction_witness(im, ker);
        rep.add("exact at H0(A->G)", w.empty(), w);
    }
    // im(delta) = ker(rho_*: H1 A -> H1 G)
    {
        std::vector<std::size_t> im;
        for (std::size_t cls = 0; cls < h0cm.reps.size(); ++cls) im.push_back(delta(cls));
        std::vector<std::size_t> ker;
        for (std::size_t cls = 0; cls < h1a.reps.size(); ++cls)
            if (rho_star1(cls) == h1g.distinguished) ker.push_back(cls);
        std::string w = junction_witness(im, ker);
        rep.add("exact at H1(A)", w.empty(), w);
    }
    // im(rho_*) = ker(cr1)
    {
        std::vector<std::size_t> im;
        for (std::size_t cls = 0; cls < h1a.reps.size(); ++cls) im.push_back(rho_star1(cls));
        std::vector<std::size_t> ker;
        for (std::size_t cls = 0; cls < h1g.reps.size(); ++cls)
            if (cr1_of(cls) == h1cm.distinguished) ker.push_back(cls);
        std::string w = junction_witness(im, ker);
        rep.add("exact at H1(G)", w.empty(), w);
    }
    return rep;
}

namespace {

// induced map on cokernels G/im(rho), as cosets
bool coker_bijective(const CrossedMorphism& m) {
    const FiniteGroup& g1 = m.source.G();
    const FiniteGroup& g2 = m.target.G();
    std::vector<Elt> im1, im2;
    {
        std::set<Elt> s1, s2;
        for (Elt a = 0; a < m.source.A().order; ++a) s1.insert(m.source.rho[a]);
        for (Elt a = 0; a < m.target.A().order; ++a) s2.insert(m.target.rho[a]);
        im1.assign(s1.begin(), s1.end());
        im2.assign(s2.begin(), s2.end());
    }
    auto [q1, p1] = quotient_group(g1, im1);
    auto [q2, p2] = quotient_group(g2, im2);
    if (q1.order != q2.order) return false;
    std::vector<bool> hit(q2.order, false);
    std::vector<Elt> map(q1.order, -1);
    for (Elt x = 0; x < g1.order; ++x) {
        Elt c1 = p1.image[x];
        Elt c2 = p2.image[m.fG[x]];
        if (map[c1] < 0) {
            map[c1] = c2;
            if (hit[c2]) return false;
            hit[c2] = true;
        } else if (map[c1] != c2) {
            return false;
        }
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool check_quasi_iso(const CrossedMorphism& m) {
    std::vector<Elt> k1, k2;
    for (Elt a = 0; a < m.source.A().order; ++a)
        if (m.source.rho[a] == m.source.G().identity) k1.push_back(a);
    for (Elt a = 0; a < m.target.A().order; ++a)
        if (m.target.rho[a] == m.target.G().identity) k2.push_back(a);
    if (k1.size() != k2.size()) return false;
    std::set<Elt> k2set(k2.begin(), k2.end());
    std::set<Elt> seen;
    for (Elt a : k1) {
        Elt b = m.fA[a];
        if (!k2set.count(b) || seen.count(b)) return false;
        seen.insert(b);
    }
    return coker_bijective(m);
}

ValidationReport h1_bijective_under_quasi_iso(const CrossedMorphism& m, const Budget& budget) {
    ValidationReport rep;
    const bool qi = check_quasi_iso(m);
    rep.add("morphism is a quasi-isomorphism", qi);
    if (!qi) return rep;
    H1Decomposition src = h1_pointed(m.source, budget);
    H1Decomposition tgt = h1_pointed(m.target, budget);
    std::vector<std::size_t> map = h1_induced(m, src, tgt);
    bool bij = src.classes.size() == tgt.classes.size();
    if (bij) {
        std::vector<bool> hit(tgt.classes.size(), false);
        for (std::size_t t : map) {
            if (hit[t]) bij = false;
            hit[t] = true;
        }
    }
    rep.add("induced map on H1 is bijective (" + std::to_string(src.classes.size()) + " classes)",
            bij);
    return rep;
}

}  // namespace ccoh
