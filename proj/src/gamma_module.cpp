#include "crossedcoh/gamma_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ccoh {

std::vector<Int> FgAbelianGroup::invariants() const {
    std::vector<Int> inv;
    for (const Int& d : moduli)
        if (d > 1) inv.push_back(d);
    for (const Int& d : moduli)
        if (d == 0) inv.push_back(0);
    return inv;
}

Int FgAbelianGroup::order() const { return invariants_order(invariants()); }

std::vector<Int> FgAbelianGroup::normal_form(const std::vector<Int>& x) const {
    std::vector<Int> w = rel_snf.u.apply(x);
    for (std::size_t i = 0; i < rel_snf.diag.size(); ++i)
        if (rel_snf.diag[i] != 0) {
            w[i] %= rel_snf.diag[i];
            if (w[i] < 0) w[i] += rel_snf.diag[i];
        }
    return rel_snf.u_inv.apply(w);
}

bool FgAbelianGroup::is_zero(const std::vector<Int>& x) const {
    std::vector<Int> w = rel_snf.u.apply(x);
    for (std::size_t i = 0; i < generators; ++i) {
        if (i < rel_snf.diag.size() && rel_snf.diag[i] != 0) {
            if (w[i] % rel_snf.diag[i] != 0) return false;
        } else if (w[i] != 0) {
            return false;
        }
    }
    return true;
}

bool FgAbelianGroup::equal(const std::vector<Int>& x, const std::vector<Int>& y) const {
    std::vector<Int> d(generators);
    for (std::size_t i = 0; i < generators; ++i) d[i] = x[i] - y[i];
    return is_zero(d);
}

std::vector<Int> FgAbelianGroup::to_coords(const std::vector<Int>& x) const {
    std::vector<Int> w = rel_snf.u.apply(x);
    std::vector<Int> out(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
        Int v = w[kept[j]];
        if (moduli[j] > 0) {
            v %= moduli[j];
            if (v < 0) v += moduli[j];
        }
        out[j] = v;
    }
    return out;
}

std::vector<Int> FgAbelianGroup::from_coords(const std::vector<Int>& w) const {
    std::vector<Int> full(generators, 0);
    for (std::size_t j = 0; j < kept.size(); ++j) full[kept[j]] = w[j];
    return rel_snf.u_inv.apply(full);
}

FgAbelianGroup make_fg_group(std::size_t generators, IntMat relations) {
    if (relations.cols() > 0 && relations.rows() != generators)
        throw error("relation matrix must have one row per generator");
    if (relations.cols() == 0) relations = IntMat(generators, 0);
    FgAbelianGroup g;
    g.generators = generators;
    g.relations = std::move(relations);
    g.rel_snf = snf(g.relations);
    for (std::size_t i = 0; i < generators; ++i) {
        Int d = i < g.rel_snf.diag.size() ? g.rel_snf.diag[i] : Int(0);
        if (d == 1) continue;
        g.kept.push_back(i);
        g.moduli.push_back(d);
    }
    return g;
}

std::vector<Int> GammaModule::act(Elt s, const std::vector<Int>& x) const {
    return action[s].apply(x);
}

GammaModule make_gamma_module(FgAbelianGroup module, FiniteGroup gamma,
                              std::vector<IntMat> action) {
    const std::size_t p = module.generators;
    if (action.size() != static_cast<std::size_t>(gamma.order))
        throw error("one action matrix per gamma element required");
    for (const IntMat& a : action)
        if (a.rows() != p || a.cols() != p) throw error("action matrix has wrong shape");

    // matrices descend to the quotient
    for (Elt s = 0; s < gamma.order; ++s)
        for (std::size_t j = 0; j < module.relations.cols(); ++j)
            if (!in_colspan(module.rel_snf, action[s].apply(module.relations.col(j))))
                throw error("action matrix " + std::to_string(s) +
                            " does not preserve the relation lattice");

    // homomorphism property on normal forms
    std::vector<Int> e(p, 0);
    for (std::size_t j = 0; j < p; ++j) {
        e.assign(p, 0);
        e[j] = 1;
        if (!module.equal(action[gamma.identity].apply(e), e))
            throw error("identity of gamma must act trivially on the module");
    }
    for (Elt s = 0; s < gamma.order; ++s)
        for (Elt t = 0; t < gamma.order; ++t)
            for (std::size_t j = 0; j < p; ++j) {
                e.assign(p, 0);
                e[j] = 1;
                std::vector<Int> lhs = action[gamma.mul(s, t)].apply(e);
                std::vector<Int> rhs = action[s].apply(action[t].apply(e));
                if (!module.equal(lhs, rhs))
                    throw error("action is not a homomorphism at pair (" + std::to_string(s) + "," +
                                std::to_string(t) + ")");
            }

    GammaModule m;
    m.module = std::move(module);
    m.gamma = std::move(gamma);
    m.action = std::move(action);
    return m;
}

ModuleHom make_module_hom(const GammaModule& source, const GammaModule& target, IntMat matrix) {
    if (matrix.rows() != target.module.generators || matrix.cols() != source.module.generators)
        throw error("hom matrix has wrong shape");
    // descends to the quotients
    for (std::size_t j = 0; j < source.module.relations.cols(); ++j)
        if (!in_colspan(target.module.rel_snf, matrix.apply(source.module.relations.col(j))))
            throw error("hom does not map relations into relations");
    // gamma-equivariance modulo target relations
    const std::size_t p = source.module.generators;
    std::vector<Int> e(p);
    for (Elt s = 0; s < source.gamma.order; ++s)
        for (std::size_t j = 0; j < p; ++j) {
            e.assign(p, 0);
            e[j] = 1;
            std::vector<Int> lhs = matrix.apply(source.action[s].apply(e));
            std::vector<Int> rhs = target.action[s].apply(matrix.apply(e));
            if (!target.module.equal(lhs, rhs))
                throw error("hom is not gamma-equivariant at gamma=" + std::to_string(s));
        }
    return ModuleHom{std::move(matrix)};
}

namespace {

/// Normalized action matrix in the kept-coordinate space.
IntMat normalized_action(const GammaModule& m, Elt s) {
    const std::size_t q = m.module.kept.size();
    IntMat an(q, q);
    std::vector<Int> e(q);
    for (std::size_t j = 0; j < q; ++j) {
        e.assign(q, 0);
        e[j] = 1;
        std::vector<Int> img = m.module.to_coords(m.act(s, m.module.from_coords(e)));
        for (std::size_t i = 0; i < q; ++i) an(i, j) = img[i];
    }
    return an;
}

/// Cocycle solution lattice and coboundary generators for H^1, both in the
/// stacked normalized coordinate space (gamma-major blocks of size q).
struct H1System {
    std::size_t q = 0;       // normalized module rank
    std::size_t m = 0;       // |gamma|
    IntMat z_basis;          // cocycle lattice, (m*q) x rank
    IntMat b_gens;           // coboundary + torsion-shift generators
    std::vector<IntMat> an;  // normalized action per gamma element
};

H1System build_h1_system(const GammaModule& mod, const Budget& budget) {
    H1System sys;
    const FiniteGroup& ga = mod.gamma;
    sys.m = static_cast<std::size_t>(ga.order);
    sys.q = mod.module.kept.size();
    const std::size_t m = sys.m, q = sys.q;
    sys.an.reserve(m);
    for (Elt s = 0; s < ga.order; ++s) sys.an.push_back(normalized_action(mod, s));

    std::size_t torsion = 0;
    for (const Int& d : mod.module.moduli)
        if (d > 0) ++torsion;

    const std::size_t rows = m * m * q;
    const std::size_t cols = m * q;
    const std::size_t aux = m * m * torsion;
    double cells = static_cast<double>(rows) * (cols + aux);
    if (cells > budget.limit)
        throw bound_exceeded("cocycle system size " + std::to_string(cells) +
                             " exceeds budget " + std::to_string(budget.limit));

    // equation block (s,t): c_{st} - c_s - An_s c_t = 0 modulo torsion
    IntMat e(rows, cols);
    IntMat auxm(rows, aux);
    std::size_t aux_col = 0;
    for (Elt s = 0; s < ga.order; ++s)
        for (Elt t = 0; t < ga.order; ++t) {
            const std::size_t block = (static_cast<std::size_t>(s) * m + t) * q;
            const Elt st = ga.mul(s, t);
            for (std::size_t i = 0; i < q; ++i) {
                e(block + i, static_cast<std::size_t>(st) * q + i) += 1;
                e(block + i, static_cast<std::size_t>(s) * q + i) -= 1;
                for (std::size_t j = 0; j < q; ++j)
                    if (sys.an[s](i, j) != 0)
                        e(block + i, static_cast<std::size_t>(t) * q + j) -= sys.an[s](i, j);
            }
            for (std::size_t i = 0; i < q; ++i)
                if (mod.module.moduli[i] > 0) auxm(block + i, aux_col++) = mod.module.moduli[i];
        }
    sys.z_basis = preimage_lattice(e, auxm);

    // coboundaries (A_s - 1) x plus per-gamma torsion shifts
    std::size_t shift_cols = m * torsion;
    IntMat b(cols, q + shift_cols);
    for (std::size_t j = 0; j < q; ++j)
        for (Elt s = 0; s < ga.order; ++s)
            for (std::size_t i = 0; i < q; ++i) {
                Int v = sys.an[s](i, j) - (i == j ? 1 : 0);
                if (v != 0) b(static_cast<std::size_t>(s) * q + i, j) = v;
            }
    std::size_t col = q;
    for (Elt s = 0; s < ga.order; ++s)
        for (std::size_t i = 0; i < q; ++i)
            if (mod.module.moduli[i] > 0)
                b(static_cast<std::size_t>(s) * q + i, col++) = mod.module.moduli[i];
    sys.b_gens = std::move(b);
    return sys;
}

ModuleCocycle stacked_to_cocycle(const GammaModule& mod, const std::vector<Int>& stacked) {
    const std::size_t q = mod.module.kept.size();
    const std::size_t m = static_cast<std::size_t>(mod.gamma.order);
    ModuleCocycle c(m);
    std::vector<Int> w(q);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t i = 0; i < q; ++i) w[i] = stacked[s * q + i];
        c[s] = mod.module.from_coords(w);
    }
    return c;
}

// combine per-factor generators into the canonical divisor-chain form
void chain_form(const GammaModule& mod, const std::vector<Int>& raw_factors,
                const std::vector<ModuleCocycle>& raw_gens, std::vector<Int>& inv_out,
                std::vector<ModuleCocycle>& gens_out) {
    const std::size_t n = raw_factors.size();
    if (n == 0) {
        inv_out.clear();
        gens_out.clear();
        return;
    }
    IntMat d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = raw_factors[i];
    IntMat reps;
    inv_out = cokernel_invariants(d, n, &reps);
    gens_out.clear();
    const std::size_t m = static_cast<std::size_t>(mod.gamma.order);
    const std::size_t p = mod.module.generators;
    for (std::size_t k = 0; k < inv_out.size(); ++k) {
        ModuleCocycle acc(m, std::vector<Int>(p, 0));
        for (std::size_t j = 0; j < n; ++j) {
            const Int& coef = reps(j, k);
            if (coef == 0) continue;
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t i = 0; i < p; ++i) acc[s][i] += coef * raw_gens[j][s][i];
        }
        for (std::size_t s = 0; s < m; ++s) acc[s] = mod.module.normal_form(acc[s]);
        gens_out.push_back(std::move(acc));
    }
}

}  // namespace

ModuleH1 mod_h1(const GammaModule& mod, const Budget& budget) {
    H1System sys = build_h1_system(mod, budget);
    IntMat reps;
    std::vector<Int> raw = quotient_invariants(sys.z_basis, sys.b_gens, &reps);

    std::vector<ModuleCocycle> raw_gens;
    std::vector<Int> raw_factors;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        raw_factors.push_back(raw[k]);
        raw_gens.push_back(stacked_to_cocycle(mod, reps.col(k)));
    }

    ModuleH1 h;
    chain_form(mod, raw_factors, raw_gens, h.invariant_factors, h.generators);
    return h;
}

ModuleH0 mod_h0(const GammaModule& mod, const Budget& budget) {
    const std::size_t q = mod.module.kept.size();
    const std::size_t m = static_cast<std::size_t>(mod.gamma.order);
    std::size_t torsion = 0;
    for (const Int& d : mod.module.moduli)
        if (d > 0) ++torsion;
    double cells = static_cast<double>(m * q) * (q + m * torsion);
    if (cells > budget.limit) throw bound_exceeded("fixed-point system exceeds budget");

    IntMat s(m * q, q);
    IntMat auxm(m * q, m * torsion);
    std::size_t aux_col = 0;
    for (Elt g = 0; g < mod.gamma.order; ++g) {
        IntMat an = normalized_action(mod, g);
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j)
                s(static_cast<std::size_t>(g) * q + i, j) = an(i, j) - (i == j ? 1 : 0);
            if (mod.module.moduli[i] > 0)
                auxm(static_cast<std::size_t>(g) * q + i, aux_col++) = mod.module.moduli[i];
        }
    }
    IntMat fixed = preimage_lattice(s, auxm);

    // quotient by the torsion shifts to present the subgroup abstractly
    IntMat shifts(q, torsion);
    std::size_t c = 0;
    for (std::size_t i = 0; i < q; ++i)
        if (mod.module.moduli[i] > 0) shifts(i, c++) = mod.module.moduli[i];

    ModuleH0 h;
    IntMat reps;
    h.invariant_factors = quotient_invariants(fixed, shifts, &reps);
    for (std::size_t k = 0; k < h.invariant_factors.size(); ++k)
        h.generators.push_back(mod.module.normal_form(mod.module.from_coords(reps.col(k))));
    return h;
}

std::vector<std::vector<Int>> module_elements(const FgAbelianGroup& m, std::uint64_t cap) {
    Int total = 1;
    for (const Int& d : m.moduli) {
        if (d == 0) throw bound_exceeded("module is infinite");
        total *= d;
        if (total > cap) throw bound_exceeded("module order exceeds enumeration cap");
    }
    std::vector<std::vector<Int>> out;
    std::vector<Int> w(m.moduli.size(), 0);
    for (;;) {
        out.push_back(m.from_coords(w));
        std::size_t i = w.size();
        bool done = true;
        while (i-- > 0) {
            w[i] += 1;
            if (w[i] < m.moduli[i]) {
                done = false;
                break;
            }
            w[i] = 0;
        }
        if (done) break;
    }
    return out;
}

bool is_module_cocycle(const GammaModule& m, const ModuleCocycle& c) {
    const FiniteGroup& ga = m.gamma;
    for (Elt s = 0; s < ga.order; ++s)
        for (Elt t = 0; t < ga.order; ++t) {
            std::vector<Int> rhs = m.act(s, c[t]);
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += c[s][i];
            if (!m.module.equal(c[ga.mul(s, t)], rhs)) return false;
        }
    return true;
}

bool is_module_coboundary(const GammaModule& m, const ModuleCocycle& c) {
    const std::size_t p = m.module.generators;
    const std::size_t n = static_cast<std::size_t>(m.gamma.order);
    const std::size_t r = m.module.relations.cols();
    IntMat s(n * p, p + n * r);
    std::vector<Int> b(n * p);
    for (Elt g = 0; g < m.gamma.order; ++g) {
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j)
                s(static_cast<std::size_t>(g) * p + i, j) =
                    m.action[g](i, j) - (i == j ? 1 : 0);
            for (std::size_t j = 0; j < r; ++j)
                s(static_cast<std::size_t>(g) * p + i, p + static_cast<std::size_t>(g) * r + j) =
                    m.module.relations(i, j);
            b[static_cast<std::size_t>(g) * p + i] = c[g][i];
        }
    }
    std::vector<Int> x;
    return solve(s, b, x);
}

ShortExactSequence make_ses(GammaModule sub, GammaModule mid, GammaModule quot, IntMat incl,
                            IntMat proj) {
    make_module_hom(sub, mid, incl);
    make_module_hom(mid, quot, proj);

    // injectivity: the preimage of the relation lattice is exactly sub's
    if (!same_lattice(preimage_lattice(incl, mid.module.relations),
                      column_basis(sub.module.relations)))
        throw not_exact("inclusion is not injective");
    // image = kernel at the middle
    if (!same_lattice(preimage_lattice(proj, quot.module.relations),
                      column_basis(incl.hcat(mid.module.relations))))
        throw not_exact("image of the inclusion differs from the kernel of the projection");
    // surjectivity
    if (!same_lattice(column_basis(proj.hcat(quot.module.relations)),
                      IntMat::identity(quot.module.generators)))
        throw not_exact("projection is not surjective");

    ShortExactSequence s;
    s.sub = std::move(sub);
    s.mid = std::move(mid);
    s.quot = std::move(quot);
    s.incl = std::move(incl);
    s.proj = std::move(proj);
    return s;
}

ConnectingResult connecting_delta0(const ShortExactSequence& ses, const std::vector<Int>& c,
                                   const std::vector<Elt>& gamma_sub, bool alternate_lift) {
    auto [sub_group, sub_elems] = subgroup_as_group(ses.mid.gamma, gamma_sub);

    // c must be fixed by the subgroup
    for (Elt s : sub_elems)
        if (!ses.quot.module.equal(ses.quot.act(s, c), c))
            throw not_fixed("element is not fixed by subgroup element " + std::to_string(s));

    // lift through the projection
    const std::size_t pm = ses.mid.module.generators;
    const std::size_t rq = ses.quot.module.relations.cols();
    IntMat sys(ses.quot.module.generators, pm + rq);
    for (std::size_t i = 0; i < ses.quot.module.generators; ++i) {
        for (std::size_t j = 0; j < pm; ++j) sys(i, j) = ses.proj(i, j);
        for (std::size_t j = 0; j < rq; ++j) sys(i, pm + j) = ses.quot.module.relations(i, j);
    }
    std::vector<Int> sol;
    if (!solve(sys, c, sol)) throw not_exact("element does not lift through the projection");
    std::vector<Int> b(sol.begin(), sol.begin() + pm);
    b = ses.mid.module.normal_form(b);
    if (alternate_lift && ses.sub.module.generators > 0) {
        // shift by the image of the first coefficient generator
        std::vector<Int> e(ses.sub.module.generators, 0);
        e[0] = 1;
        std::vector<Int> shift = ses.incl.apply(e);
        for (std::size_t i = 0; i < pm; ++i) b[i] += shift[i];
        b = ses.mid.module.normal_form(b);
    }

    // a_g = incl^-1(g b - b)
    const std::size_t ps = ses.sub.module.generators;
    const std::size_t rm = ses.mid.module.relations.cols();
    IntMat pull(pm, ps + rm);
    for (std::size_t i = 0; i < pm; ++i) {
        for (std::size_t j = 0; j < ps; ++j) pull(i, j) = ses.incl(i, j);
        for (std::size_t j = 0; j < rm; ++j) pull(i, ps + j) = ses.mid.module.relations(i, j);
    }
    SnfResult pull_snf = snf(pull);

    ConnectingResult res;
    res.subgroup = sub_group;
    res.cocycle.resize(sub_elems.size());
    for (std::size_t k = 0; k < sub_elems.size(); ++k) {
        std::vector<Int> t = ses.mid.act(sub_elems[k], b);
        for (std::size_t i = 0; i < pm; ++i) t[i] -= b[i];
        std::vector<Int> a;
        if (!solve_with(pull_snf, t, a))
            throw not_exact("difference of lifts does not come from the coefficient module");
        res.cocycle[k] = ses.sub.module.normal_form(std::vector<Int>(a.begin(), a.begin() + ps));
    }

    // restricted action for the subgroup
    std::vector<IntMat> sub_action;
    for (Elt s : sub_elems) sub_action.push_back(ses.sub.action[s]);
    res.sub_restricted = make_gamma_module(ses.sub.module, res.subgroup, std::move(sub_action));
    res.trivial = is_module_coboundary(res.sub_restricted, res.cocycle);
    return res;
}

KernelResult h1_kernel(const GammaModule& source, const GammaModule& target, const ModuleHom& f,
                       const Budget& budget) {
    H1System ss = build_h1_system(source, budget);
    H1System ts = build_h1_system(target, budget);
    const std::size_t m = ss.m;

    // induced map in stacked normalized coordinates, block diagonal over gamma
    const std::size_t qs = ss.q, qt = ts.q;
    IntMat fn(qt, qs);
    {
        std::vector<Int> e(qs);
        for (std::size_t j = 0; j < qs; ++j) {
            e.assign(qs, 0);
            e[j] = 1;
            std::vector<Int> img =
                target.module.to_coords(f.matrix.apply(source.module.from_coords(e)));
            for (std::size_t i = 0; i < qt; ++i) fn(i, j) = img[i];
        }
    }
    IntMat fbig(m * qt, m * qs);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t i = 0; i < qt; ++i)
            for (std::size_t j = 0; j < qs; ++j)
                if (fn(i, j) != 0) fbig(s * qt + i, s * qs + j) = fn(i, j);

    // classes mapping into target coboundaries, in source Z-coordinates
    IntMat k_coords = preimage_lattice(fbig * ss.z_basis, ts.b_gens);

    // source coboundaries in Z-coordinates
    SnfResult zs = snf(ss.z_basis);
    IntMat bs_coords(ss.z_basis.cols(), ss.b_gens.cols());
    for (std::size_t j = 0; j < ss.b_gens.cols(); ++j) {
        std::vector<Int> x;
        if (!solve_with(zs, ss.b_gens.col(j), x))
            throw error("coboundary outside the cocycle lattice");
        bs_coords.set_col(j, x);
    }

    IntMat reps;
    std::vector<Int> raw = quotient_invariants(k_coords, bs_coords, &reps);

    std::vector<Int> raw_factors;
    std::vector<ModuleCocycle> raw_gens;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        raw_factors.push_back(raw[k]);
        raw_gens.push_back(stacked_to_cocycle(source, ss.z_basis.apply(reps.col(k))));
    }
    KernelResult res;
    chain_form(source, raw_factors, raw_gens, res.invariant_factors, res.generators);
    return res;
}

bool cocycle_in_h1_kernel(const GammaModule& source, const GammaModule& target,
                          const ModuleHom& f, const ModuleCocycle& c) {
    if (!is_module_cocycle(source, c)) throw not_a_cocycle("kernel membership input");
    ModuleCocycle img(c.size());
    for (std::size_t s = 0; s < c.size(); ++s)
        img[s] = target.module.normal_form(f.matrix.apply(c[s]));
    return is_module_coboundary(target, img);
}

UnitaryExample build_unitary_example(int n) {
    if (n < 1) throw error("n must be positive");
    const std::size_t dim = 2 * static_cast<std::size_t>(n);

    FiniteGroup gamma = direct_product(cyclic_group(8), cyclic_group(4));
    auto sign_of = [&](Elt g) { return (g / 4) % 2 == 0 ? 1 : -1; };

    // cover lattice: 2n generators, one relation (1,...,1)
    IntMat rel_cover(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) rel_cover(i, 0) = 1;
    FgAbelianGroup cover_grp = make_fg_group(dim, rel_cover);

    // even-sum sublattice basis: e_i - e_{i+1} and e_{2n-2} + e_{2n-1}
    IntMat basis(dim, dim);
    for (std::size_t j = 0; j + 1 < dim; ++j) {
        basis(j, j) = 1;
        basis(j + 1, j) = -1;
    }
    basis(dim - 2, dim - 1) = 1;
    basis(dim - 1, dim - 1) = 1;

    // relation: 4*(1,...,1) expressed in the basis
    std::vector<Int> ones(dim, 4);
    std::vector<Int> rel_coords;
    if (!solve(basis, ones, rel_coords)) throw error("diagonal vector is not in the even lattice");
    IntMat rel_lat(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) rel_lat(i, 0) = rel_coords[i];
    FgAbelianGroup lat_grp = make_fg_group(dim, rel_lat);

    std::vector<IntMat> act_lat, act_cover;
    for (Elt g = 0; g < gamma.order; ++g) {
        IntMat a(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) a(i, i) = sign_of(g);
        act_lat.push_back(a);
        act_cover.push_back(a);
    }

    UnitaryExample ex;
    ex.lattice = make_gamma_module(lat_grp, gamma, act_lat);
    ex.cover = make_gamma_module(cover_grp, gamma, act_cover);
    ex.inclusion = make_module_hom(ex.lattice, ex.cover, basis);
    ex.frobenius = 4;  // (1,0) in Z/8 x Z/4
    ex.ramified = 1;   // (0,1)
    return ex;
}

Construction36 build_construction36() {
    FiniteGroup gamma = direct_product(cyclic_group(2), cyclic_group(2));
    const Elt sigma = 2, tau = 1;  // (1,0) and (0,1)

    auto mat1 = [](Int v) {
        IntMat m(1, 1);
        m(0, 0) = v;
        return m;
    };
    auto relmod = [&](Int n) { return make_fg_group(1, mat1(n)); };

    // middle term Z/8 with sigma = 5, tau = -1
    std::vector<IntMat> act_mid(4, mat1(1));
    act_mid[sigma] = mat1(5);
    act_mid[tau] = mat1(-1);
    act_mid[3] = mat1(-5);
    GammaModule mid = make_gamma_module(relmod(8), gamma, act_mid);

    // coefficient Z/2 with the trivial action
    GammaModule sub = make_gamma_module(relmod(2), gamma, std::vector<IntMat>(4, mat1(1)));

    // quotient Z/4 carries the induced action (sigma acts trivially there)
    GammaModule quot = make_gamma_module(relmod(4), gamma, act_mid);

    Construction36 c;
    c.ses = make_ses(std::move(sub), std::move(mid), std::move(quot), mat1(4), mat1(1));
    c.sigma = sigma;
    c.tau = tau;
    return c;
}

}  // namespace ccoh
