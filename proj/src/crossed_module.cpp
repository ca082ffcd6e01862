#include "crossedcoh/crossed_module.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ccoh {

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "pass " : "FAIL ") << c.axiom;
        if (!c.passed && !c.witness.empty()) os << " at " << c.witness;
        os << "\n";
    }
    return os.str();
}

void ValidationReport::add(std::string axiom, bool passed, std::string witness) {
    checks.push_back({std::move(axiom), passed, std::move(witness)});
}

CrossedModule make_crossed_module(GammaGroup coeff, GammaGroup base, std::vector<Elt> rho,
                                  std::vector<std::vector<Elt>> theta) {
    if (coeff.gamma.table != base.gamma.table)
        throw error("coefficient and base gamma-groups have different gamma");
    if (static_cast<int>(rho.size()) != coeff.group.order)
        throw error("rho table has wrong length");
    if (static_cast<int>(theta.size()) != base.group.order)
        throw error("theta needs one permutation per base element");
    for (const auto& p : theta)
        if (static_cast<int>(p.size()) != coeff.group.order)
            throw error("theta permutation has wrong length");
    CrossedModule cm;
    cm.coeff = std::move(coeff);
    cm.base = std::move(base);
    cm.rho = std::move(rho);
    cm.theta = std::move(theta);
    return cm;
}

namespace {

std::string w2(const FiniteGroup& g1, Elt a, const FiniteGroup& g2, Elt b) {
    return "(" + g1.name_of(a) + "," + g2.name_of(b) + ")";
}

std::string w3(const FiniteGroup& g1, Elt a, const FiniteGroup& g2, Elt b, const FiniteGroup& g3,
               Elt c) {
    return "(" + g1.name_of(a) + "," + g2.name_of(b) + "," + g3.name_of(c) + ")";
}

}  // namespace

ValidationReport validate_crossed_module(const CrossedModule& cm) {
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    const FiniteGroup& Ga = cm.gamma();
    ValidationReport rep;

    // rho is a homomorphism
    {
        std::string w;
        bool ok = hom_valid(A, G, cm.rho, &w);
        rep.add("rho homomorphism", ok, w);
    }
    // rho is gamma-equivariant
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < Ga.order && ok; ++s)
            for (Elt a = 0; a < A.order && ok; ++a)
                if (cm.rho[cm.act_gamma_a(s, a)] != cm.act_gamma_g(s, cm.rho[a])) {
                    ok = false;
                    w = w2(Ga, s, A, a);
                }
        rep.add("rho gamma-equivariant", ok, w);
    }
    // theta is a G-action by automorphisms
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g) {
            std::string hw;
            if (!hom_valid(A, A, cm.theta[g], &hw)) {
                ok = false;
                w = "theta_" + G.name_of(g) + ": " + hw;
            }
        }
        for (Elt a = 0; a < A.order && ok; ++a)
            if (cm.theta[G.identity][a] != a) {
                ok = false;
                w = "theta_1 moves " + A.name_of(a);
            }
        for (Elt g = 0; g < G.order && ok; ++g)
            for (Elt h = 0; h < G.order && ok; ++h)
                for (Elt a = 0; a < A.order && ok; ++a)
                    if (cm.theta[G.mul(g, h)][a] != cm.theta[g][cm.theta[h][a]]) {
                        ok = false;
                        w = w3(G, g, G, h, A, a);
                    }
        rep.add("theta G-action by automorphisms", ok, w);
    }
    // theta is gamma-equivariant
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < Ga.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                for (Elt a = 0; a < A.order && ok; ++a)
                    if (cm.act_gamma_a(s, cm.act_g(g, a)) !=
                        cm.act_g(cm.act_gamma_g(s, g), cm.act_gamma_a(s, a))) {
                        ok = false;
                        w = w3(Ga, s, G, g, A, a);
                    }
        rep.add("theta gamma-equivariant", ok, w);
    }
    // CM1: theta_{rho(s)}(s') = s s' s^-1
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < A.order && ok; ++s)
            for (Elt t = 0; t < A.order && ok; ++t)
                if (cm.act_g(cm.rho[s], t) != A.conj(s, t)) {
                    ok = false;
                    w = w2(A, s, A, t);
                }
        rep.add("CM1", ok, w);
    }
    // CM2: rho(theta_g(s')) = g rho(s') g^-1
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g)
            for (Elt t = 0; t < A.order && ok; ++t)
                if (cm.rho[cm.act_g(g, t)] != G.conj(g, cm.rho[t])) {
                    ok = false;
                    w = w2(G, g, A, t);
                }
        rep.add("CM2", ok, w);
    }
    return rep;
}

ValidationReport validate_braiding(const Braiding& b, BraidingMode mode) {
    const CrossedModule& cm = b.cm;
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    const FiniteGroup& Ga = cm.gamma();
    ValidationReport rep;

    {
        bool ok = b.pairing.size() == static_cast<std::size_t>(G.order);
        for (const auto& row : b.pairing)
            if (row.size() != static_cast<std::size_t>(G.order)) ok = false;
        rep.add("pairing shape", ok);
        if (!ok) return rep;
    }
    // gamma-equivariance
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < Ga.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                for (Elt h = 0; h < G.order && ok; ++h)
                    if (cm.act_gamma_a(s, b.pair(g, h)) !=
                        b.pair(cm.act_gamma_g(s, g), cm.act_gamma_g(s, h))) {
                        ok = false;
                        w = w3(Ga, s, G, g, G, h);
                    }
        rep.add("pairing gamma-equivariant", ok, w);
    }
    // Br1: rho({g1,g2}) = [g1,g2]
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g)
            for (Elt h = 0; h < G.order && ok; ++h)
                if (cm.rho[b.pair(g, h)] != G.comm(g, h)) {
                    ok = false;
                    w = w2(G, g, G, h);
                }
        rep.add("Br1", ok, w);
    }
    // Br2: {rho(s'),g} = s' * (^g s')^-1
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < A.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                if (b.pair(cm.rho[s], g) != A.mul(s, A.inv[cm.act_g(g, s)])) {
                    ok = false;
                    w = w2(A, s, G, g);
                }
        rep.add("Br2", ok, w);
    }
    // Br3: {g,rho(s')} = ^g s' * s'^-1
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < A.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                if (b.pair(g, cm.rho[s]) != A.mul(cm.act_g(g, s), A.inv[s])) {
                    ok = false;
                    w = w2(G, g, A, s);
                }
        rep.add("Br3", ok, w);
    }
    // Br4: {g1, g2 g3} = {g1,g2} * ^{g2}{g1,g3}
    {
        bool ok = true;
        std::string w;
        for (Elt g1 = 0; g1 < G.order && ok; ++g1)
            for (Elt g2 = 0; g2 < G.order && ok; ++g2)
                for (Elt g3 = 0; g3 < G.order && ok; ++g3)
                    if (b.pair(g1, G.mul(g2, g3)) !=
                        A.mul(b.pair(g1, g2), cm.act_g(g2, b.pair(g1, g3)))) {
                        ok = false;
                        w = w3(G, g1, G, g2, G, g3);
                    }
        rep.add("Br4", ok, w);
    }
    // Br5: {g1 g2, g3} = ^{g1}{g2,g3} * {g1,g3}
    {
        bool ok = true;
        std::string w;
        for (Elt g1 = 0; g1 < G.order && ok; ++g1)
            for (Elt g2 = 0; g2 < G.order && ok; ++g2)
                for (Elt g3 = 0; g3 < G.order && ok; ++g3)
                    if (b.pair(G.mul(g1, g2), g3) !=
                        A.mul(cm.act_g(g1, b.pair(g2, g3)), b.pair(g1, g3))) {
                        ok = false;
                        w = w3(G, g1, G, g2, G, g3);
                    }
        rep.add("Br5", ok, w);
    }
    if (mode == BraidingMode::symmetric || mode == BraidingMode::picard) {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g)
            for (Elt h = 0; h < G.order && ok; ++h)
                if (A.mul(b.pair(g, h), b.pair(h, g)) != A.identity) {
                    ok = false;
                    w = w2(G, g, G, h);
                }
        rep.add("Sym", ok, w);
    }
    if (mode == BraidingMode::picard) {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g)
            if (b.pair(g, g) != A.identity) {
                ok = false;
                w = G.name_of(g);
            }
        rep.add("Pic", ok, w);
    }
    return rep;
}

ValidationReport derived_identities(const Braiding& b) {
    const CrossedModule& cm = b.cm;
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();
    ValidationReport rep;

    // ^g s * {g,g'} = {g, rho(s) g'} * s
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < A.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                for (Elt h = 0; h < G.order && ok; ++h)
                    if (A.mul(cm.act_g(g, s), b.pair(g, h)) !=
                        A.mul(b.pair(g, G.mul(cm.rho[s], h)), s)) {
                        ok = false;
                        w = w3(A, s, G, g, G, h);
                    }
        rep.add("left slide", ok, w);
    }
    // s * {g',g} = {rho(s) g', g} * ^g s
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < A.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                for (Elt h = 0; h < G.order && ok; ++h)
                    if (A.mul(s, b.pair(h, g)) !=
                        A.mul(b.pair(G.mul(cm.rho[s], h), g), cm.act_g(g, s))) {
                        ok = false;
                        w = w3(A, s, G, g, G, h);
                    }
        rep.add("right slide", ok, w);
    }
    // {g,g'} * ^{g'g} s = ^{gg'} s * {g,g'}
    {
        bool ok = true;
        std::string w;
        for (Elt s = 0; s < A.order && ok; ++s)
            for (Elt g = 0; g < G.order && ok; ++g)
                for (Elt h = 0; h < G.order && ok; ++h)
                    if (A.mul(b.pair(g, h), cm.act_g(G.mul(h, g), s)) !=
                        A.mul(cm.act_g(G.mul(g, h), s), b.pair(g, h))) {
                        ok = false;
                        w = w3(A, s, G, g, G, h);
                    }
        rep.add("conjugation exchange", ok, w);
    }
    // {1,g} = {g,1} = 1
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g)
            if (b.pair(G.identity, g) != A.identity || b.pair(g, G.identity) != A.identity) {
                ok = false;
                w = G.name_of(g);
            }
        rep.add("unit pairing", ok, w);
    }
    // {g,g'} = ^{g'g} {g^-1, g'^-1}
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < G.order && ok; ++g)
            for (Elt h = 0; h < G.order && ok; ++h)
                if (b.pair(g, h) != cm.act_g(G.mul(h, g), b.pair(G.inv[g], G.inv[h]))) {
                    ok = false;
                    w = w2(G, g, G, h);
                }
        rep.add("inverse pairing", ok, w);
    }
    return rep;
}

Braiding trivial_braiding(CrossedModule cm) {
    Braiding b;
    b.pairing.assign(cm.G().order, std::vector<Elt>(cm.G().order, cm.A().identity));
    b.cm = std::move(cm);
    return b;
}

Braiding commutator_braiding(const CrossedModule& cm, LiftChoice lift) {
    const FiniteGroup& A = cm.A();
    const FiniteGroup& G = cm.G();

    std::vector<Elt> lift_of(G.order, -1);
    if (lift == LiftChoice::least_index) {
        for (Elt a = A.order - 1; a >= 0; --a) lift_of[cm.rho[a]] = a;
    } else {
        for (Elt a = 0; a < A.order; ++a) lift_of[cm.rho[a]] = a;
    }
    for (Elt g = 0; g < G.order; ++g)
        if (lift_of[g] < 0)
            throw not_surjective("rho misses base element " + G.name_of(g));

    std::vector<Elt> ker;
    for (Elt a = 0; a < A.order; ++a)
        if (cm.rho[a] == G.identity) ker.push_back(a);
    for (Elt k : ker)
        for (Elt a = 0; a < A.order; ++a)
            if (A.mul(k, a) != A.mul(a, k))
                throw kernel_not_central("kernel element " + A.name_of(k) +
                                         " does not commute with " + A.name_of(a));

    Braiding b;
    b.cm = cm;
    b.pairing.assign(G.order, std::vector<Elt>(G.order));
    for (Elt g = 0; g < G.order; ++g)
        for (Elt h = 0; h < G.order; ++h) b.pairing[g][h] = A.comm(lift_of[g], lift_of[h]);
    return b;
}

CrossedMorphism make_crossed_morphism(CrossedModule source, CrossedModule target,
                                      std::vector<Elt> fA, std::vector<Elt> fG) {
    CrossedMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.fA = std::move(fA);
    m.fG = std::move(fG);
    ValidationReport rep = validate_crossed_morphism(m);
    if (!rep.ok()) throw error("invalid crossed morphism:\n" + rep.summary());
    return m;
}

ValidationReport validate_crossed_morphism(const CrossedMorphism& m) {
    ValidationReport rep;
    const CrossedModule& s = m.source;
    const CrossedModule& t = m.target;
    rep.add("same gamma", s.gamma().table == t.gamma().table);
    {
        std::string w;
        rep.add("fA homomorphism", hom_valid(s.A(), t.A(), m.fA, &w), w);
    }
    {
        std::string w;
        rep.add("fG homomorphism", hom_valid(s.G(), t.G(), m.fG, &w), w);
    }
    if (!rep.ok()) return rep;
    // rho2 fA = fG rho1
    {
        bool ok = true;
        std::string w;
        for (Elt a = 0; a < s.A().order && ok; ++a)
            if (t.rho[m.fA[a]] != m.fG[s.rho[a]]) {
                ok = false;
                w = s.A().name_of(a);
            }
        rep.add("square commutes", ok, w);
    }
    // gamma-equivariance of fA, fG
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < s.gamma().order && ok; ++g) {
            for (Elt a = 0; a < s.A().order && ok; ++a)
                if (m.fA[s.act_gamma_a(g, a)] != t.act_gamma_a(g, m.fA[a])) {
                    ok = false;
                    w = w2(s.gamma(), g, s.A(), a);
                }
            for (Elt x = 0; x < s.G().order && ok; ++x)
                if (m.fG[s.act_gamma_g(g, x)] != t.act_gamma_g(g, m.fG[x])) {
                    ok = false;
                    w = w2(s.gamma(), g, s.G(), x);
                }
        }
        rep.add("gamma-equivariance", ok, w);
    }
    // fA(^g s) = ^{fG(g)} fA(s)
    {
        bool ok = true;
        std::string w;
        for (Elt g = 0; g < s.G().order && ok; ++g)
            for (Elt a = 0; a < s.A().order && ok; ++a)
                if (m.fA[s.act_g(g, a)] != t.act_g(m.fG[g], m.fA[a])) {
                    ok = false;
                    w = w2(s.G(), g, s.A(), a);
                }
        rep.add("action compatibility", ok, w);
    }
    return rep;
}

CrossedMorphism compose(const CrossedMorphism& second, const CrossedMorphism& first) {
    std::vector<Elt> fa(first.source.A().order), fg(first.source.G().order);
    for (Elt a = 0; a < first.source.A().order; ++a) fa[a] = second.fA[first.fA[a]];
    for (Elt g = 0; g < first.source.G().order; ++g) fg[g] = second.fG[first.fG[g]];
    return make_crossed_morphism(first.source, second.target, std::move(fa), std::move(fg));
}

CrossedMorphism identity_morphism(const CrossedModule& cm) {
    std::vector<Elt> fa(cm.A().order), fg(cm.G().order);
    std::iota(fa.begin(), fa.end(), 0);
    std::iota(fg.begin(), fg.end(), 0);
    return make_crossed_morphism(cm, cm, std::move(fa), std::move(fg));
}

PreservationResult braiding_preserved(const CrossedMorphism& m, const Braiding& b1,
                                      const Braiding& b2) {
    const FiniteGroup& G1 = m.source.G();
    for (Elt g = 0; g < G1.order; ++g)
        for (Elt h = 0; h < G1.order; ++h)
            if (m.fA[b1.pair(g, h)] != b2.pair(m.fG[g], m.fG[h]))
                return {false, g, h};
    return {true, -1, -1};
}

}  // namespace ccoh
