#pragma once

#include "crossedcoh/finite_group.hpp"

#include <string>
#include <vector>

namespace ccoh {

/// One axiom check. Failures carry a witness tuple so fixture authors can see
/// where their data breaks.
struct CheckResult {
    std::string axiom;
    bool passed = false;
    std::string witness;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    std::string summary() const;
    void add(std::string axiom, bool passed, std::string witness = "");
};

/// A crossed module of gamma-groups: coefficients A in degree -1, base G in
/// degree 0, boundary rho and the G-action theta on A. Both gamma-groups must
/// share the same gamma (verified on construction).
struct CrossedModule {
    GammaGroup coeff;  // A with its gamma action
    GammaGroup base;   // G with its gamma action
    std::vector<Elt> rho;                 // A -> G
    std::vector<std::vector<Elt>> theta;  // theta[g][a]

    const FiniteGroup& gamma() const { return coeff.gamma; }
    const FiniteGroup& A() const { return coeff.group; }
    const FiniteGroup& G() const { return base.group; }

    Elt act_gamma_a(Elt s, Elt a) const { return coeff.act(s, a); }
    Elt act_gamma_g(Elt s, Elt g) const { return base.act(s, g); }
    Elt act_g(Elt g, Elt a) const { return theta[g][a]; }
};

CrossedModule make_crossed_module(GammaGroup coeff, GammaGroup base, std::vector<Elt> rho,
                                  std::vector<std::vector<Elt>> theta);

ValidationReport validate_crossed_module(const CrossedModule& cm);

enum class BraidingMode { braided, symmetric, picard };

/// A braiding pairing {-,-}: G x G -> A on top of a crossed module.
struct Braiding {
    CrossedModule cm;
    std::vector<std::vector<Elt>> pairing;  // pairing[g][g'] in A

    Elt pair(Elt g1, Elt g2) const { return pairing[g1][g2]; }
};

ValidationReport validate_braiding(const Braiding& b, BraidingMode mode);

/// Consistency oracle: the five identities that follow from the braiding
/// axioms, checked independently of them.
ValidationReport derived_identities(const Braiding& b);

/// Trivial pairing; valid only when the base is abelian and theta is trivial.
Braiding trivial_braiding(CrossedModule cm);

enum class LiftChoice { least_index, greatest_index };

/// The commutator-of-lifts pairing {g1,g2} = [s1,s2]. Requires rho surjective
/// with central kernel; both are checked and reported with witnesses.
Braiding commutator_braiding(const CrossedModule& cm, LiftChoice lift = LiftChoice::least_index);

/// A morphism of crossed modules over the same gamma.
struct CrossedMorphism {
    CrossedModule source;
    CrossedModule target;
    std::vector<Elt> fA;
    std::vector<Elt> fG;
};

CrossedMorphism make_crossed_morphism(CrossedModule source, CrossedModule target,
                                      std::vector<Elt> fA, std::vector<Elt> fG);
ValidationReport validate_crossed_morphism(const CrossedMorphism& m);
CrossedMorphism compose(const CrossedMorphism& second, const CrossedMorphism& first);
CrossedMorphism identity_morphism(const CrossedModule& cm);

struct PreservationResult {
    bool preserved = true;
    Elt g1 = -1, g2 = -1;  // first violating pair when not preserved
};

PreservationResult braiding_preserved(const CrossedMorphism& m, const Braiding& b1,
                                      const Braiding& b2);

}  // namespace ccoh
