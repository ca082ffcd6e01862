#pragma once

#include "crossedcoh/finite_group.hpp"
#include "crossedcoh/hypercoh.hpp"
#include "crossedcoh/intmat.hpp"

#include <cstddef>
#include <vector>

namespace ccoh {

/// A finitely generated abelian group presented by an integer relation
/// matrix (one relation per column). The Smith form of the relations is
/// cached; it provides unique normal forms and the torsion/free split.
struct FgAbelianGroup {
    std::size_t generators = 0;   // p
    IntMat relations;             // p x r
    SnfResult rel_snf;
    std::vector<std::size_t> kept;  // diagonal coordinates that survive (d != 1)
    std::vector<Int> moduli;        // per kept coordinate: d > 1 torsion, 0 free

    std::vector<Int> invariants() const;  // torsion chain then one 0 per free rank
    Int order() const;                    // 0 when infinite

    std::vector<Int> normal_form(const std::vector<Int>& x) const;
    bool is_zero(const std::vector<Int>& x) const;
    bool equal(const std::vector<Int>& x, const std::vector<Int>& y) const;

    std::vector<Int> to_coords(const std::vector<Int>& x) const;    // length kept.size()
    std::vector<Int> from_coords(const std::vector<Int>& w) const;  // back to ambient
};

FgAbelianGroup make_fg_group(std::size_t generators, IntMat relations);

/// A gamma-module: the action is by integer matrices descending to the
/// quotient. Validated on construction.
struct GammaModule {
    FgAbelianGroup module;
    FiniteGroup gamma;
    std::vector<IntMat> action;  // per gamma element, p x p

    std::vector<Int> act(Elt s, const std::vector<Int>& x) const;
};

GammaModule make_gamma_module(FgAbelianGroup module, FiniteGroup gamma,
                              std::vector<IntMat> action);

struct ModuleHom {
    IntMat matrix;  // target generators x source generators
};

ModuleHom make_module_hom(const GammaModule& source, const GammaModule& target, IntMat matrix);

/// A cocycle gamma -> M, one ambient coordinate vector per gamma element.
using ModuleCocycle = std::vector<std::vector<Int>>;

struct ModuleH1 {
    std::vector<Int> invariant_factors;   // nontrivial torsion then zeros
    std::vector<ModuleCocycle> generators;  // one representative cocycle per factor
    Int order() const { return invariants_order(invariant_factors); }
};

/// H^1(gamma, M) from the full multiplication table: one linear condition per
/// ordered pair of gamma elements, solved exactly over the integers.
ModuleH1 mod_h1(const GammaModule& m, const Budget& budget = {});

struct ModuleH0 {
    std::vector<Int> invariant_factors;
    std::vector<std::vector<Int>> generators;  // ambient coordinates, normal forms
};

ModuleH0 mod_h0(const GammaModule& m, const Budget& budget = {});

/// All elements of a finite module (normal forms). Throws bound_exceeded when
/// the order exceeds cap.
std::vector<std::vector<Int>> module_elements(const FgAbelianGroup& m, std::uint64_t cap = 1 << 20);

/// Whether a map gamma -> M satisfies the cocycle identity everywhere.
bool is_module_cocycle(const GammaModule& m, const ModuleCocycle& c);
/// Whether a cocycle is a coboundary (sigma -> (sigma-1)x for some x).
bool is_module_coboundary(const GammaModule& m, const ModuleCocycle& c);

struct ShortExactSequence {
    GammaModule sub, mid, quot;
    IntMat incl;  // sub -> mid
    IntMat proj;  // mid -> quot
};

/// Verifies injectivity, im = ker, and surjectivity by lattice computations;
/// throws not_exact otherwise.
ShortExactSequence make_ses(GammaModule sub, GammaModule mid, GammaModule quot, IntMat incl,
                            IntMat proj);

struct ConnectingResult {
    ModuleCocycle cocycle;  // indexed by the subgroup's own element order
    bool trivial = false;
    FiniteGroup subgroup;
    GammaModule sub_restricted;  // the sub module with the restricted action
};

/// The degree-0 connecting map: lift a fixed element of the quotient and
/// measure how far the lift is from being fixed. gamma_sub lists the elements
/// of the acting subgroup (closed under the group operations).
ConnectingResult connecting_delta0(const ShortExactSequence& ses, const std::vector<Int>& c,
                                   const std::vector<Elt>& gamma_sub, bool alternate_lift = false);

struct KernelResult {
    std::vector<Int> invariant_factors;
    std::vector<ModuleCocycle> generators;
    Int order() const { return invariants_order(invariant_factors); }
};

/// Kernel of the induced map H^1(gamma, source) -> H^1(gamma, target).
KernelResult h1_kernel(const GammaModule& source, const GammaModule& target, const ModuleHom& f,
                       const Budget& budget = {});

/// Whether a source cocycle's class lies in the kernel of the induced map.
bool cocycle_in_h1_kernel(const GammaModule& source, const GammaModule& target,
                          const ModuleHom& f, const ModuleCocycle& c);

struct UnitaryExample {
    GammaModule lattice;      // X
    GammaModule cover;        // X^sc
    ModuleHom inclusion;      // X -> X^sc
    Elt frobenius;            // the order-8 generator index in gamma
    Elt ramified;             // the order-4 generator index
};

/// The rank-2n character lattices with gamma = Z/8 x Z/4 acting through the
/// sign of the first generator.
UnitaryExample build_unitary_example(int n);

struct Construction36 {
    ShortExactSequence ses;  // Z/2 -> Z/8 -> Z/4 over gamma = (Z/2)^2
    Elt sigma;               // acts by 5 on the middle term
    Elt tau;                 // acts by -1
};

Construction36 build_construction36();

}  // namespace ccoh
