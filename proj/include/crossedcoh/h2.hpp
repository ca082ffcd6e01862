#pragma once

#include "crossedcoh/hypercoh.hpp"

#include <optional>
#include <vector>

namespace ccoh {

/// Coefficient datum for nonabelian H^2: a homomorphism gamma -> Out(A),
/// stored classwise against a fixed Out decomposition of A.
struct Band {
    FiniteGroup gamma;
    OutData out;                     // Aut/Inn data of the coefficient group
    std::vector<std::size_t> beta;   // gamma -> Out class index
};

bool band_is_homomorphism(const Band& band);
bool same_band(const Band& a, const Band& b);

/// Band-valued 2-cochain (u: gamma x gamma -> A, f: gamma -> Aut(A)).
struct TwoCocycle {
    std::vector<Elt> u;              // row-major over gamma x gamma
    std::vector<std::size_t> f;      // indices into band.out.automorphisms
    auto operator<=>(const TwoCocycle&) const = default;

    Elt u_at(int m, Elt s, Elt t) const { return u[static_cast<std::size_t>(s) * m + t]; }
};

CocycleCheck is_cocycle2(const Band& band, const TwoCocycle& c);

/// Left action of Maps(gamma, A) on 2-cocycles.
TwoCocycle act_w(const Band& band, const std::vector<Elt>& w, const TwoCocycle& c);

struct NeutralityResult {
    bool neutral = false;
    std::vector<Elt> witness;  // lexicographically least trivializing w
};

/// Searches Maps(gamma, A) in lexicographic order for a w trivializing u.
NeutralityResult is_neutral_class(const Band& band, const TwoCocycle& c,
                                  const Budget& budget = {});
NeutralityResult is_neutral_class_serial(const Band& band, const TwoCocycle& c,
                                         const Budget& budget = {});

/// Whether two 2-cocycles over the same band are act_w-equivalent.
bool act_w_equivalent(const Band& band, const TwoCocycle& a, const TwoCocycle& b,
                      const Budget& budget = {});

/// The coboundary of a hyper-cocycle: f_s = theta_{psi_s} after the s-action,
/// with the band it induces. Verifies the cocycle conditions on the output.
std::pair<Band, TwoCocycle> delta_coboundary(const CrossedModule& cm, const Cochain1& c,
                                             const OutData& out_of_a);
std::pair<Band, TwoCocycle> delta_coboundary(const CrossedModule& cm, const Cochain1& c);

/// Witness for 2-neutrality of a hyper-cocycle class representative: w with
/// w_{st} u_{s,t} (^{psi_s s} w_t)^-1 w_s^-1 = 1 everywhere.
std::optional<std::vector<Elt>> two_neutral_witness(const CrossedModule& cm, const Cochain1& z,
                                                    const Budget& budget = {});

/// Classwise equivalence: membership in the image of the crossing map equals
/// neutrality of the coboundary, plus the 2-neutrality characterization.
ValidationReport kang_criterion(const CrossedModule& cm, const Budget& budget = {});

}  // namespace ccoh
