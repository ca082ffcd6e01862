#pragma once

#include "crossedcoh/crossed_module.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ccoh {

/// Enumeration budget guard. The h1 bound is the product |G|^|gamma| *
/// |A|^(|gamma|^2), compared against `limit`.
struct Budget {
    double limit = 1e8;
    static Budget from_env();  // CROSSEDCOH_BUDGET overrides the default
};

/// Degree-0 hyper-cochain (phi: gamma -> A, g in G).
struct Cochain0 {
    std::vector<Elt> phi;
    Elt g = 0;
    auto operator<=>(const Cochain0&) const = default;
};

/// Degree-1 hyper-cochain (u: gamma x gamma -> A row-major, psi: gamma -> G).
struct Cochain1 {
    std::vector<Elt> u;
    std::vector<Elt> psi;
    auto operator<=>(const Cochain1&) const = default;

    Elt u_at(int m, Elt s, Elt t) const { return u[static_cast<std::size_t>(s) * m + t]; }
};

Cochain1 identity_cochain1(const CrossedModule& cm);
Cochain0 identity_cochain0(const CrossedModule& cm);

struct CocycleCheck {
    bool ok = true;
    std::string witness;  // failing pair or triple
};

/// The two 1-cocycle conditions, checked over every pair and triple.
CocycleCheck is_cocycle1(const CrossedModule& cm, const Cochain1& c);

/// Right action of C^0 on Z^1.
Cochain1 act_c0(const CrossedModule& cm, const Cochain1& z, const Cochain0& c);

/// The plain C^0 group law the action is taken with respect to, and its
/// inverse. (The braided law lives in braided.hpp.)
Cochain0 c0_plain_mul(const CrossedModule& cm, const Cochain0& x, const Cochain0& y);
Cochain0 c0_plain_inv(const CrossedModule& cm, const Cochain0& x);

bool is_cocycle0(const CrossedModule& cm, const Cochain0& c);
std::vector<Cochain0> coboundaries0(const CrossedModule& cm);  // deduplicated
std::vector<Cochain0> all_cochains0(const CrossedModule& cm);

/// Full list of 1-cocycles, sorted by (u, psi). Enumerates psi and solves the
/// first cocycle condition fiberwise before filtering by the second.
std::vector<Cochain1> enumerate_z1(const CrossedModule& cm, const Budget& budget = {});
std::vector<Cochain1> enumerate_z1_serial(const CrossedModule& cm, const Budget& budget = {});

struct H1Class {
    Cochain1 representative;  // lexicographically least in its orbit
    std::size_t orbit_size = 0;
};

/// Orbit decomposition of Z^1 under the C^0-action.
struct H1Decomposition {
    std::vector<H1Class> classes;        // sorted by representative
    std::size_t distinguished = 0;       // class of (1,1)
    std::vector<Cochain1> z1;            // sorted
    std::vector<std::size_t> class_of;   // parallel to z1

    std::size_t class_index(const Cochain1& z) const;  // throws if z is not a cocycle here
    std::vector<std::vector<std::size_t>> orbits() const;
};

H1Decomposition h1_pointed(const CrossedModule& cm, const Budget& budget = {});

/// H^0 of the crossed module: Z^0 modulo B^0 (pointed set with the class of
/// (1,1) distinguished).
struct H0Decomposition {
    std::vector<Cochain0> z0;
    std::vector<std::size_t> class_of;
    std::vector<Cochain0> reps;  // lexicographically least per class
    std::size_t distinguished = 0;
    std::size_t class_index(const Cochain0& z) const;
};

H0Decomposition h0_pointed(const CrossedModule& cm, const Budget& budget = {});

/// Ordinary nonabelian cohomology of a gamma-group, used by the exact
/// sequence and the crossing map.
struct GroupH1 {
    std::vector<std::vector<Elt>> cocycles;   // a: gamma -> X, sorted
    std::vector<std::size_t> class_of;
    std::vector<std::vector<Elt>> reps;
    std::size_t distinguished = 0;
    std::size_t class_index(const std::vector<Elt>& a) const;
};

GroupH1 group_h1(const GammaGroup& x, const Budget& budget = {});
std::vector<Elt> group_h0(const GammaGroup& x);  // fixed points

bool is_group_cocycle(const GammaGroup& x, const std::vector<Elt>& a);

/// Crossing map: the class of (u = 1, psi). Throws not_a_cocycle when psi
/// fails the G-valued cocycle identity.
std::size_t cr1(const CrossedModule& cm, const std::vector<Elt>& psi, const H1Decomposition& h1);

/// Map on H^1 induced by a morphism: result[i] is the target class of source
/// class i. Every orbit element is pushed through and checked to land in the
/// same target class.
std::vector<std::size_t> h1_induced(const CrossedMorphism& m, const H1Decomposition& src,
                                    const H1Decomposition& tgt);

Cochain1 push_cochain(const CrossedMorphism& m, const Cochain1& z);

/// Exactness of
///   H^0(A) -> H^0(G) -> H^0(A->G) -> H^1(A) -> H^1(G) -> H^1(A->G)
/// at the four interior junctions, by brute force over all terms.
ValidationReport check_exact_sequence(const CrossedModule& cm, const Budget& budget = {});

/// ker rho and coker rho comparisons for a morphism.
bool check_quasi_iso(const CrossedMorphism& m);
ValidationReport h1_bijective_under_quasi_iso(const CrossedMorphism& m, const Budget& budget = {});

}  // namespace ccoh
