#pragma once

#include "crossedcoh/hypercoh.hpp"
#include "crossedcoh/intmat.hpp"

#include <vector>

namespace ccoh {

// Group law on 0-cochains twisted by the braiding, with the displayed inverse.
Cochain0 c0_mul(const Braiding& b, const Cochain0& x, const Cochain0& y);
Cochain0 c0_inv(const Braiding& b, const Cochain0& x);

// Group law on 1-cochains; Z^1 is closed under both operations. The displayed
// inverse formula inverts exactly on cocycles; c1_solve_inverse constructs the
// group inverse of an arbitrary cochain from the product formula.
Cochain1 c1_mul(const Braiding& b, const Cochain1& x, const Cochain1& y);
Cochain1 c1_inv(const Braiding& b, const Cochain1& x);
Cochain1 c1_solve_inverse(const Braiding& b, const Cochain1& x);

/// The differential C^0 -> Z^1; a homomorphism for the braided C^0 law that
/// vanishes on 0-coboundaries.
Cochain1 diff_d(const Braiding& b, const Cochain0& c);

/// Left action of Z^1 on C^0 descending to C^0/B^0.
Cochain0 act_z1(const Braiding& b, const Cochain1& z, const Cochain0& c);

/// Representative of the pairing {z1, z2} in C^0 (its class in C^0/B^0 is the
/// braiding value on the induced crossed module).
Cochain0 braid_z1(const Braiding& b, const Cochain1& z1, const Cochain1& z2);

/// The correction delta(psi,g) entering the orbit/coset comparison.
std::vector<Elt> orbit_correction(const Braiding& b, const Cochain1& z, Elt g);

/// C^0 partitioned into B^0-cosets under the braided law.
struct C0Quotient {
    std::vector<Cochain0> elements;     // sorted
    std::vector<std::size_t> coset_of;  // parallel to elements
    std::vector<Cochain0> reps;         // lexicographically least per coset
    bool b0_normal = true;

    std::size_t coset(const Cochain0& c) const;
};

C0Quotient build_c0_quotient(const Braiding& b, const Budget& budget = {});

/// The induced-structure checks: the quotient boundary map is a crossed
/// module for the Z^1-action, and the induced pairing satisfies the braiding
/// axioms that do not follow from symmetry.
ValidationReport validate_dbar_structures(const Braiding& b, const Budget& budget = {});

/// H^1 with its group structure, as the cokernel of the induced differential.
struct AbelianH1 {
    std::vector<H1Class> classes;                     // canonical orbit representatives
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> mul_table;  // class x class
    std::vector<std::size_t> inverse;
    std::vector<Int> invariant_factors;               // divisor chain, nontrivial entries
};

AbelianH1 h1_abelian(const Braiding& b, const Budget& budget = {});

/// Invariant factors of a finite abelian group given by its multiplication
/// table (indices into a class list).
std::vector<Int> abelian_invariants(const std::vector<std::vector<std::size_t>>& table,
                                    std::size_t identity);

}  // namespace ccoh
