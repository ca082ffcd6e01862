#pragma once

#include "crossedcoh/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ccoh {

using Elt = int;  // element index into a multiplication table

/// A finite group given by its complete multiplication table.
/// table[x][y] is the index of x*y. Construction through make_group checks
/// every axiom exhaustively, so downstream code can assume a genuine group.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<Elt>> table;
    Elt identity = 0;
    std::vector<Elt> inv;                       // two-sided inverses
    std::optional<std::vector<std::string>> names;

    Elt mul(Elt x, Elt y) const { return table[x][y]; }
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv[g]); }
    Elt comm(Elt x, Elt y) const { return mul(mul(x, y), mul(inv[x], inv[y])); }

    int element_order(Elt x) const;
    bool is_abelian() const;
    std::vector<Elt> center() const;
    std::string name_of(Elt x) const;
};

/// Validates the table and returns the group. Throws not_a_group with a
/// witness triple on the first axiom failure.
FiniteGroup make_group(const std::vector<std::vector<Elt>>& table,
                       std::optional<std::vector<std::string>> names = std::nullopt);

// Table builders for fixtures and tests.
FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup klein_four();
FiniteGroup quaternion_group();          // 1,-1,i,-i,j,-j,k,-k
FiniteGroup dihedral_group(int n);       // order 2n
FiniteGroup symmetric3();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Closure of a subset under multiplication and inverses.
std::vector<Elt> subgroup_closure(const FiniteGroup& g, std::vector<Elt> gens);
bool is_normal(const FiniteGroup& g, const std::vector<Elt>& subgroup);
/// Subgroup on its own table plus the inclusion map into g.
std::pair<FiniteGroup, std::vector<Elt>> subgroup_as_group(const FiniteGroup& g,
                                                           const std::vector<Elt>& elements);

/// A homomorphism between validated groups, stored as the image of every
/// source element. Holds its endpoint groups by value; tables are small
/// enough that sharing is not worth the aliasing risk.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<Elt> image;

    Elt operator()(Elt x) const { return image[x]; }
    bool is_bijective() const;
    std::vector<Elt> kernel_elements() const;
    std::vector<Elt> image_elements() const;
};

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<Elt> image);
GroupHom compose(const GroupHom& second, const GroupHom& first);  // second after first
bool hom_valid(const FiniteGroup& source, const FiniteGroup& target, const std::vector<Elt>& image,
               std::string* witness = nullptr);

/// Quotient g/n for a normal subgroup given by its element list. Returns the
/// quotient on coset representatives (least element index per coset, in
/// ascending order) plus the projection hom.
std::pair<FiniteGroup, GroupHom> quotient_group(const FiniteGroup& g, const std::vector<Elt>& normal);

/// A finite group with an action of gamma by automorphisms.
struct GammaGroup {
    FiniteGroup gamma;
    FiniteGroup group;
    std::vector<std::vector<Elt>> action;  // action[s][x] = image of x under s

    Elt act(Elt s, Elt x) const { return action[s][x]; }
};

GammaGroup make_gamma_group(FiniteGroup gamma, FiniteGroup group,
                            std::vector<std::vector<Elt>> action);
GammaGroup trivial_gamma_group(const FiniteGroup& gamma, FiniteGroup group);

/// Aut(g) with its inner subgroup and the Inn-coset partition.
struct OutData {
    FiniteGroup group;
    std::vector<std::vector<Elt>> automorphisms;   // image vectors
    std::vector<std::size_t> inner;                // indices into automorphisms
    std::vector<std::vector<std::size_t>> out_classes;  // coset partition
    std::vector<std::size_t> class_of;             // aut index -> class index
    std::vector<std::size_t> class_rep;            // class index -> canonical aut index

    std::size_t aut_index(const std::vector<Elt>& image) const;  // throws if absent
    std::size_t compose_classes(std::size_t a, std::size_t b) const;
};

/// Exhaustive automorphism search. Throws bound_exceeded when the group order
/// is above max_order.
OutData compute_out(const FiniteGroup& g, int max_order = 64);
std::vector<std::vector<Elt>> automorphisms_serial(const FiniteGroup& g);
std::vector<std::vector<Elt>> automorphisms_parallel(const FiniteGroup& g);

}  // namespace ccoh
