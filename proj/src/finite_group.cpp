#include "crossedcoh/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccoh {

int FiniteGroup::element_order(Elt x) const {
    int n = 1;
    Elt y = x;
    while (y != identity) {
        y = mul(y, x);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (Elt x = 0; x < order; ++x)
        for (Elt y = x + 1; y < order; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

std::vector<Elt> FiniteGroup::center() const {
    std::vector<Elt> z;
    for (Elt x = 0; x < order; ++x) {
        bool central = true;
        for (Elt y = 0; y < order && central; ++y)
            if (mul(x, y) != mul(y, x)) central = false;
        if (central) z.push_back(x);
    }
    return z;
}

std::string FiniteGroup::name_of(Elt x) const {
    if (names && x < static_cast<Elt>(names->size())) return (*names)[x];
    return std::to_string(x);
}

FiniteGroup make_group(const std::vector<std::vector<Elt>>& table,
                       std::optional<std::vector<std::string>> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw not_a_group("empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw not_a_group("table is not square");
        for (Elt e : row)
            if (e < 0 || e >= n) throw not_a_group("table entry out of range");
    }
    if (names && static_cast<int>(names->size()) != n)
        throw not_a_group("names count does not match order");

    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table[i][j]])
                throw not_a_group("row " + std::to_string(i) + " repeats element " +
                                  std::to_string(table[i][j]));
            if (seen_col[table[j][i]])
                throw not_a_group("column " + std::to_string(i) + " repeats element " +
                                  std::to_string(table[j][i]));
            seen_row[table[i][j]] = true;
            seen_col[table[j][i]] = true;
        }
    }
    // identity
    Elt e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            if (table[i][j] != j || table[j][i] != j) ok = false;
        if (ok) e = i;
    }
    if (e < 0) throw not_a_group("no two-sided identity");
    // associativity
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw not_a_group("associativity fails at (" + std::to_string(x) + "," +
                                      std::to_string(y) + "," + std::to_string(z) + ")");
    // inverses
    std::vector<Elt> inv(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (table[x][y] == e && table[y][x] == e) {
                inv[x] = y;
                break;
            }
        if (inv[x] < 0) throw not_a_group("element " + std::to_string(x) + " has no two-sided inverse");
    }

    FiniteGroup g;
    g.order = n;
    g.table = table;
    g.identity = e;
    g.inv = std::move(inv);
    g.names = std::move(names);
    return g;
}

FiniteGroup trivial_group() { return make_group({{0}}); }

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return make_group(t);
}

FiniteGroup klein_four() {
    // index = bitmask in (Z/2)^2
    std::vector<std::vector<Elt>> t(4, std::vector<Elt>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return make_group(t, std::vector<std::string>{"1", "a", "b", "ab"});
}

FiniteGroup quaternion_group() {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<Elt>> t(8, std::vector<Elt>(8));
    // base units: 1->0, i->2, j->4, k->6; sign in bit 0
    auto unit_mul = [&](int a, int b) -> int {
        // multiply base units, return signed index
        static const int tab[4][4] = {
            // 1   i   j   k     (row * col)
            {0, 2, 4, 6},  // 1
            {2, 1, 6, 5},  // i: i*i=-1, i*j=k, i*k=-j
            {4, 7, 1, 2},  // j: j*i=-k, j*j=-1, j*k=i
            {6, 4, 3, 1},  // k: k*i=j, k*j=-i, k*k=-1
        };
        return tab[a][b];
    };
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int r = unit_mul(x >> 1, y >> 1);
            int sign = (x & 1) ^ (y & 1);
            t[x][y] = sign ? neg(r) : r;
        }
    return make_group(
        t, std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup dihedral_group(int n) {
    // 0..n-1 rotations, n..2n-1 reflections
    const int m = 2 * n;
    std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            bool rx = x >= n, ry = y >= n;
            int a = x % n, b = y % n;
            int r;
            if (!rx && !ry) r = (a + b) % n;
            else if (!rx && ry) r = n + (b - a + n) % n;
            else if (rx && !ry) r = n + (a + b) % n;
            else r = (b - a + n) % n;
            t[x][y] = r;
        }
    return make_group(t);
}

FiniteGroup symmetric3() { return dihedral_group(3); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.order * b.order;
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    auto idx = [&](Elt x, Elt y) { return x * b.order + y; };
    for (Elt x1 = 0; x1 < a.order; ++x1)
        for (Elt y1 = 0; y1 < b.order; ++y1)
            for (Elt x2 = 0; x2 < a.order; ++x2)
                for (Elt y2 = 0; y2 < b.order; ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return make_group(t);
}

std::vector<Elt> subgroup_closure(const FiniteGroup& g, std::vector<Elt> gens) {
    std::set<Elt> s{g.identity};
    for (Elt x : gens) s.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elt> cur(s.begin(), s.end());
        for (Elt x : cur)
            for (Elt y : cur) {
                if (s.insert(g.mul(x, y)).second) grew = true;
                if (s.insert(g.inv[x]).second) grew = true;
            }
    }
    return {s.begin(), s.end()};
}

bool is_normal(const FiniteGroup& g, const std::vector<Elt>& subgroup) {
    std::set<Elt> s(subgroup.begin(), subgroup.end());
    for (Elt x = 0; x < g.order; ++x)
        for (Elt h : subgroup)
            if (!s.count(g.conj(x, h))) return false;
    return true;
}

std::pair<FiniteGroup, std::vector<Elt>> subgroup_as_group(const FiniteGroup& g,
                                                           const std::vector<Elt>& elements) {
    std::vector<Elt> elems = elements;
    std::sort(elems.begin(), elems.end());
    std::map<Elt, int> pos;
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<Elt>> t(elems.size(), std::vector<Elt>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            auto it = pos.find(g.mul(elems[i], elems[j]));
            if (it == pos.end()) throw not_a_group("subset is not closed under multiplication");
            t[i][j] = it->second;
        }
    return {make_group(t), elems};
}

bool GroupHom::is_bijective() const {
    if (source.order != target.order) return false;
    std::vector<bool> hit(target.order, false);
    for (Elt y : image) {
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

std::vector<Elt> GroupHom::kernel_elements() const {
    std::vector<Elt> k;
    for (Elt x = 0; x < source.order; ++x)
        if (image[x] == target.identity) k.push_back(x);
    return k;
}

std::vector<Elt> GroupHom::image_elements() const {
    std::set<Elt> s(image.begin(), image.end());
    return {s.begin(), s.end()};
}

bool hom_valid(const FiniteGroup& source, const FiniteGroup& target, const std::vector<Elt>& image,
               std::string* witness) {
    if (static_cast<int>(image.size()) != source.order) {
        if (witness) *witness = "image table has wrong length";
        return false;
    }
    for (Elt y : image)
        if (y < 0 || y >= target.order) {
            if (witness) *witness = "image entry out of range";
            return false;
        }
    if (image[source.identity] != target.identity) {
        if (witness) *witness = "identity is not preserved";
        return false;
    }
    for (Elt x = 0; x < source.order; ++x)
        for (Elt y = 0; y < source.order; ++y)
            if (image[source.mul(x, y)] != target.mul(image[x], image[y])) {
                if (witness)
                    *witness = "multiplicativity fails at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")";
                return false;
            }
    return true;
}

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<Elt> image) {
    std::string w;
    if (!hom_valid(source, target, image, &w)) throw error("not a homomorphism: " + w);
    return GroupHom{source, target, std::move(image)};
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    std::vector<Elt> img(first.source.order);
    for (Elt x = 0; x < first.source.order; ++x) img[x] = second.image[first.image[x]];
    return GroupHom{first.source, second.target, std::move(img)};
}

std::pair<FiniteGroup, GroupHom> quotient_group(const FiniteGroup& g,
                                                const std::vector<Elt>& normal) {
    if (!is_normal(g, normal)) throw error("quotient by a non-normal subgroup");
    std::vector<int> coset_of(g.order, -1);
    std::vector<Elt> reps;
    for (Elt x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elt h : normal) coset_of[g.mul(x, h)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<Elt>> t(q, std::vector<Elt>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
    std::optional<std::vector<std::string>> names;
    if (g.names) {
        std::vector<std::string> nm(q);
        for (int i = 0; i < q; ++i) nm[i] = "[" + g.name_of(reps[i]) + "]";
        names = nm;
    }
    FiniteGroup quot = make_group(t, names);
    std::vector<Elt> img(g.order);
    for (Elt x = 0; x < g.order; ++x) img[x] = coset_of[x];
    GroupHom proj = make_hom(g, quot, std::move(img));
    return {std::move(quot), std::move(proj)};
}

GammaGroup make_gamma_group(FiniteGroup gamma, FiniteGroup group,
                            std::vector<std::vector<Elt>> action) {
    if (static_cast<int>(action.size()) != gamma.order)
        throw not_an_action("one permutation per gamma element required");
    for (const auto& perm : action) {
        if (static_cast<int>(perm.size()) != group.order)
            throw not_an_action("permutation length does not match group order");
        std::vector<bool> hit(group.order, false);
        for (Elt y : perm) {
            if (y < 0 || y >= group.order || hit[y]) throw not_an_action("entry is not a permutation");
            hit[y] = true;
        }
    }
    // each permutation is an automorphism
    for (Elt s = 0; s < gamma.order; ++s) {
        std::string w;
        if (!hom_valid(group, group, action[s], &w))
            throw not_an_action("gamma element " + std::to_string(s) + " does not act by an automorphism: " + w);
    }
    // identity acts trivially, and the action is a homomorphism
    for (Elt x = 0; x < group.order; ++x)
        if (action[gamma.identity][x] != x)
            throw not_an_action("identity of gamma must act trivially");
    for (Elt s = 0; s < gamma.order; ++s)
        for (Elt t = 0; t < gamma.order; ++t)
            for (Elt x = 0; x < group.order; ++x)
                if (action[gamma.mul(s, t)][x] != action[s][action[t][x]])
                    throw not_an_action("action is not a homomorphism at (" + std::to_string(s) +
                                        "," + std::to_string(t) + ") on element " + std::to_string(x));
    GammaGroup gg;
    gg.gamma = std::move(gamma);
    gg.group = std::move(group);
    gg.action = std::move(action);
    return gg;
}

GammaGroup trivial_gamma_group(const FiniteGroup& gamma, FiniteGroup group) {
    std::vector<std::vector<Elt>> action(gamma.order);
    std::vector<Elt> id(group.order);
    std::iota(id.begin(), id.end(), 0);
    for (auto& p : action) p = id;
    return make_gamma_group(gamma, std::move(group), std::move(action));
}

namespace {

// Backtracking search for all automorphisms: assign images of a generating
// sequence, closing the partial map after each assignment.
struct AutSearch {
    const FiniteGroup& g;
    std::vector<Elt> gens;
    std::vector<std::vector<Elt>> found;

    explicit AutSearch(const FiniteGroup& gr) : g(gr) {
        // greedy generating sequence
        std::vector<Elt> have{g.identity};
        std::set<Elt> s(have.begin(), have.end());
        while (static_cast<int>(s.size()) < g.order) {
            Elt next = -1;
            for (Elt x = 0; x < g.order; ++x)
                if (!s.count(x)) {
                    next = x;
                    break;
                }
            gens.push_back(next);
            auto closure = subgroup_closure(g, gens);
            s = std::set<Elt>(closure.begin(), closure.end());
        }
    }

    // extend map with x -> y and close under multiplication; map entries are
    // -1 when unassigned. Returns false on contradiction.
    bool close(std::vector<Elt>& map, std::vector<Elt>& assigned) const {
        for (std::size_t i = 0; i < assigned.size(); ++i)
            for (std::size_t j = 0; j < assigned.size(); ++j) {
                Elt p = g.mul(assigned[i], assigned[j]);
                Elt q = g.mul(map[assigned[i]], map[assigned[j]]);
                if (map[p] < 0) {
                    map[p] = q;
                    assigned.push_back(p);
                } else if (map[p] != q) {
                    return false;
                }
            }
        return true;
    }

    void search(std::size_t k, std::vector<Elt>& map, const std::vector<Elt>& assigned) {
        if (k == gens.size()) {
            if (std::count(map.begin(), map.end(), -1) != 0) return;  // not total: not generating
            std::vector<bool> hit(g.order, false);
            for (Elt y : map) {
                if (hit[y]) return;
                hit[y] = true;
            }
            found.push_back(map);
            return;
        }
        Elt x = gens[k];
        if (map[x] >= 0) {
            search(k + 1, map, assigned);
            return;
        }
        const int ord = g.element_order(x);
        for (Elt y = 0; y < g.order; ++y) {
            if (g.element_order(y) != ord) continue;
            std::vector<Elt> m2 = map;
            std::vector<Elt> a2 = assigned;
            m2[x] = y;
            a2.push_back(x);
            if (!close(m2, a2)) continue;
            search(k + 1, m2, a2);
        }
    }

    std::vector<std::vector<Elt>> run() {
        std::vector<Elt> map(g.order, -1);
        map[g.identity] = g.identity;
        std::vector<Elt> assigned{g.identity};
        search(0, map, assigned);
        std::sort(found.begin(), found.end());
        return found;
    }
};

}  // namespace

std::vector<std::vector<Elt>> automorphisms_serial(const FiniteGroup& g) {
    return AutSearch(g).run();
}

std::vector<std::vector<Elt>> automorphisms_parallel(const FiniteGroup& g) {
    AutSearch base(g);
    if (base.gens.empty()) return AutSearch(g).run();
    // partition on the image of the first generator; each candidate explores
    // an independent subtree
    Elt x0 = base.gens[0];
    const int ord0 = g.element_order(x0);
    std::vector<Elt> candidates;
    for (Elt y = 0; y < g.order; ++y)
        if (g.element_order(y) == ord0) candidates.push_back(y);

    std::vector<std::vector<std::vector<Elt>>> buckets(candidates.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        AutSearch local(g);
        std::vector<Elt> map(g.order, -1);
        map[g.identity] = g.identity;
        std::vector<Elt> assigned{g.identity};
        map[x0] = candidates[c];
        assigned.push_back(x0);
        if (local.close(map, assigned)) local.search(1, map, assigned);
        buckets[c] = std::move(local.found);
    }
    std::vector<std::vector<Elt>> all;
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::size_t OutData::aut_index(const std::vector<Elt>& image) const {
    auto it = std::lower_bound(automorphisms.begin(), automorphisms.end(), image);
    if (it == automorphisms.end() || *it != image) throw error("map is not in the automorphism list");
    return static_cast<std::size_t>(it - automorphisms.begin());
}

std::size_t OutData::compose_classes(std::size_t a, std::size_t b) const {
    const auto& f = automorphisms[class_rep[a]];
    const auto& g = automorphisms[class_rep[b]];
    std::vector<Elt> comp(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) comp[x] = f[g[x]];
    return class_of[aut_index(comp)];
}

OutData compute_out(const FiniteGroup& g, int max_order) {
    if (g.order > max_order)
        throw bound_exceeded("group order " + std::to_string(g.order) +
                             " exceeds the automorphism enumeration bound " + std::to_string(max_order));
    OutData out;
    out.group = g;
    out.automorphisms = automorphisms_parallel(g);

    // inner automorphisms
    std::set<std::vector<Elt>> inner_set;
    for (Elt x = 0; x < g.order; ++x) {
        std::vector<Elt> c(g.order);
        for (Elt y = 0; y < g.order; ++y) c[y] = g.conj(x, y);
        inner_set.insert(std::move(c));
    }
    for (const auto& c : inner_set) out.inner.push_back(out.aut_index(c));

    // Inn-coset partition with lexicographically least representatives
    const std::size_t n = out.automorphisms.size();
    out.class_of.assign(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
        if (out.class_of[i] != static_cast<std::size_t>(-1)) continue;
        std::size_t cls = out.out_classes.size();
        std::vector<std::size_t> members;
        for (std::size_t inn : out.inner) {
            const auto& f = out.automorphisms[i];
            const auto& c = out.automorphisms[inn];
            std::vector<Elt> comp(f.size());
            for (std::size_t x = 0; x < f.size(); ++x) comp[x] = c[f[x]];
            std::size_t j = out.aut_index(comp);
            if (out.class_of[j] == static_cast<std::size_t>(-1)) {
                out.class_of[j] = cls;
                members.push_back(j);
            }
        }
        std::sort(members.begin(), members.end());
        out.class_rep.push_back(members.front());
        out.out_classes.push_back(std::move(members));
    }
    return out;
}

}  // namespace ccoh
