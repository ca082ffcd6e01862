#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace ccoh {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-precision entries.
/// Columns are the natural unit for lattice work: the column span of a
/// matrix is the lattice it presents.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    IntMat operator*(const IntMat& o) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x
    IntMat transpose() const;

    std::vector<Int> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<Int>& v);

    /// Columns of `this` followed by columns of `o` (row counts must agree).
    IntMat hcat(const IntMat& o) const;

    bool is_zero() const;
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// u * m * v = d with u, v unimodular and d diagonal, d_i | d_{i+1}, d_i >= 0.
/// Pivot selection is by least absolute value. u_inv / v_inv are tracked so
/// callers can map diagonal coordinates back without a separate inversion.
struct SnfResult {
    IntMat u, v, u_inv, v_inv;
    std::vector<Int> diag;   // min(rows, cols) entries
    std::size_t rank = 0;    // number of nonzero diagonal entries
};

SnfResult snf(const IntMat& m);

/// Basis of the lattice {x : m x = 0}, as matrix columns. The returned basis
/// is primitive (kernels of integer matrices are saturated).
IntMat kernel_basis(const IntMat& m);

/// Solve m x = b over the integers. Returns false when no integral solution
/// exists. A cached SnfResult for m must be supplied.
bool solve_with(const SnfResult& s, const std::vector<Int>& b, std::vector<Int>& x);
bool solve(const IntMat& m, const std::vector<Int>& b, std::vector<Int>& x);

/// Column-span membership test; optionally returns a witness combination.
bool in_colspan(const SnfResult& snf_of_m, const std::vector<Int>& b, std::vector<Int>* comb = nullptr);

/// Basis of the column span of `gens` (drops redundant generators).
IntMat column_basis(const IntMat& gens);

/// Basis of {x : m x lies in the column span of r}.
IntMat preimage_lattice(const IntMat& m, const IntMat& r);

/// Two column spans are equal as lattices.
bool same_lattice(const IntMat& a, const IntMat& b);

/// Invariant factors (all of them, including 1s dropped and 0s for free rank)
/// of the quotient (colspan of lattice_basis) / (colspan of sub_gens).
/// lattice_basis must have independent columns and sub_gens must lie in its
/// span. Nontrivial finite factors come first (divisor chain), then one 0 per
/// free summand. If gen_reps is nonnull it receives one ambient-space column
/// per returned factor generating that summand.
std::vector<Int> quotient_invariants(const IntMat& lattice_basis, const IntMat& sub_gens,
                                     IntMat* gen_reps = nullptr);

/// Invariant factors of Z^ambient_dim / colspan(gens).
std::vector<Int> cokernel_invariants(const IntMat& gens, std::size_t ambient_dim,
                                     IntMat* gen_reps = nullptr);

/// Canonical divisor-chain form of a direct sum of groups with the given
/// invariant-factor lists.
std::vector<Int> direct_sum_invariants(const std::vector<std::vector<Int>>& parts);

/// Order of the group with these invariant factors; 0 when infinite.
Int invariants_order(const std::vector<Int>& inv);

std::string invariants_str(const std::vector<Int>& inv);

}  // namespace ccoh
