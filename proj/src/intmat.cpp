#include "crossedcoh/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccoh {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: size mismatch in product");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Int& y = o(k, j);
                if (y != 0) r(i, j) += x * y;
            }
        }
    return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMat: size mismatch in apply");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && x[j] != 0) s += (*this)(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Int> IntMat::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMat::set_col(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::hcat(const IntMat& o) const {
    if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
        throw std::invalid_argument("IntMat: row mismatch in hcat");
    std::size_t rr = std::max(rows_, o.rows_);
    IntMat r(rr, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    return r;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]";
    }
    return os.str();
}

namespace {

struct SnfWork {
    IntMat a, u, v, u_inv, v_inv;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u(i, k), u(j, k));
        for (std::size_t k = 0; k < u_inv.rows(); ++k) std::swap(u_inv(k, i), u_inv(k, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
        for (std::size_t k = 0; k < v_inv.cols(); ++k) std::swap(v_inv(i, k), v_inv(j, k));
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(j, k) != 0) a(i, k) -= q * a(j, k);
        for (std::size_t k = 0; k < u.cols(); ++k)
            if (u(j, k) != 0) u(i, k) -= q * u(j, k);
        for (std::size_t k = 0; k < u_inv.rows(); ++k)
            if (u_inv(k, i) != 0) u_inv(k, j) += q * u_inv(k, i);
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (a(k, j) != 0) a(k, i) -= q * a(k, j);
        for (std::size_t k = 0; k < v.rows(); ++k)
            if (v(k, j) != 0) v(k, i) -= q * v(k, j);
        for (std::size_t k = 0; k < v_inv.cols(); ++k)
            if (v_inv(i, k) != 0) v_inv(j, k) += q * v_inv(i, k);
    }
    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
        for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv(k, i) = -u_inv(k, i);
    }
};

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SnfResult snf(const IntMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfWork w;
    w.a = m;
    w.u = IntMat::identity(r);
    w.u_inv = IntMat::identity(r);
    w.v = IntMat::identity(c);
    w.v_inv = IntMat::identity(c);

    const std::size_t n = std::min(r, c);
    std::size_t t = 0;
    for (; t < n; ++t) {
        // least-absolute-value pivot in the trailing submatrix
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Int& x = w.a(i, j);
                if (x == 0) continue;
                Int ax = iabs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.a(i, t) == 0) continue;
                Int q = w.a(i, t) / w.a(t, t);
                w.row_sub(i, t, q);
                if (w.a(i, t) != 0) {
                    // remainder strictly smaller; promote it to the pivot
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.a(t, j) == 0) continue;
                Int q = w.a(t, j) / w.a(t, t);
                w.col_sub(j, t, q);
                if (w.a(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility of the trailing block by the pivot
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c && fixed; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.row_sub(t, i, Int(-1));  // add row i to row t
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w.a(t, t) < 0) w.row_negate(t);
    }

    SnfResult res;
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.u_inv = std::move(w.u_inv);
    res.v_inv = std::move(w.v_inv);
    res.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.diag[i] = w.a(i, i);
    res.rank = t;
    return res;
}

namespace {

// Column reduction with a tracked transform: process each row, clear all but
// one active column in it by gcd steps, retire the pivot column. Only the
// first `keep` coordinates of the kernel vectors are tracked; callers that
// need the whole kernel pass keep = cols.
IntMat kernel_rows(const IntMat& m, std::size_t keep) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(cols, std::vector<Int>(rows));
    std::vector<std::vector<Int>> v(cols, std::vector<Int>(keep));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) a[j][i] = m(i, j);
        if (j < keep) v[j][j] = 1;
    }
    std::vector<std::size_t> active(cols);
    for (std::size_t j = 0; j < cols; ++j) active[j] = j;

    // active columns are zero in every processed row, so updates start at the
    // row being cleared
    auto col_sub = [&](std::size_t ci, std::size_t cj, const Int& q, std::size_t from) {
        if (q == 0) return;
        for (std::size_t k = from; k < rows; ++k)
            if (a[cj][k] != 0) a[ci][k] -= q * a[cj][k];
        for (std::size_t k = 0; k < keep; ++k)
            if (v[cj][k] != 0) v[ci][k] -= q * v[cj][k];
    };

    for (std::size_t i = 0; i < rows && !active.empty(); ++i) {
        std::vector<std::size_t> nz;
        for (std::size_t s = 0; s < active.size(); ++s)
            if (a[active[s]][i] != 0) nz.push_back(s);
        if (nz.empty()) continue;
        while (nz.size() > 1) {
            // the entry of least absolute value is the divisor
            std::size_t bs = 0;
            for (std::size_t s = 1; s < nz.size(); ++s)
                if (iabs(a[active[nz[s]]][i]) < iabs(a[active[nz[bs]]][i])) bs = s;
            std::size_t piv = nz[bs];
            std::vector<std::size_t> next;
            for (std::size_t s = 0; s < nz.size(); ++s) {
                if (s == bs) continue;
                Int q = a[active[nz[s]]][i] / a[active[piv]][i];
                col_sub(active[nz[s]], active[piv], q, i);
                if (a[active[nz[s]]][i] != 0) next.push_back(nz[s]);
            }
            next.push_back(piv);
            std::sort(next.begin(), next.end());
            nz = std::move(next);
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(nz[0]));
    }

    IntMat k(keep, active.size());
    for (std::size_t s = 0; s < active.size(); ++s)
        for (std::size_t i = 0; i < keep; ++i) k(i, s) = v[active[s]][i];
    return k;
}

}  // namespace

IntMat kernel_basis(const IntMat& m) { return kernel_rows(m, m.cols()); }

bool solve_with(const SnfResult& s, const std::vector<Int>& b, std::vector<Int>& x) {
    const std::size_t r = s.u.rows(), c = s.v.rows();
    if (b.size() != r) throw std::invalid_argument("solve: size mismatch");
    std::vector<Int> ub = s.u.apply(b);
    std::vector<Int> y(c);
    const std::size_t n = s.diag.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (i < n && s.diag[i] != 0) {
            if (ub[i] % s.diag[i] != 0) return false;
            y[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return false;
        }
    }
    x = s.v.apply(y);
    return true;
}

bool solve(const IntMat& m, const std::vector<Int>& b, std::vector<Int>& x) {
    return solve_with(snf(m), b, x);
}

bool in_colspan(const SnfResult& snf_of_m, const std::vector<Int>& b, std::vector<Int>* comb) {
    std::vector<Int> x;
    if (!solve_with(snf_of_m, b, x)) return false;
    if (comb) *comb = std::move(x);
    return true;
}

IntMat column_basis(const IntMat& gens) {
    // U * gens has its span's structure along the diagonal; a basis of the
    // column span is U_inv applied to the nonzero diagonal columns.
    SnfResult s = snf(gens);
    IntMat basis(gens.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < gens.rows(); ++i) basis(i, j) = s.u_inv(i, j) * s.diag[j];
    return basis;
}

IntMat preimage_lattice(const IntMat& m, const IntMat& r) {
    if (r.cols() == 0 || r.is_zero()) return kernel_basis(m);
    IntMat neg(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) neg(i, j) = -r(i, j);
    // only the x block of the kernel is needed
    IntMat top = kernel_rows(m.hcat(neg), m.cols());
    return column_basis(top);
}

bool same_lattice(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) return false;
    SnfResult sa = snf(a), sb = snf(b);
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!in_colspan(sa, b.col(j))) return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!in_colspan(sb, a.col(j))) return false;
    return true;
}

std::vector<Int> quotient_invariants(const IntMat& lattice_basis, const IntMat& sub_gens,
                                     IntMat* gen_reps) {
    const std::size_t rank = lattice_basis.cols();
    // coordinates of each subgroup generator in the basis
    IntMat x(rank, sub_gens.cols());
    SnfResult sl = snf(lattice_basis);
    for (std::size_t j = 0; j < sub_gens.cols(); ++j) {
        std::vector<Int> coef;
        if (!solve_with(sl, sub_gens.col(j), coef))
            throw std::invalid_argument("quotient_invariants: generator outside lattice");
        x.set_col(j, coef);
    }
    SnfResult sx = snf(x);
    std::vector<Int> inv;
    std::vector<std::size_t> keep;  // diagonal positions contributing factors
    for (std::size_t i = 0; i < sx.rank; ++i)
        if (sx.diag[i] != 1) {
            inv.push_back(sx.diag[i]);
            keep.push_back(i);
        }
    for (std::size_t i = sx.rank; i < rank; ++i) {
        inv.push_back(0);
        keep.push_back(i);
    }
    if (gen_reps) {
        // generator of factor at diagonal position k: lattice_basis * u_inv e_k
        *gen_reps = IntMat(lattice_basis.rows(), keep.size());
        for (std::size_t s = 0; s < keep.size(); ++s) {
            std::vector<Int> coef(rank);
            for (std::size_t i = 0; i < rank; ++i) coef[i] = sx.u_inv(i, keep[s]);
            gen_reps->set_col(s, lattice_basis.apply(coef));
        }
    }
    return inv;
}

std::vector<Int> cokernel_invariants(const IntMat& gens, std::size_t ambient_dim, IntMat* gen_reps) {
    return quotient_invariants(IntMat::identity(ambient_dim), gens, gen_reps);
}

std::vector<Int> direct_sum_invariants(const std::vector<std::vector<Int>>& parts) {
    std::vector<Int> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    if (all.empty()) return {};
    IntMat d(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) d(i, i) = all[i];
    return cokernel_invariants(d, all.size());
}

Int invariants_order(const std::vector<Int>& inv) {
    Int o = 1;
    for (const Int& d : inv) {
        if (d == 0) return 0;
        o *= d;
    }
    return o;
}

std::string invariants_str(const std::vector<Int>& inv) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < inv.size(); ++i) os << (i ? "," : "") << inv[i];
    os << ")";
    return os.str();
}

}  // namespace ccoh
