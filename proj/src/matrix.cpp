#include "ffp/matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ffp/numth.hpp"

namespace ffp {

Matrix Matrix::identity(const Ring& R, unsigned n) {
    Matrix I(R, n);
    for (unsigned i = 0; i < n; ++i) I.at(i, i) = R.one();
    return I;
}

Matrix Matrix::from_ints(const Ring& R, unsigned n,
                         std::initializer_list<std::int64_t> entries) {
    Matrix A(R, n);
    auto it = entries.begin();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) A.at(i, j) = R.from_int(*it++);
    return A;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out(*R_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = R_->add(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out(*R_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = R_->sub(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(*R_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = R_->neg(a_[i]);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix out(*R_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            Elem v = at(i, k);
            if (v == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                out.at(i, j) = R_->add(out.at(i, j), R_->mul(v, o.at(k, j)));
        }
    return out;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix out(*R_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = R_->mul(a_[i], c);
    return out;
}

Matrix Matrix::plus_scalar(Elem c) const {
    Matrix out = *this;
    for (unsigned i = 0; i < n_; ++i) out.at(i, i) = R_->add(out.at(i, i), c);
    return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
    Matrix acc = identity(*R_, n_);
    Matrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Elem Matrix::trace() const {
    Elem t = 0;
    for (unsigned i = 0; i < n_; ++i) t = R_->add(t, at(i, i));
    return t;
}

namespace {

Elem det_cofactor(const Matrix& A, std::vector<unsigned> cols, unsigned row) {
    const Ring& R = A.ring();
    if (cols.size() == 1) return A.at(row, cols[0]);
    Elem acc = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Elem v = A.at(row, cols[j]);
        if (v == 0) continue;
        std::vector<unsigned> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) rest.push_back(cols[t]);
        Elem sub = det_cofactor(A, rest, row + 1);
        Elem term = R.mul(v, sub);
        acc = j % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
    }
    return acc;
}

}  // namespace

Elem Matrix::det() const {
    if (n_ == 0) return R_->one();
    if (!R_->is_field() || n_ <= 4) {
        std::vector<unsigned> cols(n_);
        std::iota(cols.begin(), cols.end(), 0u);
        return det_cofactor(*this, cols, 0);
    }
    // Gaussian elimination over a field.
    Matrix W = *this;
    Elem d = R_->one();
    for (unsigned c = 0; c < n_; ++c) {
        unsigned piv = c;
        while (piv < n_ && W.at(piv, c) == 0) ++piv;
        if (piv == n_) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n_; ++j) std::swap(W.at(piv, j), W.at(c, j));
            d = R_->neg(d);
        }
        d = R_->mul(d, W.at(c, c));
        Elem inv = R_->inv(W.at(c, c));
        for (unsigned i = c + 1; i < n_; ++i) {
            Elem f = R_->mul(W.at(i, c), inv);
            if (f == 0) continue;
            for (unsigned j = c; j < n_; ++j)
                W.at(i, j) = R_->sub(W.at(i, j), R_->mul(f, W.at(c, j)));
        }
    }
    return d;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (unsigned i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (unsigned j = 0; j < n_; ++j) os << at(i, j) << (j + 1 < n_ ? "," : "");
        os << (i + 1 < n_ ? ";\n" : "]");
    }
    return os.str();
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    unsigned n = 0;
    for (const auto& b : blocks) n += b.dim();
    Matrix out(blocks.front().ring(), n);
    unsigned off = 0;
    for (const auto& b : blocks) {
        for (unsigned i = 0; i < b.dim(); ++i)
            for (unsigned j = 0; j < b.dim(); ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.dim();
    }
    return out;
}

unsigned rank(const Matrix& A) {
    const Ring& R = A.ring();
    if (!R.is_field()) throw NotAField("rank over a non-field");
    unsigned n = A.dim();
    std::vector<Vec> rows(n, Vec(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) rows[i][j] = A.at(i, j);
    unsigned rk = 0;
    for (unsigned c = 0; c < n && rk < n; ++c) {
        unsigned piv = rk;
        while (piv < n && rows[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rk]);
        Elem inv = R.inv(rows[rk][c]);
        for (unsigned j = 0; j < n; ++j) rows[rk][j] = R.mul(rows[rk][j], inv);
        for (unsigned i = 0; i < n; ++i) {
            if (i == rk || rows[i][c] == 0) continue;
            Elem f = rows[i][c];
            for (unsigned j = 0; j < n; ++j)
                rows[i][j] = R.sub(rows[i][j], R.mul(f, rows[rk][j]));
        }
        ++rk;
    }
    return rk;
}

std::optional<Matrix> inverse(const Matrix& A) {
    const Ring& R = A.ring();
    unsigned n = A.dim();
    if (R.is_field()) {
        Matrix W = A;
        Matrix I = Matrix::identity(R, n);
        for (unsigned c = 0; c < n; ++c) {
            unsigned piv = c;
            while (piv < n && W.at(piv, c) == 0) ++piv;
            if (piv == n) return std::nullopt;
            if (piv != c)
                for (unsigned j = 0; j < n; ++j) {
                    std::swap(W.at(piv, j), W.at(c, j));
                    std::swap(I.at(piv, j), I.at(c, j));
                }
            Elem inv = R.inv(W.at(c, c));
            for (unsigned j = 0; j < n; ++j) {
                W.at(c, j) = R.mul(W.at(c, j), inv);
                I.at(c, j) = R.mul(I.at(c, j), inv);
            }
            for (unsigned i = 0; i < n; ++i) {
                if (i == c || W.at(i, c) == 0) continue;
                Elem f = W.at(i, c);
                for (unsigned j = 0; j < n; ++j) {
                    W.at(i, j) = R.sub(W.at(i, j), R.mul(f, W.at(c, j)));
                    I.at(i, j) = R.sub(I.at(i, j), R.mul(f, I.at(c, j)));
                }
            }
        }
        return I;
    }
    // Z/m: adjugate route, unit determinant required.
    Elem d = A.det();
    if (!R.is_unit(d)) return std::nullopt;
    Elem dinv = R.inv(d);
    Matrix adj(R, n);
    if (n == 1) {
        adj.at(0, 0) = R.one();
    } else {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                // cofactor C_ji
                Matrix minor(R, n - 1);
                for (unsigned a = 0, ai = 0; a < n; ++a) {
                    if (a == j) continue;
                    for (unsigned b = 0, bj = 0; b < n; ++b) {
                        if (b == i) continue;
                        minor.at(ai, bj) = A.at(a, b);
                        ++bj;
                    }
                    ++ai;
                }
                Elem c = minor.det();
                if ((i + j) % 2 == 1) c = R.neg(c);
                adj.at(i, j) = c;
            }
    }
    return adj.scaled(dinv);
}

bool is_invertible(const Matrix& A) {
    return A.ring().is_unit(A.det());
}

Vec mat_vec(const Matrix& A, const Vec& v) {
    const Ring& R = A.ring();
    unsigned n = A.dim();
    Vec out(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            out[i] = R.add(out[i], R.mul(A.at(i, j), v[j]));
    return out;
}

std::optional<Vec> solve_columns(const Ring& F, const std::vector<Vec>& cols,
                                 const Vec& b) {
    std::size_t n = b.size(), m = cols.size();
    // augmented rows of [cols | b]
    std::vector<Vec> rows(n, Vec(m + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) rows[i][j] = cols[j][i];
        rows[i][m] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m && rk < n; ++c) {
        std::size_t piv = rk;
        while (piv < n && rows[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rk]);
        Elem inv = F.inv(rows[rk][c]);
        for (std::size_t j = 0; j <= m; ++j) rows[rk][j] = F.mul(rows[rk][j], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rk || rows[i][c] == 0) continue;
            Elem f = rows[i][c];
            for (std::size_t j = 0; j <= m; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rk][j]));
        }
        pivot_col.push_back(c);
        ++rk;
    }
    for (std::size_t i = rk; i < n; ++i)
        if (rows[i][m] != 0) return std::nullopt;  // inconsistent
    Vec x(m, 0);
    for (std::size_t i = 0; i < rk; ++i) x[pivot_col[i]] = rows[i][m];
    return x;
}

std::vector<Vec> kernel_of_rows(const Ring& F, const std::vector<Vec>& rows_in) {
    if (rows_in.empty()) return {};
    std::size_t m = rows_in[0].size();
    std::vector<Vec> rows = rows_in;
    std::vector<std::size_t> pivot_of_col(m, SIZE_MAX);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rk]);
        Elem inv = F.inv(rows[rk][c]);
        for (std::size_t j = 0; j < m; ++j) rows[rk][j] = F.mul(rows[rk][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rk || rows[i][c] == 0) continue;
            Elem f = rows[i][c];
            for (std::size_t j = 0; j < m; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rk][j]));
        }
        pivot_of_col[c] = rk;
        ++rk;
    }
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        Vec v(m, 0);
        v[c] = F.one();
        for (std::size_t c2 = 0; c2 < m; ++c2)
            if (pivot_of_col[c2] != SIZE_MAX)
                v[c2] = F.neg(rows[pivot_of_col[c2]][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix companion(const Poly& g) {
    if (!g.is_monic()) throw NotMonic("companion of a non-monic polynomial");
    const Ring& R = g.ring();
    unsigned n = static_cast<unsigned>(g.degree());
    if (n == 0) throw Error("companion needs degree >= 1");
    Matrix C(R, n);
    for (unsigned i = 1; i < n; ++i) C.at(i, i - 1) = R.one();
    for (unsigned i = 0; i < n; ++i) C.at(i, n - 1) = R.neg(g.coeff(i));
    return C;
}

Poly companion_poly(const Matrix& A) {
    const Ring& R = A.ring();
    unsigned n = A.dim();
    std::vector<Elem> c(n + 1, 0);
    for (unsigned i = 0; i < n; ++i) c[i] = R.neg(A.at(i, n - 1));
    c[n] = R.one();
    return Poly(R, std::move(c));
}

Matrix poly_eval_matrix(const Poly& g, const Matrix& A) {
    const Ring& R = A.ring();
    Matrix acc(R, A.dim());
    for (int i = g.degree(); i >= 0; --i)
        acc = acc * A + Matrix::identity(R, A.dim()).scaled(g.coeff(static_cast<std::size_t>(i)));
    return acc;
}

Poly local_minimal_polynomial(const Matrix& A, const Vec& v) {
    const Ring& R = A.ring();
    if (!R.is_field()) throw NotAField("local minimal polynomial over a non-field");
    std::vector<Vec> krylov;
    Vec cur = v;
    for (unsigned step = 0; step <= A.dim(); ++step) {
        auto combo = solve_columns(R, krylov, cur);
        if (combo) {
            std::vector<Elem> c(krylov.size() + 1, 0);
            for (std::size_t i = 0; i < krylov.size(); ++i) c[i] = R.neg((*combo)[i]);
            c[krylov.size()] = R.one();
            return Poly(R, std::move(c));
        }
        krylov.push_back(cur);
        cur = mat_vec(A, cur);
    }
    throw Error("local minimal polynomial: no dependence found");  // unreachable
}

Poly minimal_polynomial(const Matrix& A) {
    const Ring& R = A.ring();
    if (!R.is_field()) throw NotAField("minimal_polynomial over a non-field");
    unsigned n = A.dim();
    // Krylov sequence on vec(A^i) in the n^2-dimensional space.
    std::vector<Vec> powers;
    Matrix P = Matrix::identity(R, n);
    for (unsigned step = 0; step <= n; ++step) {
        Vec flat(P.entries().begin(), P.entries().end());
        auto combo = solve_columns(R, powers, flat);
        if (combo) {
            std::vector<Elem> c(powers.size() + 1, 0);
            for (std::size_t i = 0; i < powers.size(); ++i) c[i] = R.neg((*combo)[i]);
            c[powers.size()] = R.one();
            return Poly(R, std::move(c));
        }
        powers.push_back(flat);
        P = P * A;
    }
    throw Error("minimal polynomial: no dependence found");  // unreachable
}

namespace {

// Least-code nonzero vector enumeration.
Vec vec_from_code(const Ring& R, unsigned n, std::uint64_t code) {
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) {
        v[i] = code % R.size();
        code /= R.size();
    }
    return v;
}

struct CyclicPiece {
    Poly factor;
    std::vector<Vec> basis;  // deg(factor) columns in ambient coordinates
};

// Invariant-factor pieces in descending divisibility order (largest first),
// with bases in the coordinates of A.
std::vector<CyclicPiece> cyclic_decompose(const Matrix& A) {
    const Ring& R = A.ring();
    unsigned n = A.dim();
    if (n == 0) return {};
    Poly m = minimal_polynomial(A);
    unsigned k = static_cast<unsigned>(m.degree());
    // least-code vector with maximal local order
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= R.size();
    Vec v;
    for (std::uint64_t code = 1; code < total; ++code) {
        Vec cand = vec_from_code(R, n, code);
        if (local_minimal_polynomial(A, cand) == m) {
            v = std::move(cand);
            break;
        }
    }
    if (v.empty()) throw Error("rcf: no vector of maximal order");  // unreachable
    std::vector<Vec> zbasis;
    Vec cur = v;
    for (unsigned i = 0; i < k; ++i) {
        zbasis.push_back(cur);
        cur = mat_vec(A, cur);
    }
    std::vector<CyclicPiece> out;
    out.push_back({m, zbasis});
    if (k == n) return out;
    // A-invariant complement via a dual functional w: rows w^T A^i.
    // Choose least-code w making the k x k pairing with the z-basis
    // invertible, so the kernel of those rows meets Z(v) trivially.
    std::vector<Vec> funct_rows;
    for (std::uint64_t code = 1; code < total; ++code) {
        Vec w = vec_from_code(R, n, code);
        std::vector<Vec> rows;
        Vec wr = w;
        for (unsigned i = 0; i < k; ++i) {
            rows.push_back(wr);
            // next functional: w^T A^(i+1), i.e. multiply by A on the right
            Vec nxt(n, 0);
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = 0; b < n; ++b)
                    nxt[b] = R.add(nxt[b], R.mul(wr[a], A.at(a, b)));
            wr = nxt;
        }
        // pairing matrix rows_i . zbasis_j
        Matrix pair(R, k);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) {
                Elem s = 0;
                for (unsigned t = 0; t < n; ++t)
                    s = R.add(s, R.mul(rows[i][t], zbasis[j][t]));
                pair.at(i, j) = s;
            }
        if (rank(pair) == k) {
            funct_rows = rows;
            break;
        }
    }
    if (funct_rows.empty()) throw Error("rcf: no dual functional found");  // unreachable
    std::vector<Vec> wbasis = kernel_of_rows(R, funct_rows);  // dim n-k
    // restriction of A to the complement
    unsigned d = static_cast<unsigned>(wbasis.size());
    Matrix B(R, d);
    for (unsigned j = 0; j < d; ++j) {
        Vec img = mat_vec(A, wbasis[j]);
        auto x = solve_columns(R, wbasis, img);
        if (!x) throw Error("rcf: complement not invariant");  // unreachable
        for (unsigned i = 0; i < d; ++i) B.at(i, j) = (*x)[i];
    }
    for (auto& piece : cyclic_decompose(B)) {
        std::vector<Vec> lifted;
        for (const Vec& c : piece.basis) {
            Vec amb(n, 0);
            for (unsigned i = 0; i < d; ++i)
                for (unsigned t = 0; t < n; ++t)
                    amb[t] = R.add(amb[t], R.mul(c[i], wbasis[i][t]));
            lifted.push_back(std::move(amb));
        }
        out.push_back({piece.factor, std::move(lifted)});
    }
    return out;
}

}  // namespace

Matrix Rcf::blocks() const {
    std::vector<Matrix> bs;
    for (const auto& g : invariant_factors) bs.push_back(companion(g));
    return direct_sum(bs);
}

Rcf rational_canonical_form(const Matrix& A) {
    const Ring& R = A.ring();
    if (!R.is_field()) throw NotAField("rational_canonical_form over a non-field");
    unsigned n = A.dim();
    auto pieces = cyclic_decompose(A);
    std::reverse(pieces.begin(), pieces.end());  // ascending divisibility
    Rcf out{{}, Matrix(R, n)};
    Matrix P(R, n);  // columns = concatenated bases
    unsigned col = 0;
    for (const auto& piece : pieces) {
        out.invariant_factors.push_back(piece.factor);
        for (const Vec& b : piece.basis) {
            for (unsigned i = 0; i < n; ++i) P.at(i, col) = b[i];
            ++col;
        }
    }
    auto Pinv = inverse(P);
    if (!Pinv) throw Error("rcf: basis not invertible");  // unreachable
    out.V = *Pinv;
    // self-verification: V A V^{-1} = block diagonal, divisibility chain
    if (out.V * A * P != out.blocks()) throw Error("rcf: conjugation check failed");
    for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
        if (!poly_divides(out.invariant_factors[i], out.invariant_factors[i + 1]))
            throw Error("rcf: divisibility check failed");
    return out;
}

bool is_kpotent(const Matrix& A, std::uint64_t k) {
    if (k < 2) throw Error("is_kpotent: k must be >= 2");
    return A.pow(k) == A;
}

bool is_idempotent(const Matrix& A) { return A * A == A; }
bool is_tripotent(const Matrix& A) { return A * A * A == A; }
bool is_involution(const Matrix& A) {
    return A * A == Matrix::identity(A.ring(), A.dim());
}

namespace {

// All k-dimensional subspaces of F^n as RREF basis rows.
std::vector<std::vector<Vec>> subspaces(const Ring& F, unsigned n, unsigned k) {
    std::vector<std::vector<Vec>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<unsigned> pivots(k);
    // enumerate combinations of pivot columns
    std::vector<unsigned> comb(k);
    std::iota(comb.begin(), comb.end(), 0u);
    auto next_comb = [&]() {
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && comb[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
        if (i < 0) return false;
        ++comb[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        // free positions: (i, j) with j > comb[i], j not a pivot column
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (unsigned i = 0; i < k; ++i) is_pivot[comb[i]] = true;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = comb[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        std::uint64_t count = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) count *= F.size();
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Vec> rows(k, Vec(n, 0));
            for (unsigned i = 0; i < k; ++i) rows[i][comb[i]] = F.one();
            std::uint64_t t = code;
            for (auto& [i, j] : free_pos) {
                rows[i][j] = t % F.size();
                t /= F.size();
            }
            out.push_back(std::move(rows));
        }
    } while (next_comb());
    return out;
}

std::vector<Matrix> idempotents_rank_orbit(const Ring& F, unsigned n) {
    std::vector<Matrix> out;
    out.push_back(Matrix(F, n));                 // rank 0
    out.push_back(Matrix::identity(F, n));       // rank n
    for (unsigned k = 1; k < n; ++k) {
        auto images = subspaces(F, n, k);
        auto kernels = subspaces(F, n, n - k);
        for (const auto& im : images)
            for (const auto& ker : kernels) {
                // columns [image basis | kernel basis]
                Matrix M(F, n);
                for (unsigned j = 0; j < k; ++j)
                    for (unsigned i = 0; i < n; ++i) M.at(i, j) = im[j][i];
                for (unsigned j = 0; j < n - k; ++j)
                    for (unsigned i = 0; i < n; ++i) M.at(i, k + j) = ker[j][i];
                auto Minv = inverse(M);
                if (!Minv) continue;  // not complementary
                Matrix L(F, n);  // [image basis | 0]
                for (unsigned j = 0; j < k; ++j)
                    for (unsigned i = 0; i < n; ++i) L.at(i, j) = im[j][i];
                out.push_back(L * *Minv);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matrix> idempotents_brute(const Ring& R, unsigned n, std::uint64_t guard) {
    long double space = 1;
    for (unsigned i = 0; i < n * n; ++i) space *= static_cast<long double>(R.size());
    if (space > static_cast<long double>(guard))
        throw SearchSpaceTooLarge("enumerate_idempotents: brute space exceeds guard");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= R.size();
    std::vector<Matrix> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        Matrix E(R, n);
        std::uint64_t t = code;
        // lexicographic in row-major entry order, most significant first
        for (unsigned idx = n * n; idx-- > 0;) {
            E.at(idx / n, idx % n) = t % R.size();
            t /= R.size();
        }
        if (is_idempotent(E)) out.push_back(E);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Matrix> enumerate_idempotents(const Ring& R, unsigned n, IdemMode mode,
                                          std::uint64_t guard) {
    if (mode == IdemMode::Auto)
        mode = R.is_field() ? IdemMode::RankOrbit : IdemMode::Brute;
    if (mode == IdemMode::RankOrbit) {
        if (!R.is_field()) throw NotAField("rank-orbit idempotent enumeration needs a field");
        return idempotents_rank_orbit(R, n);
    }
    return idempotents_brute(R, n, guard);
}

const std::vector<Matrix>& idempotents_cached(const Ring& R, unsigned n) {
    static std::mutex mu;
    static std::deque<Ring> rings;  // stable addresses for cached matrices
    static std::map<std::pair<std::string, unsigned>, std::vector<Matrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(R.name(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    rings.push_back(R);
    auto out = enumerate_idempotents(rings.back(), n);
    return cache.emplace(key, std::move(out)).first->second;
}

bool block_upper_annihilator_check(const Matrix& A, const std::vector<Vec>& B,
                                   const Matrix& C, const Poly& r, const Poly& s) {
    const Ring& R = A.ring();
    unsigned n = A.dim(), p = C.dim();
    Matrix zA = poly_eval_matrix(r, A);
    Matrix zC = poly_eval_matrix(s, C);
    if (zA != Matrix(R, n) || zC != Matrix(R, p))
        throw PreconditionViolated("block_upper_annihilator_check: r(A) or s(C) nonzero");
    Matrix M(R, n + p);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < p; ++j) M.at(i, n + j) = B[i][j];
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) M.at(n + i, n + j) = C.at(i, j);
    return poly_eval_matrix(r * s, M) == Matrix(R, n + p);
}

Matrix random_matrix(const Ring& R, unsigned n, std::uint64_t& state) {
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    Matrix A(R, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) A.at(i, j) = next() % R.size();
    return A;
}

}  // namespace ffp
