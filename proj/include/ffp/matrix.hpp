#ifndef FFP_MATRIX_HPP
#define FFP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffp/poly.hpp"
#include "ffp/ring.hpp"

namespace ffp {

// Dense square matrix over a Ring.  The ring must outlive the matrix.
class Matrix {
public:
    Matrix(const Ring& R, unsigned n) : R_(&R), n_(n), a_(std::size_t(n) * n, 0) {}
    static Matrix identity(const Ring& R, unsigned n);
    // Entries as integers, row-major (handles negatives).
    static Matrix from_ints(const Ring& R, unsigned n,
                            std::initializer_list<std::int64_t> entries);

    const Ring& ring() const { return *R_; }
    unsigned dim() const { return n_; }
    Elem at(unsigned i, unsigned j) const { return a_[std::size_t(i) * n_ + j]; }
    Elem& at(unsigned i, unsigned j) { return a_[std::size_t(i) * n_ + j]; }
    const std::vector<Elem>& entries() const { return a_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool operator<(const Matrix& o) const { return a_ < o.a_; }  // lex by code

    Matrix scaled(Elem c) const;
    Matrix plus_scalar(Elem c) const;  // A + cI
    Matrix pow(std::uint64_t e) const;

    Elem trace() const;
    Elem det() const;

    std::string str() const;

private:
    const Ring* R_;
    unsigned n_;
    std::vector<Elem> a_;
};

// Block-diagonal composition.
Matrix direct_sum(const std::vector<Matrix>& blocks);

// --- exact linear algebra over fields (and limited Z/m support) ---

unsigned rank(const Matrix& A);                    // field only
std::optional<Matrix> inverse(const Matrix& A);    // field or unit-det Z/m
bool is_invertible(const Matrix& A);

using Vec = std::vector<Elem>;
Vec mat_vec(const Matrix& A, const Vec& v);

// Express b as a combination of the given columns, if possible (field only).
std::optional<Vec> solve_columns(const Ring& F, const std::vector<Vec>& cols,
                                 const Vec& b);
// Basis of { x : rows . x = 0 } (field only).
std::vector<Vec> kernel_of_rows(const Ring& F, const std::vector<Vec>& rows);

// --- companion matrices, minimal polynomials, rational canonical form ---

// Companion of a monic polynomial: subdiagonal of ones, last
// column a_0..a_{n-1} where g = x^n - sum a_i x^i.
Matrix companion(const Poly& g);

// Characteristic polynomial of a companion block, i.e. the inverse of the
// companion construction.
Poly companion_poly(const Matrix& A);

Poly minimal_polynomial(const Matrix& A);  // field only
Poly local_minimal_polynomial(const Matrix& A, const Vec& v);

Matrix poly_eval_matrix(const Poly& g, const Matrix& A);

struct Rcf {
    std::vector<Poly> invariant_factors;  // g1 | g2 | ... | gk
    Matrix V;                             // V A V^{-1} = C(g1) + ... + C(gk)
    Matrix blocks() const;
};
Rcf rational_canonical_form(const Matrix& A);

// --- potency predicates ---

bool is_kpotent(const Matrix& A, std::uint64_t k);  // A^k = A
bool is_idempotent(const Matrix& A);
bool is_tripotent(const Matrix& A);
bool is_involution(const Matrix& A);

// --- idempotent enumeration ---

enum class IdemMode { Auto, Brute, RankOrbit };

// Every idempotent of M_n(R), ascending in entry-code lex order.  Brute mode
// scans all |R|^(n^2) matrices (guarded); rank-orbit mode (fields) builds
// projections from (image, kernel) subspace pairs.
std::vector<Matrix> enumerate_idempotents(const Ring& R, unsigned n,
                                          IdemMode mode = IdemMode::Auto,
                                          std::uint64_t guard = 1ull << 32);

// Cached accessor used by search-heavy callers; same ordering.
const std::vector<Matrix>& idempotents_cached(const Ring& R, unsigned n);

// Builds M = [[A,B],[0,C]] and checks (r*s)(M) = 0.  Requires r(A) = 0 and
// s(C) = 0.
bool block_upper_annihilator_check(const Matrix& A, const std::vector<Vec>& B,
                                   const Matrix& C, const Poly& r, const Poly& s);

// Deterministic splitmix-style generator for random matrix sampling in tests
// and sweeps.
Matrix random_matrix(const Ring& R, unsigned n, std::uint64_t& state);

}  // namespace ffp

#endif
