// Exact rational scalars, vectors and matrices.
//
// Everything geometric in this project runs over Q: volumes, second
// moments, covering radii and the verification chain are all compared
// bit-exactly, so there is no floating point here at all. Rationals are
// kept canonical (reduced, positive denominator) which makes structural
// equality coincide with numeric equality.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlr {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetricError : Error { using Error::Error; };
struct NotPositiveDefiniteError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct UnboundedError : Error { using Error::Error; };
struct LowerDimensionalError : Error { using Error::Error; };
struct DimensionCapError : Error { using Error::Error; };
struct NotCentrallySymmetricError : Error { using Error::Error; };
struct NotADeepHoleError : Error { using Error::Error; };
struct WrongCardinalityError : Error { using Error::Error; };
struct IncompletePiecesError : Error { using Error::Error; };
struct InternalInconsistencyError : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

// Serializes as "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

// Accepts "p", "p/q" and optional leading '-'; canonicalizes the result.
Rat parse_rat(const std::string& s);

// Fixed-point decimal rendering with `digits` fractional digits,
// rounded to nearest (ties away from zero).
std::string decimal_string(const Rat& r, int digits = 12);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
// Nearest integer, ties rounded up.
Int round_rat(const Rat& r);

// Largest k >= 0 with k*k <= r. Requires r >= 0.
Int floor_sqrt(const Rat& r);
// Smallest k >= 0 with k*k >= r. Requires r >= 0.
Int ceil_sqrt(const Rat& r);

// ---------------------------------------------------------------------------
// RatVec
// ---------------------------------------------------------------------------

struct RatVec {
    std::vector<Rat> c;

    RatVec() = default;
    explicit RatVec(int n) : c(n) {}
    RatVec(std::initializer_list<Rat> init) : c(init) {}
    explicit RatVec(std::vector<Rat> v) : c(std::move(v)) {}

    int dim() const { return static_cast<int>(c.size()); }
    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool operator==(const RatVec& o) const = default;

    bool is_zero() const;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& s, const RatVec& a);

// Plain coordinate dot product (no metric).
Rat dot(const RatVec& a, const RatVec& b);

// Lexicographic order; used everywhere a canonical ordering is needed.
bool lex_less(const RatVec& a, const RatVec& b);

// ---------------------------------------------------------------------------
// RatMat
// ---------------------------------------------------------------------------

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static RatMat identity(int n);
    static RatMat diagonal(const std::vector<Rat>& d);

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const RatMat& o) const = default;

    bool is_square() const { return rows == cols; }
    bool is_symmetric() const;

    RatVec mul(const RatVec& x) const;
    RatMat mul(const RatMat& b) const;
    RatMat transposed() const;
};

// G = L * D * L^T with L unit lower triangular and D diagonal.
// Succeeds exactly when G is symmetric positive definite.
struct LdlResult {
    RatMat l;
    RatMat d;  // diagonal
    const Rat& pivot(int i) const { return d.at(i, i); }
};

// Throws NotSymmetricError / NotPositiveDefiniteError.
LdlResult ldl_decompose(const RatMat& g);

// Exact determinant by fraction-free-ish Gaussian elimination with pivoting.
Rat det(const RatMat& m);

// Exact solution of A x = b; throws SingularError.
RatVec solve(const RatMat& a, const RatVec& b);

// Exact inverse; throws SingularError.
RatMat inverse(const RatMat& a);

// Rank of the row span.
int rank(const std::vector<RatVec>& rows);

// Rank of {p - points[0] : p in points}; 0 for a single point. dim + 1 points
// in general position have affine rank dim.
int affine_rank(const std::vector<RatVec>& points);

}  // namespace hlr
