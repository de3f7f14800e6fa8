#include "hlr/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace hlr {

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

std::string to_string(const Rat& r) {
    return r.str();  // gmp prints "p/q", and "p" when q == 1
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
        return Rat(num, den);  // constructor canonicalizes
    } catch (const std::runtime_error& e) {
        throw InputError("bad rational literal '" + s + "'");
    }
}

std::string decimal_string(const Rat& r, int digits) {
    Int p = numerator(r), q = denominator(r);
    bool neg = p < 0;
    if (neg) p = -p;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Int scaled = (2 * p * scale + q) / (2 * q);
    Int whole = scaled / scale, frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) out += "." + fs;
    return out;
}

Int floor_rat(const Rat& r) {
    Int q, rem;
    divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && r < 0) --q;  // divide_qr truncates toward zero
    return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

Int round_rat(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

Int floor_sqrt(const Rat& r) {
    if (r < 0) throw Error("floor_sqrt of negative value");
    // k = isqrt(floor(r)) can be one too small for non-integers; fix up.
    Int k = sqrt(floor_rat(r));
    while (Rat((k + 1) * (k + 1)) <= r) ++k;
    return k;
}

Int ceil_sqrt(const Rat& r) {
    Int k = floor_sqrt(r);
    if (Rat(k * k) < r) ++k;
    return k;
}

// ---------------------------------------------------------------------------
// RatVec
// ---------------------------------------------------------------------------

bool RatVec::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

static void check_same_dim(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw Error("dimension mismatch");
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    check_same_dim(a, b);
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    check_same_dim(a, b);
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator-(const RatVec& a) {
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = -a[i];
    return r;
}

RatVec operator*(const Rat& s, const RatVec& a) {
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
    check_same_dim(a, b);
    Rat s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

// ---------------------------------------------------------------------------
// RatMat
// ---------------------------------------------------------------------------

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::diagonal(const std::vector<Rat>& d) {
    RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
}

bool RatMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatVec RatMat::mul(const RatVec& x) const {
    if (x.dim() != cols) throw Error("dimension mismatch");
    RatVec r(rows);
    for (int i = 0; i < rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols; ++j) s += at(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

RatMat RatMat::mul(const RatMat& b) const {
    if (cols != b.rows) throw Error("dimension mismatch");
    RatMat r(rows, b.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += at(i, k) * b.at(k, j);
        }
    return r;
}

RatMat RatMat::transposed() const {
    RatMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

LdlResult ldl_decompose(const RatMat& g) {
    if (!g.is_square() || !g.is_symmetric()) throw NotSymmetricError("matrix is not symmetric");
    int n = g.rows;
    RatMat l = RatMat::identity(n);
    RatMat d(n, n);
    // Column-by-column elimination without pivoting; a nonpositive pivot is
    // exactly the certificate that G is not positive definite.
    RatMat w = g;
    for (int k = 0; k < n; ++k) {
        const Rat piv = w.at(k, k);
        if (piv <= 0) throw NotPositiveDefiniteError("pivot " + std::to_string(k) + " is not positive");
        d.at(k, k) = piv;
        for (int i = k + 1; i < n; ++i) {
            Rat f = w.at(i, k) / piv;
            l.at(i, k) = f;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return {std::move(l), std::move(d)};
}

Rat det(const RatMat& m) {
    if (!m.is_square()) throw Error("det of non-square matrix");
    int n = m.rows;
    RatMat w = m;
    Rat result = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            result = -result;
        }
        result *= w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rat f = w.at(i, k) / w.at(k, k);
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return result;
}

// Gauss-Jordan on [A | rhs...]; shared by solve() and inverse().
static RatMat eliminate(const RatMat& a, RatMat rhs) {
    if (!a.is_square()) throw Error("solve with non-square matrix");
    int n = a.rows;
    RatMat w = a;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw SingularError("singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            for (int j = 0; j < rhs.cols; ++j) std::swap(rhs.at(k, j), rhs.at(piv, j));
        }
        Rat inv_piv = Rat(1) / w.at(k, k);
        for (int j = 0; j < n; ++j) w.at(k, j) *= inv_piv;
        for (int j = 0; j < rhs.cols; ++j) rhs.at(k, j) *= inv_piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat f = w.at(i, k);
            for (int j = 0; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
            for (int j = 0; j < rhs.cols; ++j) rhs.at(i, j) -= f * rhs.at(k, j);
        }
    }
    return rhs;
}

RatVec solve(const RatMat& a, const RatVec& b) {
    if (b.dim() != a.rows) throw Error("dimension mismatch");
    RatMat rhs(a.rows, 1);
    for (int i = 0; i < a.rows; ++i) rhs.at(i, 0) = b[i];
    RatMat x = eliminate(a, std::move(rhs));
    RatVec r(a.rows);
    for (int i = 0; i < a.rows; ++i) r[i] = x.at(i, 0);
    return r;
}

RatMat inverse(const RatMat& a) {
    return eliminate(a, RatMat::identity(a.rows));
}

int rank(const std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    std::vector<RatVec> w = rows;
    int n = w[0].dim(), r = 0;
    for (int col = 0; col < n && r < static_cast<int>(w.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(w.size()); ++i)
            if (w[static_cast<size_t>(i)][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[static_cast<size_t>(r)], w[static_cast<size_t>(piv)]);
        for (int i = r + 1; i < static_cast<int>(w.size()); ++i) {
            auto& wi = w[static_cast<size_t>(i)];
            if (wi[col] == 0) continue;
            Rat f = wi[col] / w[static_cast<size_t>(r)][col];
            for (int j = col; j < n; ++j) wi[j] -= f * w[static_cast<size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

int affine_rank(const std::vector<RatVec>& points) {
    if (points.size() <= 1) return 0;
    std::vector<RatVec> diffs;
    diffs.reserve(points.size() - 1);
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return rank(diffs);
}

}  // namespace hlr
