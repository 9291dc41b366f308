#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "sl3/field.hpp"

namespace sl3 {

inline constexpr int kInfiniteVal = INT_MAX;

// A Laurent polynomial in t: finitely many nonzero terms c*t^e, sorted by e.
template <class K>
class Laurent {
public:
    using Term = std::pair<int, K>;

    Laurent() = default;
    Laurent(const K& c) {
        if (!c.is_zero()) terms_.emplace_back(0, c);
    }
    Laurent(long c) : Laurent(K(c)) {}

    static Laurent monomial(const K& c, int e) {
        Laurent r;
        if (!c.is_zero()) r.terms_.emplace_back(e, c);
        return r;
    }
    static Laurent from_terms(std::vector<Term> terms);
    static Laurent parse(const std::string& text);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int val() const { return terms_.empty() ? kInfiniteVal : terms_.front().first; }
    int max_exp() const { return terms_.empty() ? INT_MIN : terms_.back().first; }
    K coeff(int e) const;

    Laurent shift(int k) const;
    // Terms with exponent < n.
    Laurent truncated(int n) const;
    // Terms with exponent >= n.
    Laurent tail(int n) const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, false); }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, true); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) { return multiply(a, b); }
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

    // "c*t^e + ..." with rational coefficients printed as num/den; "0" for zero.
    std::string str() const;

private:
    static Laurent combine(const Laurent& a, const Laurent& b, bool subtract);
    static Laurent multiply(const Laurent& a, const Laurent& b);
    std::vector<Term> terms_;
};

template <class K>
int val(const Laurent<K>& f) {
    return f.val();
}

// Inverse of a unit of O (val 0) modulo t^precision.
template <class K>
Laurent<K> series_inverse(const Laurent<K>& u, int precision);

template <class K>
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols)) {}
    static LaurentMatrix identity(int n);
    static LaurentMatrix diagonal(const std::vector<int>& exponents);
    static LaurentMatrix from_columns(const std::vector<std::vector<Laurent<K>>>& columns);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Laurent<K>& operator()(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    const Laurent<K>& operator()(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }
    std::vector<Laurent<K>> column(int j) const;
    std::vector<std::vector<Laurent<K>>> columns() const;

    LaurentMatrix transpose() const;
    LaurentMatrix shifted(int k) const;
    LaurentMatrix hconcat(const LaurentMatrix& other) const;
    int min_val() const;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) { return multiply(a, b); }
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }
    friend bool operator<(const LaurentMatrix& a, const LaurentMatrix& b) { return a.a_ < b.a_; }

    std::string str() const;

private:
    static LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);
    int r_ = 0, c_ = 0;
    std::vector<Laurent<K>> a_;
};

template <class K>
std::vector<Laurent<K>> mat_vec(const LaurentMatrix<K>& m, const std::vector<Laurent<K>>& v);

template <class K>
Laurent<K> determinant(const LaurentMatrix<K>& m);

// Exact inverse; the determinant must be a monomial so the inverse stays polynomial.
template <class K>
LaurentMatrix<K> inverse(const LaurentMatrix<K>& m);

// Elementary divisor exponents of a matrix of full row rank, descending.
template <class K>
std::vector<int> elementary_exponents(const LaurentMatrix<K>& m);

// Elementary divisor exponents of a square nonsingular matrix, descending.
template <class K>
std::vector<int> smith_exponents(const LaurentMatrix<K>& m);

// Canonical O-basis of the module spanned by the columns of a 3 x k matrix:
// lower triangular, pivots t^a on the diagonal, entries below a pivot t^a
// reduced to exponents < a.
template <class K>
LaurentMatrix<K> hermite_over_O(const LaurentMatrix<K>& generators);

}  // namespace sl3
