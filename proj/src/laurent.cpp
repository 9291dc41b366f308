#include "sl3/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sl3/errors.hpp"

namespace sl3 {

template <class K>
Laurent<K> Laurent<K>::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    Laurent r;
    for (auto& [e, c] : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == e)
            r.terms_.back().second = r.terms_.back().second + c;
        else
            r.terms_.emplace_back(e, c);
        if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    }
    return r;
}

template <class K>
K Laurent<K>::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return K(0);
}

template <class K>
Laurent<K> Laurent<K>::shift(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

template <class K>
Laurent<K> Laurent<K>::truncated(int n) const {
    Laurent r;
    for (const auto& t : terms_)
        if (t.first < n) r.terms_.push_back(t);
    return r;
}

template <class K>
Laurent<K> Laurent<K>::tail(int n) const {
    Laurent r;
    for (const auto& t : terms_)
        if (t.first >= n) r.terms_.push_back(t);
    return r;
}

template <class K>
Laurent<K> Laurent<K>::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

template <class K>
Laurent<K> Laurent<K>::combine(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent r;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
            const auto& t = b.terms_[j++];
            r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
        } else {
            K c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
            if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

template <class K>
Laurent<K> Laurent<K>::multiply(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<int, K> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, fresh] = acc.try_emplace(ea + eb, ca * cb);
            if (!fresh) it->second = it->second + ca * cb;
        }
    Laurent r;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(e, c);
    return r;
}

template <class K>
std::string Laurent<K>::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*t^" + std::to_string(e);
    }
    return s;
}

template <class K>
Laurent<K> Laurent<K>::parse(const std::string& text) {
    std::vector<Term> terms;
    std::string body;
    for (char ch : text)
        if (ch != ' ') body += ch;
    if (body == "0" || body.empty()) return {};
    size_t pos = 0;
    while (pos < body.size()) {
        size_t plus = body.find('+', pos);
        std::string term = body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        pos = plus == std::string::npos ? body.size() : plus + 1;
        size_t star = term.find("*t^");
        if (star == std::string::npos) {
            terms.emplace_back(0, K::parse(term));
        } else {
            try {
                terms.emplace_back(std::stoi(term.substr(star + 3)), K::parse(term.substr(0, star)));
            } catch (const std::logic_error&) {
                throw ParseError("bad term '" + term + "'");
            }
        }
    }
    return from_terms(std::move(terms));
}

template <class K>
Laurent<K> series_inverse(const Laurent<K>& u, int precision) {
    if (u.val() != 0) throw std::invalid_argument("series_inverse needs a unit of O");
    if (precision <= 0) return {};
    std::vector<K> coef(static_cast<size_t>(precision), K(0));
    std::vector<K> inv(static_cast<size_t>(precision), K(0));
    for (const auto& [e, c] : u.terms())
        if (e < precision) coef[static_cast<size_t>(e)] = c;
    K c0inv = coef[0].inverse();
    inv[0] = c0inv;
    for (int k = 1; k < precision; ++k) {
        K s(0);
        for (int i = 1; i <= k; ++i) s = s + coef[i] * inv[k - i];
        inv[k] = -(c0inv * s);
    }
    std::vector<typename Laurent<K>::Term> terms;
    for (int k = 0; k < precision; ++k) terms.emplace_back(k, inv[k]);
    return Laurent<K>::from_terms(std::move(terms));
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Laurent<K>(1);
    return m;
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::diagonal(const std::vector<int>& exponents) {
    int n = static_cast<int>(exponents.size());
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Laurent<K>::monomial(K(1), exponents[i]);
    return m;
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::from_columns(const std::vector<std::vector<Laurent<K>>>& columns) {
    if (columns.empty()) throw std::invalid_argument("no columns");
    int r = static_cast<int>(columns[0].size());
    LaurentMatrix m(r, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(columns[j].size()) != r) throw std::invalid_argument("ragged columns");
        for (int i = 0; i < r; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

template <class K>
std::vector<Laurent<K>> LaurentMatrix<K>::column(int j) const {
    std::vector<Laurent<K>> v;
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
}

template <class K>
std::vector<std::vector<Laurent<K>>> LaurentMatrix<K>::columns() const {
    std::vector<std::vector<Laurent<K>>> cs;
    for (int j = 0; j < c_; ++j) cs.push_back(column(j));
    return cs;
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::transpose() const {
    LaurentMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::shifted(int k) const {
    LaurentMatrix m = *this;
    for (auto& x : m.a_) x = x.shift(k);
    return m;
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::hconcat(const LaurentMatrix& other) const {
    if (other.r_ != r_) throw std::invalid_argument("row mismatch");
    LaurentMatrix m(r_, c_ + other.c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (int j = 0; j < other.c_; ++j) m(i, c_ + j) = other(i, j);
    }
    return m;
}

template <class K>
int LaurentMatrix<K>::min_val() const {
    int v = kInfiniteVal;
    for (const auto& x : a_) v = std::min(v, x.val());
    return v;
}

template <class K>
LaurentMatrix<K> LaurentMatrix<K>::multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("dimension mismatch");
    LaurentMatrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < b.c_; ++j) {
            Laurent<K> s;
            for (int k = 0; k < a.c_; ++k) s += a(i, k) * b(k, j);
            m(i, j) = s;
        }
    return m;
}

template <class K>
std::string LaurentMatrix<K>::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << "[";
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]\n";
    }
    return os.str();
}

template <class K>
std::vector<Laurent<K>> mat_vec(const LaurentMatrix<K>& m, const std::vector<Laurent<K>>& v) {
    std::vector<Laurent<K>> r(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k) r[i] += m(i, k) * v[k];
    return r;
}

template <class K>
static Laurent<K> minor_det(const LaurentMatrix<K>& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m(rows[0], cols[0]);
    Laurent<K> d;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        if (m(rows[0], cols[k]).is_zero()) continue;
        std::vector<int> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
        Laurent<K> term = m(rows[0], cols[k]) * minor_det(m, sub_rows, sub_cols);
        d = (k % 2 == 0) ? d + term : d - term;
    }
    return d;
}

template <class K>
Laurent<K> determinant(const LaurentMatrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<int> idx(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) idx[i] = i;
    return minor_det(m, idx, idx);
}

template <class K>
LaurentMatrix<K> inverse(const LaurentMatrix<K>& m) {
    int n = m.rows();
    Laurent<K> det = determinant(m);
    if (det.is_zero()) throw SingularMatrix("matrix is not invertible");
    if (det.terms().size() != 1) throw std::invalid_argument("determinant is not a monomial");
    auto [e, c] = det.terms().front();
    Laurent<K> det_inv = Laurent<K>::monomial(c.inverse(), -e);
    LaurentMatrix<K> inv(n, n);
    if (n == 1) {
        inv(0, 0) = det_inv;
        return inv;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            Laurent<K> cof = minor_det(m, rows, cols) * det_inv;
            inv(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return inv;
}

template <class K>
std::vector<int> elementary_exponents(const LaurentMatrix<K>& input) {
    LaurentMatrix<K> m = input;
    int r = m.rows(), c = m.cols();
    std::vector<int> out;
    std::vector<int> rows(static_cast<size_t>(r)), cols(static_cast<size_t>(c));
    for (int i = 0; i < r; ++i) rows[i] = i;
    for (int j = 0; j < c; ++j) cols[j] = j;
    for (int k = 0; k < std::min(r, c); ++k) {
        int best = kInfiniteVal, pi = -1, pj = -1;
        for (int i = k; i < r; ++i)
            for (int j = k; j < c; ++j) {
                int v = m(rows[i], cols[j]).val();
                if (v < best) best = v, pi = i, pj = j;
            }
        if (pi < 0) break;
        std::swap(rows[k], rows[pi]);
        std::swap(cols[k], cols[pj]);
        const Laurent<K> unit = m(rows[k], cols[k]).shift(-best);
        for (int i = k + 1; i < r; ++i) {
            Laurent<K> q = m(rows[i], cols[k]);
            if (q.is_zero()) continue;
            Laurent<K> f = q.shift(-best);
            for (int j = k; j < c; ++j)
                m(rows[i], cols[j]) = unit * m(rows[i], cols[j]) - f * m(rows[k], cols[j]);
        }
        out.push_back(best);
    }
    if (static_cast<int>(out.size()) < r) throw RankDeficient("columns do not span the full space");
    std::sort(out.rbegin(), out.rend());
    return out;
}

template <class K>
std::vector<int> smith_exponents(const LaurentMatrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("smith_exponents needs a square matrix");
    try {
        return elementary_exponents(m);
    } catch (const RankDeficient&) {
        throw SingularMatrix("determinant is zero");
    }
}

template <class K>
static void truncate_column(LaurentMatrix<K>& w, int col, int precision) {
    for (int i = 0; i < w.rows(); ++i) w(i, col) = w(i, col).truncated(precision);
}

template <class K>
LaurentMatrix<K> hermite_over_O(const LaurentMatrix<K>& generators) {
    const int n = generators.rows();
    const int N = elementary_exponents(generators).front();
    // t^P O^n lies inside the module, so entries are kept modulo t^P.
    const int P = N + 1;
    LaurentMatrix<K> w = generators.hconcat(LaurentMatrix<K>::identity(n).shifted(N));
    const int m = std::min(generators.min_val(), N);
    for (int j = 0; j < w.cols(); ++j) truncate_column(w, j, P);

    std::vector<bool> used(static_cast<size_t>(w.cols()), false);
    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    std::vector<int> pivot_exp(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        int best = kInfiniteVal, pc = -1;
        for (int j = 0; j < w.cols(); ++j) {
            if (used[j]) continue;
            int v = w(r, j).val();
            if (v < best) best = v, pc = j;
        }
        if (pc < 0) throw RankDeficient("columns do not span the full space");
        Laurent<K> uinv = series_inverse(w(r, pc).shift(-best), P - m);
        for (int i = 0; i < n; ++i) w(i, pc) = w(i, pc) * uinv;
        truncate_column(w, pc, P);
        for (int j = 0; j < w.cols(); ++j) {
            if (used[j] || j == pc || w(r, j).is_zero()) continue;
            Laurent<K> f = w(r, j).shift(-best);
            for (int i = 0; i < n; ++i) w(i, j) -= f * w(i, pc);
            truncate_column(w, j, P);
        }
        used[pc] = true;
        pivot_col[r] = pc;
        pivot_exp[r] = best;
    }

    LaurentMatrix<K> b(n, n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i) b(i, r) = w(i, pivot_col[r]);
    for (int c = 0; c + 1 < n; ++c)
        for (int r = c + 1; r < n; ++r) {
            Laurent<K> q = b(r, c).tail(pivot_exp[r]).shift(-pivot_exp[r]);
            if (q.is_zero()) continue;
            for (int i = 0; i < n; ++i) b(i, c) -= q * b(i, r);
            truncate_column(b, c, P);
        }
    return b;
}

#define SL3_INSTANTIATE(K)                                                               \
    template class Laurent<K>;                                                           \
    template class LaurentMatrix<K>;                                                     \
    template Laurent<K> series_inverse(const Laurent<K>&, int);                          \
    template std::vector<Laurent<K>> mat_vec(const LaurentMatrix<K>&, const std::vector<Laurent<K>>&); \
    template Laurent<K> determinant(const LaurentMatrix<K>&);                            \
    template LaurentMatrix<K> inverse(const LaurentMatrix<K>&);                           \
    template std::vector<int> elementary_exponents(const LaurentMatrix<K>&);             \
    template std::vector<int> smith_exponents(const LaurentMatrix<K>&);                  \
    template LaurentMatrix<K> hermite_over_O(const LaurentMatrix<K>&);

SL3_INSTANTIATE(Rational)
SL3_INSTANTIATE(Fp)

}  // namespace sl3
