#include "kslope/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace kslope {

RatVec to_rational(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (long long x : v) r.emplace_back(x);
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = m[col][col].reciprocal();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

long long determinant(const std::vector<IntVec>& m) {
    RatMatrix r;
    for (const auto& row : m) r.push_back(to_rational(row));
    const Rational d = determinant(std::move(r));
    return d.numerator().get_si();
}

int rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        const Rational inv = m[r][c].reciprocal();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int affine_dimension(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    RatMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d = points[i];
        for (std::size_t k = 0; k < d.size(); ++k) d[k] -= points[0][k];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

std::optional<RatVec> solve_square(RatMatrix a, RatVec b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = a[col][col].reciprocal();
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<RatVec> solve_in_span(const std::vector<RatVec>& cols, const RatVec& target) {
    const std::size_t k = cols.size();
    const std::size_t n = target.size();
    // Augmented n x (k+1) elimination.
    RatMatrix m(n, RatVec(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
        m[i][k] = target[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = r;
        while (pivot < n && m[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt; // dependent columns
        std::swap(m[pivot], m[r]);
        const Rational inv = m[r][c].reciprocal();
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t cc = 0; cc <= k; ++cc) m[i][cc] -= f * m[r][cc];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (!m[i][k].is_zero()) return std::nullopt;
    RatVec x(k);
    for (std::size_t i = 0; i < k; ++i) x[pivot_cols[i]] = m[i][k];
    return x;
}

RatVec kernel_direction(const RatMatrix& rows, int n) {
    RatVec d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        RatMatrix minor;
        for (const auto& row : rows) {
            RatVec r;
            for (int c = 0; c < n; ++c)
                if (c != i) r.push_back(row[static_cast<std::size_t>(c)]);
            minor.push_back(std::move(r));
        }
        const Rational m = determinant(std::move(minor));
        d[static_cast<std::size_t>(i)] = (i % 2 == 0) ? m : -m;
    }
    return d;
}

long long gcd_of(const IntVec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, std::llabs(x));
    return g;
}

bool is_primitive(const IntVec& v) { return gcd_of(v) == 1; }

std::vector<IntVec> orthogonal_lattice_basis(const IntVec& u) {
    if (!is_primitive(u)) throw std::invalid_argument("normal vector is not primitive");
    const std::size_t n = u.size();
    IntVec row = u;
    // Columns of `transform` track the unimodular column operations applied to row.
    std::vector<IntVec> transform(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) transform[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, long long q) {
        // column dst -= q * column src
        row[dst] -= q * row[src];
        for (std::size_t i = 0; i < n; ++i) transform[i][dst] -= q * transform[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        std::swap(row[a], row[b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(transform[i][a], transform[i][b]);
    };
    for (std::size_t j = 1; j < n; ++j) {
        while (row[j] != 0) {
            col_op(0, j, row[0] / row[j]);
            col_swap(0, j);
        }
    }
    // row[0] is now +-1 and every other entry zero.
    std::vector<IntVec> basis;
    for (std::size_t j = 1; j < n; ++j) {
        IntVec b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = transform[i][j];
        basis.push_back(std::move(b));
    }
    return basis;
}

} // namespace kslope
