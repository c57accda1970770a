#include "lefrees/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lefrees {

namespace {

bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
    BigInt r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return r.convert_to<std::uint64_t>();
}

// Row echelon over GF(p) on [M | I]; pivots are searched in the M block
// only. Returns the rank; when kernel_out is given and rank < rows, stores
// the identity-block part of the first zeroed row (a left kernel vector).
std::size_t echelon_mod_p(const IntMatrix& m, std::uint64_t p, std::vector<BigInt>* kernel_out) {
    const std::size_t R = m.rows(), C = m.cols();
    const bool aug = kernel_out != nullptr;
    const std::size_t W = aug ? C + R : C;
    std::vector<std::vector<std::uint64_t>> a(R, std::vector<std::uint64_t>(W, 0));
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) a[r][c] = reduce_mod(m.at(r, c), p);
        if (aug) a[r][C + r] = 1 % p;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t pivot = rank;
        while (pivot < R && a[pivot][col] == 0) ++pivot;
        if (pivot == R) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < R; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t f = a[r][col] * mod_inverse(a[rank][col], p) % p;
            for (std::size_t c = 0; c < W; ++c)
                a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
        }
        ++rank;
    }
    if (aug && rank < R) {
        std::vector<BigInt> v(R, 0);
        // Normalize: first nonzero entry scaled to 1.
        std::uint64_t lead = 0;
        for (std::size_t c = 0; c < R; ++c)
            if (a[rank][C + c] != 0) { lead = a[rank][C + c]; break; }
        const std::uint64_t inv = mod_inverse(lead, p);
        for (std::size_t c = 0; c < R; ++c) v[c] = a[rank][C + c] * inv % p;
        *kernel_out = std::move(v);
    }
    return rank;
}

// Fraction-free (Bareiss) elimination on [M | I]; exact integer arithmetic,
// every intermediate entry is a minor of the original matrix. Pivots are
// searched in the M block only. Returns the rank; when kernel_out is given
// and rank < rows, stores the identity-block part of the first zeroed row.
std::size_t echelon_bareiss(const IntMatrix& m, std::vector<BigInt>* kernel_out) {
    const std::size_t R = m.rows(), C = m.cols();
    const bool aug = kernel_out != nullptr;
    const std::size_t W = aug ? C + R : C;
    std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(W, 0));
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) a[r][c] = m.at(r, c);
        if (aug) a[r][C + r] = 1;
    }
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t pivot = rank;
        while (pivot < R && a[pivot][col] == 0) ++pivot;
        if (pivot == R) continue;
        std::swap(a[rank], a[pivot]);
        const BigInt piv = a[rank][col];
        for (std::size_t r = rank + 1; r < R; ++r) {
            const BigInt factor = a[r][col];
            for (std::size_t c = 0; c < W; ++c) {
                if (c == col) continue;
                a[r][c] = (piv * a[r][c] - factor * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    if (aug && rank < R) {
        std::vector<BigInt> v(a[rank].begin() + C, a[rank].end());
        BigInt g = 0;
        for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
        if (g > 1)
            for (BigInt& x : v) x /= g;
        for (const BigInt& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (BigInt& y : v) y = -y;
            break;
        }
        *kernel_out = std::move(v);
    }
    return rank;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
    if (p != 0 && !is_prime_u32(p))
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix multiply: dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
        }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
        os << "\n";
    }
    return os.str();
}

std::size_t rank(const IntMatrix& m, PrimeField k) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (k.is_rationals()) return echelon_bareiss(m, nullptr);
    return echelon_mod_p(m, k.p, nullptr);
}

std::optional<std::vector<BigInt>> left_kernel_vector(const IntMatrix& m, PrimeField k) {
    if (m.rows() == 0) return std::nullopt;
    std::vector<BigInt> v;
    std::size_t r;
    if (m.cols() == 0) {
        v.assign(m.rows(), 0);
        v[0] = 1;
        return v;
    }
    if (k.is_rationals())
        r = echelon_bareiss(m, &v);
    else
        r = echelon_mod_p(m, k.p, &v);
    if (r == m.rows()) return std::nullopt;
    return v;
}

std::vector<BigInt> smith_normal_form(IntMatrix a) {
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<BigInt> factors;
    std::size_t t = 0;
    while (t < R && t < C) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        std::size_t bi = R, bj = C;
        BigInt best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                const BigInt& v = a.at(i, j);
                if (v == 0) continue;
                if (bi == R || boost::multiprecision::abs(v) < boost::multiprecision::abs(best)) {
                    bi = i;
                    bj = j;
                    best = v;
                }
            }
        if (bi == R) break;  // trailing submatrix is zero
        if (bi != t)
            for (std::size_t j = 0; j < C; ++j) std::swap(a.at(t, j), a.at(bi, j));
        if (bj != t)
            for (std::size_t i = 0; i < R; ++i) std::swap(a.at(i, t), a.at(i, bj));

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (a.at(i, t) == 0) continue;
                const BigInt q = a.at(i, t) / a.at(t, t);
                for (std::size_t j = t; j < C; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    for (std::size_t j = 0; j < C; ++j) std::swap(a.at(t, j), a.at(i, j));
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (a.at(t, j) == 0) continue;
                const BigInt q = a.at(t, j) / a.at(t, t);
                for (std::size_t i = t; i < R; ++i) a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) {
                    for (std::size_t i = 0; i < R; ++i) std::swap(a.at(i, t), a.at(i, j));
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the whole trailing submatrix.
            for (std::size_t i = t + 1; i < R && !dirty; ++i)
                for (std::size_t j = t + 1; j < C && !dirty; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        for (std::size_t jj = t; jj < C; ++jj) a.at(t, jj) += a.at(i, jj);
                        dirty = true;
                    }
        }
        if (a.at(t, t) < 0) a.at(t, t) = -a.at(t, t);
        factors.push_back(a.at(t, t));
        ++t;
    }
    return factors;
}

BigInt gcd_maximal_minors(const IntMatrix& m) {
    if (m.rows() > m.cols()) return gcd_maximal_minors(m.transposed());
    if (m.rows() == 0) return 1;  // empty product convention
    std::vector<BigInt> snf = smith_normal_form(m);
    if (snf.size() < m.rows()) return 0;
    BigInt prod = 1;
    for (const BigInt& d : snf) prod *= d;
    return prod;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t N = m.rows();
    if (N == 0) return 1;
    std::vector<std::vector<BigInt>> a(N, std::vector<BigInt>(N));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) a[r][c] = m.at(r, c);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t pivot = k;
        while (pivot < N && a[pivot][k] == 0) ++pivot;
        if (pivot == N) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < N; ++r) {
            for (std::size_t c = k + 1; c < N; ++c)
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[N - 1][N - 1] : -a[N - 1][N - 1];
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

UnimodularReport is_unimodular(const IntMatrix& m, int size_cap, std::uint64_t budget) {
    UnimodularReport rep;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t cap = std::min(R, C);
    if (size_cap >= 0) cap = std::min<std::size_t>(cap, static_cast<std::size_t>(size_cap));
    for (std::size_t k = 1; k <= cap; ++k) {
        std::vector<std::size_t> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        do {
            std::iota(ci.begin(), ci.end(), 0);
            do {
                if (rep.minors_checked++ >= budget) {
                    rep.verdict = UnimodularReport::Verdict::inconclusive;
                    return rep;
                }
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                const BigInt d = determinant(sub);
                if (d > 1 || d < -1) {
                    rep.verdict = UnimodularReport::Verdict::no;
                    rep.witness_rows = ri;
                    rep.witness_cols = ci;
                    rep.witness_det = d;
                    return rep;
                }
            } while (next_combination(ci, C));
        } while (next_combination(ri, R));
    }
    rep.verdict = UnimodularReport::Verdict::yes;
    return rep;
}

}  // namespace lefrees
