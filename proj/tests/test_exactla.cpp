#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefrees/exactla.hpp"

#include <random>

using namespace lefrees;

namespace {

std::vector<std::vector<std::size_t>> all_k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t j = k;
        bool advanced = false;
        while (j-- > 0)
            if (idx[j] < n - (k - j)) {
                ++idx[j];
                for (std::size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
                advanced = true;
                break;
            }
        if (!advanced) break;
    }
    return out;
}

// Oracle: rank = largest k admitting a nonzero k x k minor, by brute force.
std::size_t rank_by_minors(const IntMatrix& m) {
    std::size_t best = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        bool nonzero = false;
        for (const auto& rs : all_k_subsets(m.rows(), k)) {
            for (const auto& cs : all_k_subsets(m.cols(), k)) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
                if (determinant(sub) != 0) {
                    nonzero = true;
                    break;
                }
            }
            if (nonzero) break;
        }
        if (nonzero) best = k;
    }
    return best;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

// The 5 x 6 matrix of Example "xL^2 on A(Delta)_1", rows in the paper's
// order aef, ace, ecd, edf, bdf over columns a..f.
IntMatrix paper_matrix() {
    return from_rows({{2, 0, 0, 0, 2, 2},
                      {2, 0, 2, 0, 2, 0},
                      {0, 0, 2, 2, 2, 0},
                      {0, 0, 0, 2, 2, 2},
                      {0, 2, 0, 2, 0, 2}});
}

std::uint32_t random_prime_30bit(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(1u << 29, (1u << 30) - 1);
    while (true) {
        std::uint32_t c = dist(rng) | 1u;
        bool prime = c > 1;
        for (std::uint64_t d = 3; d * d <= c && prime; d += 2)
            if (c % d == 0) prime = false;
        if (prime) return c;
    }
}

}  // namespace

TEST_CASE("rank over Q: paper matrix has rank 4 (all 5x5 minors vanish)") {
    const IntMatrix m = paper_matrix();
    CHECK(rank_by_minors(m) == 4);  // independent oracle
    CHECK(rank(m) == 4);
    CHECK(rank(m, PrimeField(2)) == 0);  // every entry is even
    CHECK(rank(m.transposed()) == 4);
}

TEST_CASE("rank: identity and degenerate shapes") {
    const IntMatrix id = IntMatrix::identity(3);
    CHECK(rank(id) == 3);
    CHECK(rank(id, PrimeField(2)) == 3);
    CHECK(rank(id, PrimeField(101)) == 3);
    CHECK(rank(IntMatrix(0, 5)) == 0);
    CHECK(rank(IntMatrix(4, 0)) == 0);
    CHECK(rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("rank agrees with the minors oracle on random small matrices") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("left kernel vector: paper matrix kernel is (1,-1,1,-1,0)") {
    const IntMatrix m = paper_matrix();
    const auto v = left_kernel_vector(m);
    REQUIRE(v.has_value());
    // rank 4 of 5 rows: kernel is 1-dimensional, so the normalized vector
    // is exactly the paper's, up to the fixed sign convention.
    const std::vector<BigInt> expected = {1, -1, 1, -1, 0};
    CHECK(*v == expected);
    // Exactness: v^T M = 0 over the integers.
    for (std::size_t c = 0; c < m.cols(); ++c) {
        BigInt acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) acc += (*v)[r] * m.at(r, c);
        CHECK(acc == 0);
    }
}

TEST_CASE("left kernel vector: identity has none, zero row gives e_1") {
    CHECK(!left_kernel_vector(IntMatrix::identity(4)).has_value());
    IntMatrix z(3, 2);  // all-zero rows
    const auto v = left_kernel_vector(z);
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<BigInt>{1, 0, 0});
}

TEST_CASE("left kernel vector is exact on random rank-deficient matrices") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> entry(-9, 9), dim(2, 6);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t R = dim(rng), C = dim(rng);
        IntMatrix m(R, C);
        for (std::size_t r = 0; r + 1 < R; ++r)
            for (std::size_t c = 0; c < C; ++c) m.at(r, c) = entry(rng);
        // Last row = sum of the others: rank < rows always.
        for (std::size_t c = 0; c < C; ++c) {
            BigInt acc = 0;
            for (std::size_t r = 0; r + 1 < R; ++r) acc += m.at(r, c);
            m.at(R - 1, c) = acc;
        }
        const auto v = left_kernel_vector(m);
        REQUIRE(v.has_value());
        bool nonzero = false;
        for (const BigInt& x : *v) nonzero = nonzero || x != 0;
        CHECK(nonzero);
        for (std::size_t c = 0; c < C; ++c) {
            BigInt acc = 0;
            for (std::size_t r = 0; r < R; ++r) acc += (*v)[r] * m.at(r, c);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("left kernel vector mod p") {
    const IntMatrix m = paper_matrix();
    const auto v = left_kernel_vector(m, PrimeField(5));
    REQUIRE(v.has_value());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        BigInt acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) acc += (*v)[r] * m.at(r, c);
        CHECK(acc % 5 == 0);
    }
}

TEST_CASE("smith normal form: invariant factor examples") {
    CHECK(smith_normal_form(from_rows({{2, 0}, {0, 4}})) == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form(from_rows({{2, 0}, {0, 0}})) == std::vector<BigInt>{2});
    CHECK(smith_normal_form(IntMatrix(3, 3)).empty());
    // Divisibility chain on a random-ish dense example.
    const auto f = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    REQUIRE(f.size() >= 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
}

TEST_CASE("smith normal form: d_1...d_k equals the gcd of k x k minors") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        const auto f = smith_normal_form(m);
        // Oracle: gcd of all k x k minors via brute force for each k.
        for (std::size_t k = 1; k <= f.size(); ++k) {
            BigInt gcd_minors = 0;
            for (const auto& rs : all_k_subsets(m.rows(), k))
                for (const auto& cs : all_k_subsets(m.cols(), k)) {
                    IntMatrix sub(k, k);
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
                    gcd_minors = boost::multiprecision::gcd(gcd_minors,
                                                            boost::multiprecision::abs(determinant(sub)));
                }
            BigInt prod = 1;
            for (std::size_t i = 0; i < k; ++i) prod *= f[i];
            CHECK(gcd_minors == prod);
        }
    }
}

TEST_CASE("gcd of maximal minors") {
    CHECK(gcd_maximal_minors(from_rows({{2, 4}})) == 2);
    CHECK(gcd_maximal_minors(from_rows({{1, 2}, {2, 4}})) == 0);  // rank deficient
    CHECK(gcd_maximal_minors(IntMatrix::identity(3)) == 1);
    // Tall matrices are transposed first.
    CHECK(gcd_maximal_minors(from_rows({{2}, {4}})) == 2);
}

TEST_CASE("unimodularity: identity yes, triangle incidence no") {
    CHECK(is_unimodular(IntMatrix::identity(4)).verdict == UnimodularReport::Verdict::yes);
    // Incidence matrix of the triangle graph: determinant +-2.
    const IntMatrix tri = from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    const auto rep = is_unimodular(tri);
    CHECK(rep.verdict == UnimodularReport::Verdict::no);
    CHECK((rep.witness_det == 2 || rep.witness_det == -2));
    CHECK(boost::multiprecision::abs(determinant(tri)) == 2);  // cofactor oracle
}

TEST_CASE("unimodularity: budget exhaustion reports inconclusive") {
    IntMatrix m(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = (r == c) ? 1 : 0;
    CHECK(is_unimodular(m, -1, 10).verdict == UnimodularReport::Verdict::inconclusive);
}

TEST_CASE("cross-kernel consistency: Bareiss rank equals modular rank at random primes") {
    std::mt19937_64 rng(0xBEEF);
    std::uniform_int_distribution<int> entry(-99, 99), dim(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        const std::size_t rq = rank(m);
        for (int t = 0; t < 3; ++t) {
            const std::uint32_t p = random_prime_30bit(rng);
            CHECK(rank(m, PrimeField(p)) == rq);
        }
    }
}

TEST_CASE("PrimeField validates primality") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(2147483647u));
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
}
