#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefrees {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Dense matrix of arbitrary-precision integers, row-major.
 *
 * All linear algebra in this library is exact: rank over the rationals is
 * computed by fraction-free (Bareiss) elimination, rank over GF(p) by
 * modular Gaussian elimination. No floating point anywhere.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

/** Coefficient field selector: p = 0 means the rationals, otherwise GF(p). */
struct PrimeField {
    std::uint32_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t prime);  // validates primality (or 0)

    bool is_rationals() const { return p == 0; }
};

/** Rank of m over Q (k.p == 0, Bareiss) or GF(p) (modular elimination). */
std::size_t rank(const IntMatrix& m, PrimeField k = PrimeField{});

/**
 * A nonzero vector v with v^T m = 0, if rank < rows; none otherwise.
 *
 * Over Q the vector is integral and normalized (content 1, first nonzero
 * entry positive). Over GF(p) entries are residues in [0, p) with the first
 * nonzero entry equal to 1.
 */
std::optional<std::vector<BigInt>> left_kernel_vector(const IntMatrix& m,
                                                      PrimeField k = PrimeField{});

/** Invariant factors d_1 | d_2 | ... (nonzero ones only, nonnegative). */
std::vector<BigInt> smith_normal_form(IntMatrix m);

/**
 * gcd of the maximal minors: 0 when rank < min(rows, cols), otherwise the
 * product of the invariant factors. The matrix is transposed first when
 * rows > cols, so "maximal" always means min(rows, cols)-sized.
 */
BigInt gcd_maximal_minors(const IntMatrix& m);

struct UnimodularReport {
    enum class Verdict { yes, no, inconclusive };
    Verdict verdict = Verdict::yes;
    // When verdict == no: a witness minor with |det| >= 2.
    std::vector<std::size_t> witness_rows, witness_cols;
    BigInt witness_det;
    std::uint64_t minors_checked = 0;
};

/**
 * Exhaustive check that every square minor up to size_cap lies in {-1,0,1}.
 * size_cap < 0 means min(rows, cols). The check is exponential; after
 * `budget` minors it gives up and reports inconclusive.
 */
UnimodularReport is_unimodular(const IntMatrix& m, int size_cap = -1,
                               std::uint64_t budget = 1000000);

/** Determinant of a square matrix (Bareiss). */
BigInt determinant(const IntMatrix& m);

}  // namespace lefrees
