#pragma once

#include "lefrees/complex.hpp"
#include "lefrees/exactla.hpp"
#include "lefrees/monomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefrees {

/**
 * The artinian reduction A(Delta) = S/(N(Delta) + (x_1^2,...,x_n^2)).
 * Its degree-i monomial basis is the set of (i-1)-faces of Delta, so the
 * Hilbert function equals the f-vector and the socle degree is dim + 1.
 */
struct ArtinianAlgebra {
    SimplicialComplex delta;
    FVector hilbert;

    explicit ArtinianAlgebra(SimplicialComplex d) : delta(std::move(d)), hilbert(f_vector(delta)) {}
    int socle_degree() const { return delta.dim() + 1; }
    long long dim_in_degree(int i) const { return hilbert.f(i - 1); }
};

/** One multiplication map xL^j : A_i -> A_{i+j} at a fixed characteristic. */
struct MapRecord {
    int i = 0, j = 0;
    long long source_dim = 0, target_dim = 0;
    long long rank = 0;
    bool full_rank = false;
    // Witnesses for failing maps: a right kernel vector (not injective)
    // and/or a left kernel vector of the matrix (not surjective). Entries
    // are integers at characteristic zero, residues mod p otherwise.
    std::vector<BigInt> kernel_witness;
    std::vector<BigInt> cokernel_witness;
};

struct LefschetzReport {
    std::uint32_t characteristic = 0;
    std::vector<MapRecord> maps;
    bool wlp = true;  // over the j = 1 maps present in `maps`
    bool slp = true;  // over all maps present in `maps`

    const MapRecord* find_map(int i, int j) const;
    const MapRecord* first_failure() const;
};

/**
 * Matrix of xL^j : A_i -> A_{i+j} with L = x_1 + ... + x_n: rows indexed by
 * the (i+j-1)-faces, columns by the (i-1)-faces (both lexicographic), entry
 * j! when the column face is contained in the row face, reduced mod p when
 * p > 0 (the whole matrix vanishes when 0 < p <= j).
 * Pre: i >= 0, j >= 1, i + j <= dim + 1 (i = 0 is the one-column case).
 */
IntMatrix multiplication_matrix(const SimplicialComplex& delta, int i, int j, std::uint32_t p = 0);

/** Checks the maps xL : A_i -> A_{i+1} for 1 <= i <= dim. */
LefschetzReport wlp_verdict(const SimplicialComplex& delta, std::uint32_t p = 0);

/** Checks xL^j : A_i -> A_{i+j} for all i, j >= 1 with i + j <= dim + 1. */
LefschetzReport slp_verdict(const SimplicialComplex& delta, std::uint32_t p = 0);

/** Rows = exponent vectors of the minimal generators. */
IntMatrix log_matrix(const MonomialIdeal& ideal);

/**
 * Analytic spread of an equigenerated monomial ideal: the rank over Q of
 * its log-matrix. Throws for non-equigenerated input.
 */
long long analytic_spread(const MonomialIdeal& ideal);

struct DaonairReport {
    bool prediction_applicable = false;  // needs f_1 >= f_0
    bool predicted_full_rank = false;    // p != 2 and every component non-bipartite
    bool computed_full_rank = false;
    long long rank = 0;
    long long source_dim = 0, target_dim = 0;
};

/**
 * Cross-validation of the first-map criterion: prediction from the parity
 * of p and bipartiteness of the 1-skeleton components vs. the computed rank
 * of xL : A_1 -> A_2. Both sides are returned; the pair is the test.
 */
DaonairReport daonair_criterion(const SimplicialComplex& delta, std::uint32_t p);

struct HauselEntry {
    int k = 0;
    int power = 0;  // the exponent d + 1 - 2k
    long long source_dim = 0;
    long long rank = 0;
    bool injective = false;
};

/**
 * Injectivity of xL^{d+1-2k} : A_k -> A_{d+1-k} at characteristic zero for
 * k in [k_min, k_max] intersected with the valid range k < (d+1)/2;
 * k_max < 0 means the whole range. Delta must be pure (A(Delta) level).
 */
std::vector<HauselEntry> hausel_check(const SimplicialComplex& delta, int k_min = 0,
                                      int k_max = -1);

struct TwoDimSlpReport {
    long long spread = 0;       // l(F(Delta))
    long long facet_count = 0;  // f_2
    bool slp_by_criterion = false;  // spread == f_2
    bool slp_computed = false;      // direct verdict at p = 0
};

/** The 2-dimensional criterion: SLP iff l(F(Delta)) = f_2. Pre: pure, dim 2, f_2 <= f_0. */
TwoDimSlpReport two_dim_slp_criterion(const SimplicialComplex& delta);

struct LinearTypeReport {
    enum class Verdict { sufficient_yes, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
    std::vector<int> even_cycle;  // facet indices, when one was found
};

/**
 * Sufficient test for F(Delta) being of linear type: Delta a simplicial
 * forest, or L(Delta) without even cycles. Anything else (including an
 * exhausted search budget) is inconclusive.
 */
LinearTypeReport linear_type_sufficient(const SimplicialComplex& delta,
                                        std::uint64_t budget = 10000000);

/**
 * SLP verdicts at characteristic 0 and the given odd primes for a complex
 * whose connected components are all 2-dimensional simplicial trees.
 */
std::vector<std::pair<std::uint32_t, bool>> forest_slp_check(
    const SimplicialComplex& delta, const std::vector<std::uint32_t>& characteristics);

struct NtfSlpReport {
    NtfProbeReport probe;
    LefschetzReport slp;
    bool slp_failure_asserted = false;  // probe found no gap up to m_max
    MapRecord top_map;                  // xL^d : A_1 -> A_{d+1} (log-matrix map)
};

/**
 * Interplay probe: for pure Delta with f_d >= f_0, runs the NTF probe on
 * F(Delta) and the SLP verdict at characteristic 0. A clean probe asserts
 * SLP failure, expected at the top map whose matrix is log(F(Delta)).
 */
NtfSlpReport ntf_slp_interplay(const SimplicialComplex& delta, int m_max = 4);

}  // namespace lefrees
