#pragma once

#include "qwoa/bigint.hpp"
#include "qwoa/errors.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace qwoa {

// ---------------------------------------------------------------------------
// Combinatorial object types
// ---------------------------------------------------------------------------

// k-combination of [0, n): strictly ascending elements.
struct Combination {
    std::vector<int> elements;
    int n = 0;

    int k() const { return static_cast<int>(elements.size()); }
};

// Permutation of [0, n): mapping[i] = image of i.
struct Permutation {
    std::vector<int> mapping;

    int n() const { return static_cast<int>(mapping.size()); }
};

enum class Step : std::uint8_t { East = 0, North = 1 };

// Monotone lattice path from (0,0) to (n,n) never rising above the diagonal.
struct DyckPath {
    std::vector<Step> steps;

    int n() const { return static_cast<int>(steps.size() / 2); }
};

// Length-L sequence over an alphabet of size A.
struct Word {
    std::vector<int> letters;
    int alphabet = 0;

    int length() const { return static_cast<int>(letters.size()); }
};

using DomainObject = std::variant<Combination, Permutation, DyckPath, Word>;

// Throw ValidationError unless the object satisfies its structural invariants.
void validate(const Combination& c);
void validate(const Permutation& p);
void validate(const DyckPath& p);
void validate(const Word& w);

// ---------------------------------------------------------------------------
// Exact counting helpers
// ---------------------------------------------------------------------------

// Pascal-triangle cache of C(i, j) for 0 <= j <= i <= n.
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    const BigInt& at(int n, int k) const; // 0 for k < 0 or k > n
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
    static const BigInt zero_;
};

BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt catalan(int n);

// Number of monotone sub-diagonal lattice paths from (0,0) to (i,j):
// the ballot numbers.  Zero when j > i; num_dyck(n, n) = Catalan(n).
BigInt num_dyck(int i, int j);

// Ballot-number cache N(i,j) for 0 <= j <= i <= n.
class BallotTable {
public:
    explicit BallotTable(int max_i);

    const BigInt& at(int i, int j) const; // 0 for j > i or negative args
    int max_i() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
    static const BigInt zero_;
};

// ---------------------------------------------------------------------------
// Ranking / unranking bijections
// ---------------------------------------------------------------------------

// Colexicographic combination rank: sum over 1-based positions j of C(c_j, j).
BigInt rank_combination(const Combination& c);
Combination unrank_combination(const BigInt& r, int n, int k);

// Rank amongst all combinations whose size lies in `orders` (ascending,
// distinct); objects sorted by size first, colexicographically within a size.
BigInt rank_combination_orders(const Combination& c, const std::vector<int>& orders);
Combination unrank_combination_orders(const BigInt& r, int n, const std::vector<int>& orders);

// Convenience forms for the contiguous bound |c| <= K.
BigInt rank_bounded_combination(const Combination& c, int k_max);
Combination unrank_bounded_combination(const BigInt& r, int n, int k_max);

// Myrvold-Ruskey residual order.
BigInt rank_permutation_mr(const Permutation& p);
Permutation unrank_permutation_mr(const BigInt& r, int n);

// Lehmer-code rank: lexicographic order, identity maps to 0.
BigInt rank_permutation_lehmer(const Permutation& p);
Permutation unrank_permutation_lehmer(const BigInt& r, int n);

// Dyck path rank by cumulative ballot-number counting; the all-East-first
// staircase gets rank 0.
BigInt rank_dyck(const DyckPath& p);
DyckPath unrank_dyck(const BigInt& r, int n);

// Mixed-radix word rank, most significant letter first.
BigInt rank_word(const Word& w);
Word unrank_word(const BigInt& r, int alphabet, int length);

// Indicator-bitstring encoding of combinations: bits[j] = 1 iff j selected.
Combination bits_to_combination(const std::vector<bool>& bits);
std::vector<bool> combination_to_bits(const Combination& c);

// ---------------------------------------------------------------------------
// DomainCodec: a family bound to its parameters, with cached count tables
// ---------------------------------------------------------------------------

enum class Family {
    Combinations,
    BoundedCombinations,
    PermutationsLehmer,
    PermutationsMR,
    Dyck,
    Words,
};

// Immutable after construction; rank/unrank are pure and thread-safe.
class DomainCodec {
public:
    static DomainCodec combinations(int n, int k);
    static DomainCodec bounded_combinations(int n, int k_max);
    // Arbitrary allowed sizes, e.g. {0,1,3,4} = subsets without exactly 2 elements.
    static DomainCodec bounded_combinations(int n, std::vector<int> orders);
    static DomainCodec permutations_lehmer(int n);
    static DomainCodec permutations_mr(int n);
    static DomainCodec dyck(int n);
    static DomainCodec words(int alphabet, int length);

    Family family() const { return family_; }
    const BigInt& size() const { return size_; }

    BigInt rank(const DomainObject& x) const;
    DomainObject unrank(const BigInt& r) const;

    // Human-readable forms, e.g. "{0,2,5}", "(2 0 1)", "EENN", "0121".
    std::string object_string(const DomainObject& x) const;
    DomainObject parse_object(const std::string& text) const;
    std::string describe() const;

    // Computational-basis encoding used by the object-space embedding.
    // Bit j of the basis index is x_j for combinations; other families use
    // the natural block encodings.
    int bit_width() const;
    bool valid_bits(std::uint64_t basis) const;
    std::uint64_t object_bits(const DomainObject& x) const;
    DomainObject object_from_bits(std::uint64_t basis) const;

    // Parameters (meaning depends on family).
    int n() const { return n_; }
    int k() const { return k_; }
    int alphabet() const { return alphabet_; }
    int length() const { return length_; }
    const std::vector<int>& orders() const { return orders_; }

private:
    DomainCodec() = default;

    Family family_ = Family::Combinations;
    int n_ = 0;
    int k_ = 0;
    int alphabet_ = 0;
    int length_ = 0;
    std::vector<int> orders_;            // bounded combinations only
    std::vector<BigInt> order_offsets_;  // prefix sums of C(n, orders[i])
    BigInt size_ = 0;
    std::shared_ptr<const BinomialTable> binomials_;
    std::shared_ptr<const BallotTable> ballots_;
    std::vector<BigInt> factorials_;
};

// Exact object count for a family/parameter set (binomial, ranged binomial
// sum, factorial, Catalan, or A^L).
BigInt domain_size(const DomainCodec& codec);

} // namespace qwoa
