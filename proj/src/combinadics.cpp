#include "qwoa/combinadics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace qwoa {

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void validate(const Combination& c) {
    if (c.n < 0) throw ValidationError("combination: universe size must be >= 0");
    if (c.k() > c.n) throw ValidationError("combination: more elements than universe size");
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        int e = c.elements[i];
        if (e < 0 || e >= c.n)
            throw ValidationError("combination: element out of range [0, n)");
        if (i > 0 && c.elements[i - 1] >= e)
            throw ValidationError("combination: elements must be strictly ascending");
    }
}

void validate(const Permutation& p) {
    int n = p.n();
    if (n < 1) throw ValidationError("permutation: length must be >= 1");
    std::vector<bool> seen(n, false);
    for (int v : p.mapping) {
        if (v < 0 || v >= n) throw ValidationError("permutation: value out of range [0, n)");
        if (seen[v]) throw ValidationError("permutation: value repeated, not a bijection");
        seen[v] = true;
    }
}

void validate(const DyckPath& p) {
    if (p.steps.size() % 2 != 0)
        throw ValidationError("dyck path: step count must be even");
    int east = 0, north = 0;
    for (Step s : p.steps) {
        if (s == Step::East) ++east; else ++north;
        if (north > east)
            throw ValidationError("dyck path: prefix rises above the diagonal");
    }
    if (east != north)
        throw ValidationError("dyck path: must end on the diagonal");
}

void validate(const Word& w) {
    if (w.alphabet < 1) throw ValidationError("word: alphabet must be >= 1");
    for (int l : w.letters)
        if (l < 0 || l >= w.alphabet)
            throw ValidationError("word: letter out of range [0, A)");
}

// ---------------------------------------------------------------------------
// Counting tables
// ---------------------------------------------------------------------------

const BigInt BinomialTable::zero_ = 0;
const BigInt BallotTable::zero_ = 0;

BinomialTable::BinomialTable(int max_n) {
    if (max_n < 0) throw ParameterError("binomial table: max_n must be >= 0");
    rows_.resize(max_n + 1);
    for (int i = 0; i <= max_n; ++i) {
        rows_[i].resize(i + 1);
        rows_[i][0] = 1;
        rows_[i][i] = 1;
        for (int j = 1; j < i; ++j)
            rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
    }
}

const BigInt& BinomialTable::at(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (n >= static_cast<int>(rows_.size()))
        throw RangeError("binomial table: n exceeds table size");
    return rows_[n][k];
}

BigInt binomial(int n, int k) {
    if (n < 0) throw ParameterError("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw ParameterError("factorial: n must be >= 0");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

// N(i,j) = N(i-1,j) + N(i,j-1), N(i,j) = 0 for j > i, N(0,0) = 1.
BallotTable::BallotTable(int max_i) {
    if (max_i < 0) throw ParameterError("ballot table: max_i must be >= 0");
    rows_.resize(max_i + 1);
    for (int i = 0; i <= max_i; ++i) {
        rows_[i].resize(i + 1);
        for (int j = 0; j <= i; ++j) {
            if (i == 0 && j == 0) { rows_[i][j] = 1; continue; }
            BigInt v = 0;
            if (i > 0) v += at(i - 1, j);
            if (j > 0) v += rows_[i][j - 1];
            rows_[i][j] = v;
        }
    }
}

const BigInt& BallotTable::at(int i, int j) const {
    if (i < 0 || j < 0 || j > i) return zero_;
    if (i >= static_cast<int>(rows_.size()))
        throw RangeError("ballot table: i exceeds table size");
    return rows_[i][j];
}

BigInt num_dyck(int i, int j) {
    if (i < 0 || j < 0) throw ParameterError("num_dyck: coordinates must be >= 0");
    if (j > i) return 0;
    return BallotTable(i).at(i, j);
}

BigInt catalan(int n) {
    if (n < 0) throw ParameterError("catalan: n must be >= 0");
    return BallotTable(n).at(n, n);
}

// ---------------------------------------------------------------------------
// Combinations (colexicographic)
// ---------------------------------------------------------------------------

namespace {

BigInt rank_combination_impl(const Combination& c, const BinomialTable& binom) {
    BigInt r = 0;
    for (int j = 1; j <= c.k(); ++j)
        r += binom.at(c.elements[j - 1], j);
    return r;
}

Combination unrank_combination_impl(BigInt r, int n, int k, const BinomialTable& binom) {
    Combination c;
    c.n = n;
    c.elements.resize(k);
    int limit = n - 1;
    for (int j = k; j >= 1; --j) {
        int e = limit;
        while (binom.at(e, j) > r) --e;
        c.elements[j - 1] = e;
        r -= binom.at(e, j);
        limit = e - 1;
    }
    return c;
}

} // namespace

BigInt rank_combination(const Combination& c) {
    validate(c);
    return rank_combination_impl(c, BinomialTable(c.n));
}

Combination unrank_combination(const BigInt& r, int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw ParameterError("unrank_combination: need 0 <= k <= n");
    BinomialTable binom(n);
    if (r < 0 || r >= binom.at(n, k))
        throw RangeError("unrank_combination: rank outside [0, C(n,k))");
    return unrank_combination_impl(r, n, k, binom);
}

namespace {

void check_orders(const std::vector<int>& orders, int n) {
    if (orders.empty())
        throw ParameterError("bounded combinations: at least one allowed size required");
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0 || orders[i] > n)
            throw ParameterError("bounded combinations: allowed size outside [0, n]");
        if (i > 0 && orders[i - 1] >= orders[i])
            throw ParameterError("bounded combinations: sizes must be strictly ascending");
    }
}

std::vector<int> contiguous_orders(int k_max) {
    if (k_max < 0) throw ParameterError("bounded combinations: K must be >= 0");
    std::vector<int> orders(k_max + 1);
    for (int k = 0; k <= k_max; ++k) orders[k] = k;
    return orders;
}

} // namespace

BigInt rank_combination_orders(const Combination& c, const std::vector<int>& orders) {
    validate(c);
    check_orders(orders, c.n);
    BinomialTable binom(c.n);
    BigInt offset = 0;
    for (int o : orders) {
        if (o == c.k()) return offset + rank_combination_impl(c, binom);
        offset += binom.at(c.n, o);
    }
    throw ValidationError("bounded combinations: object size not amongst allowed sizes");
}

Combination unrank_combination_orders(const BigInt& r, int n, const std::vector<int>& orders) {
    check_orders(orders, n);
    if (r < 0) throw RangeError("unrank: rank must be >= 0");
    BinomialTable binom(n);
    BigInt rest = r;
    for (int o : orders) {
        const BigInt& block = binom.at(n, o);
        if (rest < block) return unrank_combination_impl(rest, n, o, binom);
        rest -= block;
    }
    throw RangeError("unrank: rank outside [0, M)");
}

BigInt rank_bounded_combination(const Combination& c, int k_max) {
    if (c.k() > k_max)
        throw ValidationError("bounded combinations: object larger than bound K");
    return rank_combination_orders(c, contiguous_orders(k_max));
}

Combination unrank_bounded_combination(const BigInt& r, int n, int k_max) {
    return unrank_combination_orders(r, n, contiguous_orders(std::min(k_max, n)));
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

BigInt rank_permutation_mr(const Permutation& p) {
    validate(p);
    int n = p.n();
    std::vector<int> pi = p.mapping;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[pi[i]] = i;

    // Iterative unrolling of the tail recursion s + m * INDEX_PERM(m - 1).
    BigInt rank = 0, place = 1;
    for (int m = n; m >= 2; --m) {
        int s = pi[m - 1];
        std::swap(pi[m - 1], pi[inv[m - 1]]);
        std::swap(inv[s], inv[m - 1]);
        rank += place * s;
        place *= m;
    }
    return rank;
}

Permutation unrank_permutation_mr(const BigInt& r, int n) {
    if (n < 1) throw ParameterError("unrank_permutation: n must be >= 1");
    if (r < 0 || r >= factorial(n))
        throw RangeError("unrank_permutation: rank outside [0, n!)");
    Permutation p;
    p.mapping.resize(n);
    for (int i = 0; i < n; ++i) p.mapping[i] = i;
    BigInt rest = r;
    for (int m = n; m >= 2; --m) {
        int s = static_cast<int>(rest % m);
        std::swap(p.mapping[m - 1], p.mapping[s]);
        rest /= m;
    }
    return p;
}

namespace {

// d_i = |{j > i : pi_j < pi_i}|
std::vector<int> lehmer_digits(const std::vector<int>& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pi[j] < pi[i]) ++d[i];
    return d;
}

} // namespace

BigInt rank_permutation_lehmer(const Permutation& p) {
    validate(p);
    int n = p.n();
    std::vector<int> d = lehmer_digits(p.mapping);
    // Nested Horner evaluation; equals sum of d_i * (n-1-i)!.
    BigInt acc = 0;
    for (int i = 0; i + 1 < n; ++i)
        acc = (acc + d[i]) * (n - 1 - i);
    return acc;
}

Permutation unrank_permutation_lehmer(const BigInt& r, int n) {
    if (n < 1) throw ParameterError("unrank_permutation: n must be >= 1");
    if (r < 0 || r >= factorial(n))
        throw RangeError("unrank_permutation: rank outside [0, n!)");
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    Permutation p;
    p.mapping.reserve(n);
    BigInt rest = r;
    for (int i = 0; i < n; ++i) {
        BigInt f = factorial(n - 1 - i);
        int d = static_cast<int>(rest / f);
        rest %= f;
        p.mapping.push_back(avail[d]);
        avail.erase(avail.begin() + d);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Dyck paths
// ---------------------------------------------------------------------------

namespace {

// Valid completions from (x, y) to (n, n) staying at or below the diagonal.
const BigInt& dyck_completions(const BallotTable& ballots, int n, int x, int y) {
    return ballots.at(n - y, n - x);
}

} // namespace

BigInt rank_dyck(const DyckPath& p) {
    validate(p);
    int n = p.n();
    BallotTable ballots(n);
    BigInt r = 0;
    int x = 0, y = 0;
    for (Step s : p.steps) {
        if (s == Step::North) {
            // Paths taking the (smaller) East step here precede this one.
            if (x < n) r += dyck_completions(ballots, n, x + 1, y);
            ++y;
        } else {
            ++x;
        }
    }
    return r;
}

DyckPath unrank_dyck(const BigInt& r, int n) {
    if (n < 1) throw ParameterError("unrank_dyck: n must be >= 1");
    BallotTable ballots(n);
    if (r < 0 || r >= ballots.at(n, n))
        throw RangeError("unrank_dyck: rank outside [0, Catalan(n))");
    DyckPath p;
    p.steps.reserve(2 * n);
    BigInt rest = r;
    int x = 0, y = 0;
    while (x < n || y < n) {
        if (x < n) {
            const BigInt& east = dyck_completions(ballots, n, x + 1, y);
            if (rest < east) {
                p.steps.push_back(Step::East);
                ++x;
                continue;
            }
            rest -= east;
        }
        p.steps.push_back(Step::North);
        ++y;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

BigInt rank_word(const Word& w) {
    validate(w);
    BigInt r = 0;
    for (int l : w.letters)
        r = r * w.alphabet + l;
    return r;
}

Word unrank_word(const BigInt& r, int alphabet, int length) {
    if (alphabet < 1) throw ParameterError("unrank_word: alphabet must be >= 1");
    if (length < 0) throw ParameterError("unrank_word: length must be >= 0");
    BigInt m = 1;
    for (int i = 0; i < length; ++i) m *= alphabet;
    if (r < 0 || r >= m)
        throw RangeError("unrank_word: rank outside [0, A^L)");
    Word w;
    w.alphabet = alphabet;
    w.letters.resize(length);
    BigInt rest = r;
    for (int i = length - 1; i >= 0; --i) {
        w.letters[i] = static_cast<int>(rest % alphabet);
        rest /= alphabet;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Bitstring encoding of combinations
// ---------------------------------------------------------------------------

Combination bits_to_combination(const std::vector<bool>& bits) {
    Combination c;
    c.n = static_cast<int>(bits.size());
    for (int j = 0; j < c.n; ++j)
        if (bits[j]) c.elements.push_back(j);
    return c;
}

std::vector<bool> combination_to_bits(const Combination& c) {
    validate(c);
    std::vector<bool> bits(c.n, false);
    for (int e : c.elements) bits[e] = true;
    return bits;
}

// ---------------------------------------------------------------------------
// DomainCodec
// ---------------------------------------------------------------------------

namespace {

int ceil_log2(int v) {
    int b = 0;
    while ((1LL << b) < v) ++b;
    return b;
}

} // namespace

DomainCodec DomainCodec::combinations(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw ParameterError("combinations codec: need 0 <= k <= n");
    DomainCodec c;
    c.family_ = Family::Combinations;
    c.n_ = n;
    c.k_ = k;
    c.binomials_ = std::make_shared<BinomialTable>(n);
    c.size_ = c.binomials_->at(n, k);
    return c;
}

DomainCodec DomainCodec::bounded_combinations(int n, int k_max) {
    return bounded_combinations(n, contiguous_orders(std::min(k_max, n)));
}

DomainCodec DomainCodec::bounded_combinations(int n, std::vector<int> orders) {
    if (n < 0) throw ParameterError("bounded combinations codec: n must be >= 0");
    check_orders(orders, n);
    DomainCodec c;
    c.family_ = Family::BoundedCombinations;
    c.n_ = n;
    c.orders_ = std::move(orders);
    c.binomials_ = std::make_shared<BinomialTable>(n);
    BigInt total = 0;
    for (int o : c.orders_) {
        c.order_offsets_.push_back(total);
        total += c.binomials_->at(n, o);
    }
    c.size_ = total;
    return c;
}

DomainCodec DomainCodec::permutations_lehmer(int n) {
    if (n < 1) throw ParameterError("permutations codec: n must be >= 1");
    DomainCodec c;
    c.family_ = Family::PermutationsLehmer;
    c.n_ = n;
    c.factorials_.resize(n + 1);
    c.factorials_[0] = 1;
    for (int i = 1; i <= n; ++i) c.factorials_[i] = c.factorials_[i - 1] * i;
    c.size_ = c.factorials_[n];
    return c;
}

DomainCodec DomainCodec::permutations_mr(int n) {
    DomainCodec c = permutations_lehmer(n);
    c.family_ = Family::PermutationsMR;
    return c;
}

DomainCodec DomainCodec::dyck(int n) {
    if (n < 1) throw ParameterError("dyck codec: n must be >= 1");
    DomainCodec c;
    c.family_ = Family::Dyck;
    c.n_ = n;
    c.ballots_ = std::make_shared<BallotTable>(n);
    c.size_ = c.ballots_->at(n, n);
    return c;
}

DomainCodec DomainCodec::words(int alphabet, int length) {
    if (alphabet < 1) throw ParameterError("words codec: alphabet must be >= 1");
    if (length < 1) throw ParameterError("words codec: length must be >= 1");
    DomainCodec c;
    c.family_ = Family::Words;
    c.alphabet_ = alphabet;
    c.length_ = length;
    BigInt m = 1;
    for (int i = 0; i < length; ++i) m *= alphabet;
    c.size_ = m;
    return c;
}

namespace {

template <typename T>
const T& expect(const DomainObject& x, const char* what) {
    const T* p = std::get_if<T>(&x);
    if (!p) throw ValidationError(std::string("codec: expected ") + what);
    return *p;
}

} // namespace

BigInt DomainCodec::rank(const DomainObject& x) const {
    switch (family_) {
    case Family::Combinations: {
        const auto& c = expect<Combination>(x, "a combination");
        validate(c);
        if (c.n != n_ || c.k() != k_)
            throw ValidationError("codec: combination parameters do not match codec");
        return rank_combination_impl(c, *binomials_);
    }
    case Family::BoundedCombinations: {
        const auto& c = expect<Combination>(x, "a combination");
        validate(c);
        if (c.n != n_)
            throw ValidationError("codec: combination universe does not match codec");
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (orders_[i] == c.k())
                return order_offsets_[i] + rank_combination_impl(c, *binomials_);
        throw ValidationError("codec: combination size not amongst allowed sizes");
    }
    case Family::PermutationsLehmer: {
        const auto& p = expect<Permutation>(x, "a permutation");
        if (p.n() != n_) throw ValidationError("codec: permutation length does not match codec");
        return rank_permutation_lehmer(p);
    }
    case Family::PermutationsMR: {
        const auto& p = expect<Permutation>(x, "a permutation");
        if (p.n() != n_) throw ValidationError("codec: permutation length does not match codec");
        return rank_permutation_mr(p);
    }
    case Family::Dyck: {
        const auto& p = expect<DyckPath>(x, "a dyck path");
        if (p.n() != n_) throw ValidationError("codec: path length does not match codec");
        return rank_dyck(p);
    }
    case Family::Words: {
        const auto& w = expect<Word>(x, "a word");
        if (w.alphabet != alphabet_ || w.length() != length_)
            throw ValidationError("codec: word parameters do not match codec");
        return rank_word(w);
    }
    }
    throw ParameterError("codec: unknown family");
}

DomainObject DomainCodec::unrank(const BigInt& r) const {
    if (r < 0 || r >= size_)
        throw RangeError("codec: rank outside [0, M)");
    switch (family_) {
    case Family::Combinations:
        return unrank_combination_impl(r, n_, k_, *binomials_);
    case Family::BoundedCombinations: {
        BigInt rest = r;
        for (int o : orders_) {
            const BigInt& block = binomials_->at(n_, o);
            if (rest < block) return unrank_combination_impl(rest, n_, o, *binomials_);
            rest -= block;
        }
        throw RangeError("codec: rank outside [0, M)");
    }
    case Family::PermutationsLehmer:
        return unrank_permutation_lehmer(r, n_);
    case Family::PermutationsMR:
        return unrank_permutation_mr(r, n_);
    case Family::Dyck:
        return unrank_dyck(r, n_);
    case Family::Words:
        return unrank_word(r, alphabet_, length_);
    }
    throw ParameterError("codec: unknown family");
}

std::string DomainCodec::object_string(const DomainObject& x) const {
    std::ostringstream out;
    if (const auto* c = std::get_if<Combination>(&x)) {
        out << '{';
        for (std::size_t i = 0; i < c->elements.size(); ++i) {
            if (i) out << ' ';
            out << c->elements[i];
        }
        out << '}';
    } else if (const auto* p = std::get_if<Permutation>(&x)) {
        out << '(';
        for (std::size_t i = 0; i < p->mapping.size(); ++i) {
            if (i) out << ' ';
            out << p->mapping[i];
        }
        out << ')';
    } else if (const auto* d = std::get_if<DyckPath>(&x)) {
        for (Step s : d->steps) out << (s == Step::East ? 'E' : 'N');
    } else if (const auto* w = std::get_if<Word>(&x)) {
        if (w->alphabet <= 10) {
            for (int l : w->letters) out << l;
        } else {
            for (std::size_t i = 0; i < w->letters.size(); ++i) {
                if (i) out << '.';
                out << w->letters[i];
            }
        }
    }
    return out.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            values.push_back(std::stoi(token));
            token.clear();
        }
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
            token.push_back(ch);
        } else if (ch == ',' || ch == ' ' || ch == '{' || ch == '}' || ch == '(' ||
                   ch == ')' || ch == '[' || ch == ']' || ch == '.') {
            flush();
        } else {
            throw ValidationError(std::string("cannot parse object text: '") + text + "'");
        }
    }
    flush();
    return values;
}

} // namespace

DomainObject DomainCodec::parse_object(const std::string& text) const {
    switch (family_) {
    case Family::Combinations:
    case Family::BoundedCombinations: {
        Combination c;
        c.n = n_;
        c.elements = parse_int_list(text);
        return c;
    }
    case Family::PermutationsLehmer:
    case Family::PermutationsMR: {
        Permutation p;
        p.mapping = parse_int_list(text);
        return p;
    }
    case Family::Dyck: {
        DyckPath p;
        for (char ch : text) {
            if (ch == 'E' || ch == 'e') p.steps.push_back(Step::East);
            else if (ch == 'N' || ch == 'n') p.steps.push_back(Step::North);
            else if (ch == ' ' || ch == ',') continue;
            else throw ValidationError("dyck path text must use letters E and N");
        }
        return p;
    }
    case Family::Words: {
        Word w;
        w.alphabet = alphabet_;
        if (alphabet_ <= 10 && text.find_first_of(",. ") == std::string::npos) {
            for (char ch : text) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ValidationError("word text must be digits");
                w.letters.push_back(ch - '0');
            }
        } else {
            w.letters = parse_int_list(text);
        }
        return w;
    }
    }
    throw ParameterError("codec: unknown family");
}

std::string DomainCodec::describe() const {
    std::ostringstream out;
    switch (family_) {
    case Family::Combinations:
        out << "combinations(n=" << n_ << ", k=" << k_ << ")"; break;
    case Family::BoundedCombinations: {
        out << "bounded-combinations(n=" << n_ << ", orders=";
        for (std::size_t i = 0; i < orders_.size(); ++i)
            out << (i ? "," : "") << orders_[i];
        out << ")";
        break;
    }
    case Family::PermutationsLehmer:
        out << "permutations-lehmer(n=" << n_ << ")"; break;
    case Family::PermutationsMR:
        out << "permutations-mr(n=" << n_ << ")"; break;
    case Family::Dyck:
        out << "dyck(n=" << n_ << ")"; break;
    case Family::Words:
        out << "words(A=" << alphabet_ << ", L=" << length_ << ")"; break;
    }
    return out.str();
}

int DomainCodec::bit_width() const {
    switch (family_) {
    case Family::Combinations:
    case Family::BoundedCombinations:
        return n_;
    case Family::PermutationsLehmer:
    case Family::PermutationsMR:
        return n_ * ceil_log2(n_);
    case Family::Dyck:
        return 2 * n_;
    case Family::Words:
        return length_ * ceil_log2(alphabet_);
    }
    throw ParameterError("codec: unknown family");
}

namespace {

void check_bit_capacity(int width) {
    if (width > 63)
        throw CapacityError("codec: object bit encoding exceeds 63 bits");
}

} // namespace

bool DomainCodec::valid_bits(std::uint64_t basis) const {
    int width = bit_width();
    check_bit_capacity(width);
    if (width < 64 && (basis >> width) != 0) return false;
    switch (family_) {
    case Family::Combinations:
        return std::popcount(basis) == k_;
    case Family::BoundedCombinations: {
        int pc = std::popcount(basis);
        return std::find(orders_.begin(), orders_.end(), pc) != orders_.end();
    }
    case Family::PermutationsLehmer:
    case Family::PermutationsMR: {
        int b = ceil_log2(n_);
        std::vector<bool> seen(n_, false);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t block = b == 0 ? 0 : (basis >> (i * b)) & ((1ULL << b) - 1);
            if (block >= static_cast<std::uint64_t>(n_)) return false;
            if (seen[block]) return false;
            seen[block] = true;
        }
        return true;
    }
    case Family::Dyck: {
        int east = 0, north = 0;
        for (int j = 0; j < 2 * n_; ++j) {
            if ((basis >> j) & 1ULL) ++north; else ++east;
            if (north > east) return false;
        }
        return east == north;
    }
    case Family::Words: {
        // MSB-first blocks: for a power-of-two alphabet the encoding equals
        // the rank, making the codec the identity on basis states.
        int b = ceil_log2(alphabet_);
        for (int i = 0; i < length_; ++i) {
            std::uint64_t block =
                b == 0 ? 0 : (basis >> ((length_ - 1 - i) * b)) & ((1ULL << b) - 1);
            if (block >= static_cast<std::uint64_t>(alphabet_)) return false;
        }
        return true;
    }
    }
    return false;
}

std::uint64_t DomainCodec::object_bits(const DomainObject& x) const {
    check_bit_capacity(bit_width());
    switch (family_) {
    case Family::Combinations:
    case Family::BoundedCombinations: {
        const auto& c = expect<Combination>(x, "a combination");
        std::uint64_t basis = 0;
        for (int e : c.elements) basis |= 1ULL << e;
        return basis;
    }
    case Family::PermutationsLehmer:
    case Family::PermutationsMR: {
        const auto& p = expect<Permutation>(x, "a permutation");
        int b = ceil_log2(n_);
        std::uint64_t basis = 0;
        for (int i = 0; i < n_; ++i)
            basis |= static_cast<std::uint64_t>(p.mapping[i]) << (i * b);
        return basis;
    }
    case Family::Dyck: {
        const auto& d = expect<DyckPath>(x, "a dyck path");
        std::uint64_t basis = 0;
        for (std::size_t j = 0; j < d.steps.size(); ++j)
            if (d.steps[j] == Step::North) basis |= 1ULL << j;
        return basis;
    }
    case Family::Words: {
        const auto& w = expect<Word>(x, "a word");
        int b = ceil_log2(alphabet_);
        std::uint64_t basis = 0;
        for (int i = 0; i < length_; ++i)
            basis |= static_cast<std::uint64_t>(w.letters[i]) << ((length_ - 1 - i) * b);
        return basis;
    }
    }
    throw ParameterError("codec: unknown family");
}

DomainObject DomainCodec::object_from_bits(std::uint64_t basis) const {
    if (!valid_bits(basis))
        throw ValidationError("codec: basis state does not encode a valid object");
    switch (family_) {
    case Family::Combinations:
    case Family::BoundedCombinations: {
        Combination c;
        c.n = n_;
        for (int j = 0; j < n_; ++j)
            if ((basis >> j) & 1ULL) c.elements.push_back(j);
        return c;
    }
    case Family::PermutationsLehmer:
    case Family::PermutationsMR: {
        int b = ceil_log2(n_);
        Permutation p;
        p.mapping.resize(n_);
        for (int i = 0; i < n_; ++i)
            p.mapping[i] = b == 0 ? 0 : static_cast<int>((basis >> (i * b)) & ((1ULL << b) - 1));
        return p;
    }
    case Family::Dyck: {
        DyckPath p;
        p.steps.resize(2 * n_);
        for (int j = 0; j < 2 * n_; ++j)
            p.steps[j] = ((basis >> j) & 1ULL) ? Step::North : Step::East;
        return p;
    }
    case Family::Words: {
        int b = ceil_log2(alphabet_);
        Word w;
        w.alphabet = alphabet_;
        w.letters.resize(length_);
        for (int i = 0; i < length_; ++i)
            w.letters[i] =
                b == 0 ? 0
                       : static_cast<int>((basis >> ((length_ - 1 - i) * b)) & ((1ULL << b) - 1));
        return w;
    }
    }
    throw ParameterError("codec: unknown family");
}

BigInt domain_size(const DomainCodec& codec) { return codec.size(); }

} // namespace qwoa
