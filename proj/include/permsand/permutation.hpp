#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permsand {

// A permutation of [n] = {1,...,n} in one-line notation. Throughout the
// library, graph vertices are identified with the VALUES 1..n of the
// permutation, never with positions.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    // Accepts compact digit form ("23541", only for n <= 9) or
    // comma-separated values ("10,2,7,..."). Throws std::invalid_argument
    // naming the offending position on bad input.
    static Permutation parse(std::string_view text);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    int value_at(int pos) const { return word_[pos - 1]; }    // pos in 1..n
    int position_of(int value) const { return pos_[value]; }  // value in 1..n
    const std::vector<int>& word() const { return word_; }

    Permutation inverse_permutation() const;

    std::string to_string() const;

    bool operator==(const Permutation& other) const { return word_ == other.word_; }
    bool operator<(const Permutation& other) const { return word_ < other.word_; }

private:
    std::vector<int> word_;
    std::vector<int> pos_;  // pos_[v] = 1-based position of value v; pos_[0] unused
};

// Unordered graph edge, normalized so that first < second.
using Edge = std::pair<int, int>;
Edge make_edge(int a, int b);

// All inversion pairs of p as (larger, smaller), sorted.
std::vector<std::pair<int, int>> inversions(const Permutation& p);

// True iff no proper prefix of the word is a permutation of an initial
// segment [k]; equivalent to connectivity of the inversion graph.
bool is_indecomposable(const Permutation& p);

int descent_count(const Permutation& p);

// For a word with exactly one descent, the values before the descent and
// the values after it (both ascending). Empty otherwise.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
single_descent_decompose(const Permutation& p);

// Strictly decreasing prefix (possibly trivial) followed by a strictly
// increasing suffix.
bool is_threshold(const Permutation& p);

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_indecomposable(int n);

}  // namespace permsand
