#include "permsand/permutation.hpp"

#include <charconv>
#include <stdexcept>

namespace permsand {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    pos_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = word_[i];
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (pos_[v] != 0)
            throw std::invalid_argument("duplicate value " + std::to_string(v) +
                                        " in permutation");
        pos_[v] = i + 1;
    }
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty permutation");
    std::vector<int> word;
    if (text.find(',') == std::string_view::npos) {
        for (size_t i = 0; i < text.size(); ++i) {
            const char ch = text[i];
            if (ch < '1' || ch > '9')
                throw std::invalid_argument(
                    "position " + std::to_string(i + 1) + ": expected digit 1-9, got '" +
                    std::string(1, ch) + "' (use comma-separated form for n > 9)");
            word.push_back(ch - '0');
        }
    } else {
        size_t start = 0;
        int token_index = 1;
        while (start <= text.size()) {
            size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            const std::string_view tok = text.substr(start, end - start);
            int value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::invalid_argument("token " + std::to_string(token_index) + " ('" +
                                            std::string(tok) + "') is not an integer");
            word.push_back(value);
            ++token_index;
            start = end + 1;
            if (end == text.size()) break;
        }
    }
    return Permutation(std::move(word));
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse_permutation() const {
    std::vector<int> w(size());
    for (int v = 1; v <= size(); ++v) w[v - 1] = position_of(v);
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    const bool compact = size() <= 9;
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    const auto& w = p.word();
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) out.emplace_back(w[i], w[j]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_indecomposable(const Permutation& p) {
    const auto& w = p.word();
    int max_so_far = 0;
    for (int k = 1; k < p.size(); ++k) {
        max_so_far = std::max(max_so_far, w[k - 1]);
        if (max_so_far == k) return false;
    }
    return true;
}

int descent_count(const Permutation& p) {
    int d = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p.word()[i - 1] > p.word()[i]) ++d;
    return d;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
single_descent_decompose(const Permutation& p) {
    if (descent_count(p) != 1) return std::nullopt;
    const auto& w = p.word();
    int cut = 0;
    for (int i = 1; i < p.size(); ++i)
        if (w[i - 1] > w[i]) cut = i;
    std::vector<int> a1(w.begin(), w.begin() + cut);
    std::vector<int> a2(w.begin() + cut, w.end());
    return std::make_pair(std::move(a1), std::move(a2));
}

bool is_threshold(const Permutation& p) {
    const auto& w = p.word();
    size_t k = 0;
    while (k + 1 < w.size() && w[k] > w[k + 1]) ++k;
    for (size_t i = k + 1; i < w.size(); ++i)
        if (w[i - 1] >= w[i]) return false;
    return true;
}

std::vector<Permutation> all_indecomposable(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (is_indecomposable(p)) out.push_back(p);
    });
    return out;
}

}  // namespace permsand
