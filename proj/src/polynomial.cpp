#include "permsand/polynomial.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace permsand {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// One term of a polynomial rendered in text, e.g. "3x^2", "x", "7".
std::string format_term(long long coeff, const std::string& vars) {
    const long long a = std::llabs(coeff);
    if (vars.empty()) return std::to_string(a);
    if (a == 1) return vars;
    return std::to_string(a) + vars;
}

std::string var_power(std::string_view var, int deg) {
    if (deg == 0) return "";
    if (deg == 1) return std::string(var);
    return std::string(var) + "^" + std::to_string(deg);
}

std::string join_terms(const std::vector<std::pair<long long, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [coeff, vars] = terms[i];
        if (i == 0) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += format_term(coeff, vars);
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int deg, long long coeff) {
    if (deg < 0) throw std::invalid_argument("negative degree");
    std::vector<long long> c(deg + 1, 0);
    c[deg] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

long long Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

long long Polynomial::sum_coeffs() const {
    long long s = 0;
    for (long long v : c_) s += v;
    return s;
}

long long Polynomial::eval(long long x) const {
    long long r = 0;
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(std::string_view var) const {
    std::vector<std::pair<long long, std::string>> terms;
    for (int k = 0; k <= degree(); ++k)
        if (c_[k] != 0) terms.emplace_back(c_[k], var_power(var, k));
    return join_terms(terms);
}

BivariatePolynomial BivariatePolynomial::constant(long long c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int xdeg, int ydeg, long long coeff) {
    if (xdeg < 0 || ydeg < 0) throw std::invalid_argument("negative degree");
    BivariatePolynomial p;
    p.add_term(xdeg, ydeg, coeff);
    return p;
}

long long BivariatePolynomial::coeff(int xdeg, int ydeg) const {
    const auto it = terms_.find({xdeg, ydeg});
    return it == terms_.end() ? 0 : it->second;
}

std::vector<std::tuple<int, int, long long>> BivariatePolynomial::sorted_terms() const {
    std::vector<std::tuple<int, int, long long>> out;
    for (const auto& [key, c] : terms_) out.emplace_back(key.first, key.second, c);
    return out;
}

void BivariatePolynomial::add_term(int xdeg, int ydeg, long long coeff) {
    if (coeff == 0) return;
    const Key k{xdeg, ydeg};
    const auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

long long BivariatePolynomial::eval(long long x, long long y) const {
    long long r = 0;
    for (const auto& [key, c] : terms_) r += c * ipow(x, key.first) * ipow(y, key.second);
    return r;
}

Polynomial BivariatePolynomial::substitute_x(long long x) const {
    std::vector<long long> c;
    for (const auto& [key, coeff] : terms_) {
        if (key.second >= static_cast<int>(c.size())) c.resize(key.second + 1, 0);
        c[key.second] += coeff * ipow(x, key.first);
    }
    return Polynomial(std::move(c));
}

std::string BivariatePolynomial::to_string() const {
    // Display with high x-degrees first, e.g. "x^2 + x + y".
    std::vector<std::pair<long long, std::string>> terms;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        terms.emplace_back(it->second, var_power("x", it->first.first) +
                                           var_power("y", it->first.second));
    return join_terms(terms);
}

}  // namespace permsand
