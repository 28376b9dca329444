#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace permsand {

// Dense univariate polynomial with exact 64-bit integer coefficients,
// stored lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<long long> coeffs);
    static Polynomial monomial(int deg, long long coeff = 1);

    int degree() const;  // -1 for the zero polynomial
    long long coeff(int k) const;
    const std::vector<long long>& coeffs() const { return c_; }
    long long sum_coeffs() const;
    long long eval(long long x) const;

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial&) const = default;

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<long long> c_;
};

// Sparse bivariate polynomial with exact integer coefficients; zero
// coefficients are never stored.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    BivariatePolynomial() = default;
    static BivariatePolynomial constant(long long c);
    static BivariatePolynomial monomial(int xdeg, int ydeg, long long coeff = 1);

    long long coeff(int xdeg, int ydeg) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, long long>& terms() const { return terms_; }
    std::vector<std::tuple<int, int, long long>> sorted_terms() const;

    void add_term(int xdeg, int ydeg, long long coeff);
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    bool operator==(const BivariatePolynomial&) const = default;

    long long eval(long long x, long long y) const;
    // Substitute a numeric value for x; the result is a polynomial in y.
    Polynomial substitute_x(long long x) const;

    std::string to_string() const;

private:
    std::map<Key, long long> terms_;
};

}  // namespace permsand
