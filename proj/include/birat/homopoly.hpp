#ifndef BIRAT_HOMOPOLY_HPP
#define BIRAT_HOMOPOLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "birat/errors.hpp"
#include "birat/rational.hpp"

namespace birat {

// Exponent vector of length k+1; entries sum to the polynomial degree.
using Expo = std::vector<int>;

// Graded lexicographic order, z0 most significant.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b; // lex, z0 first
    }
};

// Complex number with exact rational real/imaginary parts, for exact
// evaluation at rational projective points.
struct RatComplex {
    Rational re{0}, im{0};
    RatComplex() = default;
    RatComplex(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
    bool is_zero() const { return re == Rational(0) && im == Rational(0); }
    RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
    RatComplex operator*(const RatComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RatComplex operator*(const Rational& c) const { return {re * c, im * c}; }
};

// Homogeneous polynomial in k+1 variables over Q. Zero polynomials keep an
// explicit degree tag so composition bookkeeping stays well-defined.
class HomoPoly {
public:
    using TermMap = std::map<Expo, Rational, GrlexLess>;

    HomoPoly() : ambient_(1), degree_(0) {}

    static HomoPoly zero(int ambient, int degree);
    static HomoPoly constant(int ambient, const Rational& c);
    static HomoPoly monomial(int ambient, const Expo& e, const Rational& c);
    static HomoPoly variable(int ambient, int index);
    // Build from a term list (validates homogeneity).
    static HomoPoly from_terms(int ambient, int degree, const TermMap& terms);

    int ambient() const { return ambient_; }
    int nvars() const { return ambient_ + 1; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree_ == 0 || terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Expo& e) const;
    // Leading term under graded-lex; polynomial must be nonzero.
    std::pair<Expo, Rational> leading() const;

    HomoPoly operator-() const;
    HomoPoly operator+(const HomoPoly& o) const;
    HomoPoly operator-(const HomoPoly& o) const;
    HomoPoly operator*(const HomoPoly& o) const;
    HomoPoly scaled(const Rational& c) const;
    // Leading coefficient normalized to 1.
    HomoPoly monic() const;

    // Formal partial derivative in variable `index`; degree drops by one.
    HomoPoly partial(int index) const;

    // Float evaluation: terms summed in graded-lex order with compensated
    // (Neumaier) summation to stabilize near-cancellation.
    std::complex<double> eval(std::span<const std::complex<double>> z) const;
    // Exact evaluation at rational complex coordinates.
    RatComplex eval_exact(std::span<const RatComplex> z) const;

    bool operator==(const HomoPoly& o) const;
    bool operator!=(const HomoPoly& o) const { return !(*this == o); }

    std::string str() const; // human-readable, for diagnostics

private:
    int ambient_;
    int degree_;
    TermMap terms_;

    void insert_term(const Expo& e, const Rational& c);
    friend HomoPoly poly_mul_budget(const HomoPoly&, const HomoPoly&, std::size_t);
};

// Product with a term-count budget (0 = unlimited); throws resource_error.
HomoPoly poly_mul_budget(const HomoPoly& a, const HomoPoly& b, std::size_t budget);

// Exact quotient a/b when b divides a; nullopt otherwise.
std::optional<HomoPoly> divide_exact(const HomoPoly& a, const HomoPoly& b);

// GCD over Q, normalized monic under graded-lex. Inputs must share ambient
// and must not both be zero.
HomoPoly poly_gcd(const HomoPoly& a, const HomoPoly& b);

// Substitute args[i] for variable i. All args share an ambient and a degree.
HomoPoly poly_compose(const HomoPoly& p, const std::vector<HomoPoly>& args,
                      std::size_t term_budget = 0);

} // namespace birat

#endif
