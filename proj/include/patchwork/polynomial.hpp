#pragma once

#include "patchwork/lattice.hpp"
#include "patchwork/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace patchwork {

/// Bivariate polynomial with exact rational coefficients; zero terms are never stored.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    SparsePolynomial(std::initializer_list<std::pair<const LatticePoint, BigRational>> terms);
    explicit SparsePolynomial(const std::map<LatticePoint, BigRational>& terms);

    /// Parses text such as "8x^3 - x^2 + 4y^2 + 1" or "3/2*x*y - y".
    static SparsePolynomial parse(std::string_view text);

    const std::map<LatticePoint, BigRational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    BigRational coefficient(LatticePoint w) const;
    void add_term(LatticePoint w, const BigRational& c);

    std::vector<LatticePoint> support() const;
    ConvexPolygon newton_polygon() const;
    std::int64_t degree() const;

    /// Terms whose exponents lie in the closed polygon (a face, side or cell).
    SparsePolynomial truncation(const ConvexPolygon& face) const;

    /// Divides out the largest monomial x^a y^b; returns (a, b).
    std::pair<SparsePolynomial, LatticePoint> strip_monomial() const;

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial& operator*=(const BigRational& s);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

    BigRational evaluate(const BigRational& x, const BigRational& y) const;
    double evaluate(double x, double y) const;

    std::string to_string() const;

private:
    std::map<LatticePoint, BigRational> terms_;
};

/// Homogeneous polynomial in (x0, x1, x2).
class HomogeneousPolynomial {
public:
    using Exponent = std::array<std::int64_t, 3>;

    HomogeneousPolynomial() = default;
    explicit HomogeneousPolynomial(std::int64_t degree) : degree_(degree) {}

    std::int64_t degree() const { return degree_; }
    const std::map<Exponent, BigRational>& terms() const { return terms_; }
    void add_term(Exponent e, const BigRational& c);
    std::string to_string() const;

    friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

private:
    std::int64_t degree_ = 0;
    std::map<Exponent, BigRational> terms_;
};

/// x0^m b(x1/x0, x2/x0).  Throws std::invalid_argument when deg b > m.
HomogeneousPolynomial homogenize(const SparsePolynomial& b, std::int64_t m);
/// Sets x0 = 1.
SparsePolynomial dehomogenize(const HomogeneousPolynomial& h);

/// Dense univariate polynomial, coefficient k multiplies s^k.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<BigRational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coefficients() const { return c_; }
    const BigRational& leading() const { return c_.back(); }

    BigRational operator()(const BigRational& s) const;
    UnivariatePolynomial derivative() const;
    /// p(-s)
    UnivariatePolynomial reflected() const;
    UnivariatePolynomial monic() const;

    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

    /// Quotient and remainder.
    std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& d) const;

private:
    void trim();
    std::vector<BigRational> c_;
};

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

/// Sturm sequence of p; counts distinct real roots in (a, b].
class SturmSequence {
public:
    explicit SturmSequence(const UnivariatePolynomial& p);
    int sign_changes(const BigRational& x) const;
    int count(const BigRational& a, const BigRational& b) const { return sign_changes(a) - sign_changes(b); }

private:
    std::vector<UnivariatePolynomial> seq_;
};

/// Isolating intervals (a, b] with exactly one distinct root each, for the
/// roots of p in (lo, hi], ordered increasingly.
std::vector<std::pair<BigRational, BigRational>> isolate_roots(const UnivariatePolynomial& p, const BigRational& lo,
                                                                const BigRational& hi);

/// Cauchy bound: every real root has absolute value below it.
BigRational root_bound(const UnivariatePolynomial& p);

}  // namespace patchwork
