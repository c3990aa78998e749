#include "patchwork/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace patchwork {

SparsePolynomial::SparsePolynomial(std::initializer_list<std::pair<const LatticePoint, BigRational>> terms) {
    for (const auto& [w, c] : terms) add_term(w, c);
}

SparsePolynomial::SparsePolynomial(const std::map<LatticePoint, BigRational>& terms) {
    for (const auto& [w, c] : terms) add_term(w, c);
}

BigRational SparsePolynomial::coefficient(LatticePoint w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void SparsePolynomial::add_term(LatticePoint w, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<LatticePoint> SparsePolynomial::support() const {
    std::vector<LatticePoint> s;
    for (const auto& [w, c] : terms_) s.push_back(w);
    return s;
}

ConvexPolygon SparsePolynomial::newton_polygon() const { return patchwork::newton_polygon(support()); }

std::int64_t SparsePolynomial::degree() const {
    if (terms_.empty()) throw std::invalid_argument("empty polynomial");
    std::int64_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.i + w.j);
    return d;
}

SparsePolynomial SparsePolynomial::truncation(const ConvexPolygon& face) const {
    SparsePolynomial out;
    for (const auto& [w, c] : terms_) {
        if (face.contains(w)) out.terms_.emplace(w, c);
    }
    return out;
}

std::pair<SparsePolynomial, LatticePoint> SparsePolynomial::strip_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("empty polynomial");
    LatticePoint lo = terms_.begin()->first;
    for (const auto& [w, c] : terms_) lo = {std::min(lo.i, w.i), std::min(lo.j, w.j)};
    SparsePolynomial out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w - lo, c);
    return {out, lo};
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const BigRational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [w1, c1] : a.terms_) {
        for (const auto& [w2, c2] : b.terms_) out.add_term(w1 + w2, c1 * c2);
    }
    return out;
}

namespace {

BigRational power(const BigRational& x, std::int64_t k) {
    BigRational r = 1;
    BigRational base = x;
    bool invert = k < 0;
    auto e = static_cast<std::uint64_t>(invert ? -k : k);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return invert ? BigRational(1 / r) : r;
}

std::string monomial_text(LatticePoint w) {
    std::string s;
    if (w.i > 0) s += w.i == 1 ? "x" : "x^" + std::to_string(w.i);
    if (w.j > 0) s += w.j == 1 ? "y" : "y^" + std::to_string(w.j);
    return s;
}

std::string term_text(const BigRational& c, const std::string& mono, bool first) {
    std::string out;
    BigRational a = c < 0 ? BigRational(-c) : c;
    if (first) {
        out += c < 0 ? "-" : "";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) return out + patchwork::to_string(a);
    if (a == 1) return out + mono;
    std::string coef = patchwork::to_string(a);
    bool fraction = coef.find('/') != std::string::npos;
    return out + coef + (fraction ? "*" : "") + mono;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    SparsePolynomial run() {
        SparsePolynomial out;
        skip();
        if (pos_ == s_.size()) throw std::invalid_argument("empty polynomial text");
        bool first = true;
        while (pos_ < s_.size()) {
            BigRational sgn = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sgn = -1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            auto [w, c] = term();
            out.add_term(w, sgn * c);
            first = false;
            skip();
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse polynomial at position " + std::to_string(pos_) + ": " + what);
    }

    std::int64_t integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    std::pair<LatticePoint, BigRational> term() {
        LatticePoint w{0, 0};
        BigRational c = 1;
        bool any = false;
        while (true) {
            skip();
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (peek() == '/') {
                    ++pos_;
                    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                }
                c *= parse_big_rational(s_.substr(start, pos_ - start));
            } else if (ch == 'x' || ch == 'y') {
                ++pos_;
                skip();
                std::int64_t e = 1;
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    e = integer();
                }
                (ch == 'x' ? w.i : w.j) += e;
            } else {
                if (!any) fail("expected a term");
                break;
            }
            any = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            char nx = peek();
            if (!(nx == 'x' || nx == 'y' || std::isdigit(static_cast<unsigned char>(nx)))) break;
        }
        return {w, c};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(std::string_view text) { return Parser(text).run(); }

BigRational SparsePolynomial::evaluate(const BigRational& x, const BigRational& y) const {
    BigRational s = 0;
    for (const auto& [w, c] : terms_) s += c * power(x, w.i) * power(y, w.j);
    return s;
}

double SparsePolynomial::evaluate(double x, double y) const {
    double s = 0;
    for (const auto& [w, c] : terms_) {
        s += c.convert_to<double>() * std::pow(x, static_cast<double>(w.i)) * std::pow(y, static_cast<double>(w.j));
    }
    return s;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<LatticePoint, BigRational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        auto da = a.first.i + a.first.j, db = b.first.i + b.first.j;
        if (da != db) return da > db;
        return a.first.i > b.first.i;
    });
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        out += term_text(order[k].second, monomial_text(order[k].first), k == 0);
    }
    return out;
}

void HomogeneousPolynomial::add_term(Exponent e, const BigRational& c) {
    if (e[0] + e[1] + e[2] != degree_) throw std::invalid_argument("term degree differs from polynomial degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string HomogeneousPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, BigRational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            auto e = order[k].first[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            mono += "x" + std::to_string(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        out += term_text(order[k].second, mono, k == 0);
    }
    return out;
}

HomogeneousPolynomial homogenize(const SparsePolynomial& b, std::int64_t m) {
    if (!b.is_zero() && b.degree() > m) throw std::invalid_argument("degree exceeds homogenization degree");
    HomogeneousPolynomial h(m);
    for (const auto& [w, c] : b.terms()) {
        if (w.i < 0 || w.j < 0) throw std::invalid_argument("negative exponent");
        h.add_term({m - w.i - w.j, w.i, w.j}, c);
    }
    return h;
}

SparsePolynomial dehomogenize(const HomogeneousPolynomial& h) {
    SparsePolynomial out;
    for (const auto& [e, c] : h.terms()) out.add_term({e[1], e[2]}, c);
    return out;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational UnivariatePolynomial::operator()(const BigRational& s) const {
    BigRational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
    return r;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    std::vector<BigRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::reflected() const {
    std::vector<BigRational> d(c_);
    for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (c_.empty()) return *this;
    std::vector<BigRational> d(c_);
    BigRational lead = c_.back();
    for (auto& x : d) x /= lead;
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<BigRational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] -= b.c_[k];
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return UnivariatePolynomial(std::move(d));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<BigRational> r(c_);
    std::vector<BigRational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        BigRational f = r[k + d.c_.size() - 1] / d.c_.back();
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
    }
    return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

SturmSequence::SturmSequence(const UnivariatePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero()) {
        auto r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
        seq_.push_back(UnivariatePolynomial() - r);
    }
    seq_.pop_back();
}

int SturmSequence::sign_changes(const BigRational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : seq_) {
        int s = sign(q(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

BigRational root_bound(const UnivariatePolynomial& p) {
    if (p.degree() < 1) return BigRational(1);
    BigRational m = 0;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        BigRational r = c[k] / c.back();
        if (r < 0) r = -r;
        m = std::max(m, r);
    }
    return m + 1;
}

std::vector<std::pair<BigRational, BigRational>> isolate_roots(const UnivariatePolynomial& p, const BigRational& lo,
                                                                const BigRational& hi) {
    SturmSequence sturm(p);
    std::vector<std::pair<BigRational, BigRational>> out;
    std::vector<std::pair<BigRational, BigRational>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = sturm.count(a, b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(a, b);
            continue;
        }
        BigRational mid = (a + b) / 2;
        work.emplace_back(mid, b);
        work.emplace_back(a, mid);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace patchwork
