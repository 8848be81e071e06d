#include "treemaps/polynomial.hpp"

#include <set>
#include <sstream>

namespace treemaps {

Polynomial::Polynomial(BigRational constant) : coeffs_{std::move(constant)} { trim(); }

Polynomial::Polynomial(std::vector<BigRational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

Polynomial Polynomial::x() {
    return Polynomial(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

Polynomial Polynomial::constant(long v) { return Polynomial(BigRational(v)); }

Polynomial Polynomial::constant(const BigInt& v) { return Polynomial(BigRational(v)); }

BigRational Polynomial::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return BigRational(0);
    return coeffs_[static_cast<size_t>(k)];
}

BigRational Polynomial::eval(const BigRational& at) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

BigRational Polynomial::eval(long at) const { return eval(BigRational(at)); }

bool Polynomial::integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const BigRational& c = coeffs_[k];
        if (c == 0) continue;
        BigRational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1) && k > 0;
        if (!unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial rising_factorial(const Polynomial& base, long m) {
    if (m < 0) throw std::domain_error("rising_factorial: negative length");
    Polynomial r = Polynomial::constant(1);
    for (long t = 0; t < m; ++t) r *= base + Polynomial::constant(t);
    return r;
}

BigRational rising_factorial(const BigRational& a, long m) {
    if (m < 0) throw std::domain_error("rising_factorial: negative length");
    BigRational r(1);
    for (long t = 0; t < m; ++t) r *= a + t;
    return r;
}

Polynomial binomial_poly(long k) {
    if (k < 0) throw std::domain_error("binomial_poly: negative k");
    Polynomial r = Polynomial::constant(1);
    for (long t = 0; t < k; ++t) r *= Polynomial::x() - Polynomial::constant(t);
    r *= reciprocal_factorial(k);
    return r;
}

Polynomial interpolate(const std::vector<std::pair<long, BigRational>>& points) {
    if (points.empty()) throw std::domain_error("interpolate: no points");
    std::set<long> seen;
    for (const auto& [a, y] : points)
        if (!seen.insert(a).second)
            throw std::domain_error("interpolate: duplicate abscissa " + std::to_string(a));

    // Newton's divided differences keeps the intermediate degrees small.
    const size_t m = points.size();
    std::vector<BigRational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) /
                    BigRational(points[i].first - points[i - level].first);
            if (i == level) break;
        }
    Polynomial result = Polynomial::constant(0);
    Polynomial basis = Polynomial::constant(1);
    for (size_t i = 0; i < m; ++i) {
        result += basis * dd[i];
        basis *= Polynomial::x() - Polynomial::constant(points[i].first);
    }
    return result;
}

std::vector<BigRational> binomial_basis(const Polynomial& p) {
    // c_k = k-th forward difference of p at 0.
    const long deg = p.degree();
    std::vector<BigRational> out;
    if (deg < 0) return out;
    std::vector<BigRational> values;
    for (long j = 0; j <= deg; ++j) values.push_back(p.eval(j));
    out.reserve(static_cast<size_t>(deg) + 1);
    for (long k = 0; k <= deg; ++k) {
        out.push_back(values.front());
        for (size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return out;
}

}  // namespace treemaps
