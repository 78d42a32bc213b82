#include "sgspectra/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace sgs {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int d) const {
    static const mpz_class kZero = 0;
    if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
    return c_[d];
}

mpz_class IntPolynomial::operator()(const mpz_class& at) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

double IntPolynomial::evaluate(double at) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
}

IntPolynomial IntPolynomial::reflected() const {
    std::vector<mpz_class> out = c_;
    for (size_t d = 1; d < out.size(); d += 2) out[d] = -out[d];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    IntPolynomial acc = constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> out = c_;
    for (auto& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    std::ostringstream os;
    os << "[";
    if (c_.empty()) {
        os << "0";
    } else {
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ", ";
            os << c_[i].get_str();
        }
    }
    os << "]";
    return os.str();
}

IntPolynomial interpolate_integer(const std::vector<mpz_class>& xs,
                                  const std::vector<mpz_class>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation point/value mismatch");
    size_t k = xs.size();
    if (k == 0) return IntPolynomial::zero();

    // Newton divided differences over exact rationals.
    std::vector<mpq_class> dd(k);
    for (size_t i = 0; i < k; ++i) dd[i] = mpq_class(ys[i]);
    for (size_t j = 1; j < k; ++j)
        for (size_t i = k - 1; i >= j; --i) {
            mpz_class denom = xs[i] - xs[i - j];
            if (denom == 0) throw std::invalid_argument("interpolation points must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(denom);
            if (i == j) break;
        }

    // Expand the Newton form to monomial coefficients.
    std::vector<mpq_class> coeffs(k, 0);
    coeffs[0] = dd[k - 1];
    size_t deg = 0;
    for (size_t step = k - 1; step-- > 0;) {
        // multiply by (x - xs[step]) then add dd[step]
        ++deg;
        for (size_t d = deg; d > 0; --d)
            coeffs[d] = coeffs[d - 1] - mpq_class(xs[step]) * coeffs[d];
        coeffs[0] = -mpq_class(xs[step]) * coeffs[0] + dd[step];
    }

    std::vector<mpz_class> out(k);
    for (size_t d = 0; d < k; ++d) {
        coeffs[d].canonicalize();
        if (coeffs[d].get_den() != 1)
            throw std::logic_error("interpolation did not clear to integer coefficients");
        out[d] = coeffs[d].get_num();
    }
    return IntPolynomial(std::move(out));
}

}  // namespace sgs
