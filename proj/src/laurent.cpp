#include "braidconc/laurent.hpp"

#include <sstream>

#include "braidconc/errors.hpp"

namespace bc {

void LaurentPoly::strip() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentPoly::LaurentPoly(BigInt constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
    return p;
}

int LaurentPoly::lowest_exponent() const {
    if (is_zero()) throw DomainError("lowest_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
    if (is_zero()) throw DomainError("highest_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::evaluate_int(const BigInt& t) const {
    if (is_zero()) return 0;
    if (lowest_exponent() < 0) throw DomainError("evaluate_int requires nonnegative exponents");
    // Horner over the dense range
    BigInt acc = 0;
    int e = highest_exponent();
    for (int k = e; k >= 0; --k) {
        acc *= t;
        acc += coefficient(k);
    }
    return acc;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
    r.strip();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
    r.strip();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
    r.strip();
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    LaurentPoly r = shifted(-lowest_exponent());
    if (r.coeffs_.rbegin()->second < 0) r = -r;
    return r;
}

std::string LaurentPoly::serialize() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " ";
        os << e << ":" << c;
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::deserialize(const std::string& text) {
    LaurentPoly p;
    if (text == "0") return p;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("bad polynomial token '" + tok + "'", 1, 1);
        int e = std::stoi(tok.substr(0, colon));
        p.coeffs_[e] = BigInt(tok.substr(colon + 1));
    }
    p.strip();
    return p;
}

std::string LaurentPoly::pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt ac = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (ac != 1 || e == 0) os << ac.str();
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace bc
