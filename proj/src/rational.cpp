#include "goodgrad/rational.hpp"

#include <stdexcept>

namespace goodgrad {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("malformed rational: " + std::string(text));
            }
        }
        std::string str(s);
        if (str[0] == '+') str.erase(0, 1);
        return mpz_class(str, 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    mpz_class n = parse_int(text.substr(0, slash));
    mpz_class d = parse_int(text.substr(slash + 1));
    if (d == 0) {
        throw std::invalid_argument("zero denominator: " + std::string(text));
    }
    return Rational(mpq_class(n, d));
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) {
        throw std::domain_error("rational is not a machine integer: " + to_string());
    }
    return v_.get_num().get_si();
}

std::string Rational::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace goodgrad
