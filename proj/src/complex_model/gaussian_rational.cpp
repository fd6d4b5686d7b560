#include "frolicher/gaussian_rational.hpp"

#include "frolicher/errors.hpp"

#include <cctype>

namespace frolicher {

mpq_class GaussianRational::parse_rational(const std::string &text) {
    // mpq_class accepts things like "1/0" or "0x10"; validate by hand first.
    std::size_t pos = 0;
    auto digits = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t first_digit = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > first_digit ? text.substr(start, pos - start) : std::string{};
    };
    std::string num = digits(true);
    if (num.empty()) throw ParseError("not a rational number: '" + text + "'");
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits(false);
        if (den.empty()) throw ParseError("not a rational number: '" + text + "'");
    }
    if (pos != text.size()) throw ParseError("not a rational number: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw NumericError("division by zero in Q(i)");
    mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string im = im_.get_str();
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im + "i";
}

}  // namespace frolicher
