#include "entcert/scalar.hpp"

namespace entcert {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(text);
            return Rational(num);
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string scalar_to_string(const Scalar& s) {
    if (s.im == 0) return rational_to_string(s.re);
    std::string imag = rational_to_string(s.im) + "i";
    if (s.re == 0) return imag;
    if (s.im > 0) return rational_to_string(s.re) + "+" + imag;
    return rational_to_string(s.re) + imag;
}

}  // namespace entcert
