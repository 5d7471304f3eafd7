#include "bstir/rational.hpp"

#include <cctype>
#include <ostream>

namespace bstir {

Rational Rational::parse(const std::string& text) {
    // Accept [+-]digits optionally followed by '/'digits. Stricter than the
    // GMP string constructor (no whitespace, no bases, no signed denominator).
    const auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw bad();
    // mpz_set_str rejects a leading '+'
    const std::string num_part = text[0] == '+' ? text.substr(1, i - 1) : text.substr(0, i);
    if (i == text.size()) return Rational(Integer(num_part, 10));
    if (text[i] != '/') throw bad();
    const std::string den_part = text.substr(i + 1);
    if (den_part.empty()) throw bad();
    for (char c : den_part)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Integer den(den_part, 10);
    if (den == 0) throw bad();
    return Rational(Integer(num_part, 10), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("Rational: 0 to a negative power");
        return Rational(1) / pow(base, -e);
    }
    Rational result(1);
    Rational b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) result *= b;
        b *= b;
        n >>= 1;
    }
    return result;
}

}  // namespace bstir
