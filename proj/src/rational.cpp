#include "galdist/rational.hpp"

#include <cctype>

namespace galdist {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Z parse_integer(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Z(s, 10);
}

}  // namespace

Q parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw InputError("malformed rational: '" + text + "'");
    Z d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    Q q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int valuation(const Z& n, std::int64_t p) {
    if (n == 0) throw DomainError("valuation of zero");
    Z m = abs(n);
    Z pp(static_cast<long>(p));
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
        m /= pp;
        ++v;
    }
    return v;
}

int valuation(const Q& q, std::int64_t p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Z strip(const Z& n, std::int64_t p) {
    Z m = n;
    Z pp(static_cast<long>(p));
    while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) m /= pp;
    return m;
}

bool is_rational_square(const Q& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

}  // namespace galdist
