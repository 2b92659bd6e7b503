#include "fthresh/arith.hpp"

#include <limits>

#include "fthresh/errors.hpp"

namespace fthresh {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

BigInt parse_int(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(text)) throw ParseError("invalid rational", 0, std::string(text));
        return Rational(parse_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_integer(num)) throw ParseError("invalid numerator", 0, std::string(num));
    if (!valid_integer(den)) throw ParseError("invalid denominator", slash + 1, std::string(den));
    BigInt d = parse_int(den);
    if (d == 0) throw ParseError("zero denominator", slash + 1, std::string(den));
    return make_rational(parse_int(num), d);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_decimal(const Rational& v, unsigned digits) {
    BigInt scale = ipow(BigInt(10), digits);
    BigInt num = abs(v.get_num()) * scale;
    BigInt q = num / v.get_den();
    std::string s = q.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = v < 0 ? "-" : "";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

BigInt floor(const Rational& v) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

BigInt ceil(const Rational& v) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt ipow(unsigned long base, unsigned exp) { return ipow(BigInt(base), exp); }

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool fits_u64(const BigInt& v) {
    if (v < 0) return false;
    return mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw CapabilityError("integer " + v.get_str() + " exceeds 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

}  // namespace fthresh
