#include "gl2/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace gl2 {

Rational unit_fraction(uint64_t d) {
    if (d == 0) throw std::domain_error("unit_fraction: zero denominator");
    Rational q(1, BigInt(static_cast<unsigned long>(d)));
    q.canonicalize();
    return q;
}

Json big_json(const BigInt& z) { return z.get_str(); }

namespace {

int64_t to_i64(const BigInt& z) {
    if (!z.fits_slong_p()) throw std::logic_error("rational leg exceeds int64");
    return z.get_si();
}

} // namespace

Json rat_json(const Rational& q) {
    Json j = Json::object();
    j["num"] = to_i64(q.get_num());
    j["den"] = to_i64(q.get_den());
    return j;
}

BigInt big_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

BigInt parse_big_expr(const std::string& s) {
    auto caret = s.find('^');
    if (caret == std::string::npos) return big_from_string(s);
    BigInt base = big_from_string(s.substr(0, caret));
    BigInt exp = big_from_string(s.substr(caret + 1));
    if (exp < 0 || !exp.fits_ulong_p())
        throw std::invalid_argument("exponent out of range in '" + s + "'");
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return out;
}

double log_big(const BigInt& z) {
    if (z <= 0) throw std::domain_error("log_big: argument must be positive");
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * M_LN2;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace gl2
