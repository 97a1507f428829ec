#include "reduxalg/scalar.hpp"

#include <sstream>

namespace reduxalg {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

field::field(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) fail(err::bad_input, "field characteristic must be prime, got " + std::to_string(p));
}

scalar field::zero() const { return is_fp() ? scalar::fp(0) : scalar::rational(mpq_class(0)); }

scalar field::one() const { return is_fp() ? scalar::fp(1) : scalar::rational(mpq_class(1)); }

scalar field::of_int(std::int64_t n) const {
    if (!is_fp()) return scalar::rational(mpq_class(static_cast<long>(n)));
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return scalar::fp(r);
}

scalar field::parse(const std::string& text) const {
    if (!is_fp()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) fail(err::bad_input, "bad rational literal: " + text);
        q.canonicalize();
        return scalar::rational(q);
    }
    std::int64_t v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i >= text.size()) fail(err::bad_input, "bad integer literal: " + text);
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') fail(err::bad_input, "bad integer literal: " + text);
        v = (v * 10 + (text[i] - '0')) % p_;
    }
    return of_int(neg ? -v : v);
}

bool field::is_zero(const scalar& a) const {
    return is_fp() ? a.fp_value() == 0 : a.q_value() == 0;
}

bool field::eq(const scalar& a, const scalar& b) const {
    return is_fp() ? a.fp_value() == b.fp_value() : a.q_value() == b.q_value();
}

scalar field::add(const scalar& a, const scalar& b) const {
    if (!is_fp()) return scalar::rational(a.q_value() + b.q_value());
    std::int64_t r = a.fp_value() + b.fp_value();
    if (r >= p_) r -= p_;
    return scalar::fp(r);
}

scalar field::sub(const scalar& a, const scalar& b) const {
    if (!is_fp()) return scalar::rational(a.q_value() - b.q_value());
    std::int64_t r = a.fp_value() - b.fp_value();
    if (r < 0) r += p_;
    return scalar::fp(r);
}

scalar field::mul(const scalar& a, const scalar& b) const {
    if (!is_fp()) return scalar::rational(a.q_value() * b.q_value());
    return scalar::fp(static_cast<std::int64_t>((static_cast<__int128>(a.fp_value()) * b.fp_value()) % p_));
}

scalar field::neg(const scalar& a) const {
    if (!is_fp()) return scalar::rational(-a.q_value());
    return a.fp_value() == 0 ? a : scalar::fp(p_ - a.fp_value());
}

scalar field::inv(const scalar& a) const {
    if (is_zero(a)) fail(err::division_by_zero, "division by zero");
    if (!is_fp()) return scalar::rational(1 / a.q_value());
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p_, newr = a.fp_value();
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return scalar::fp(t);
}

scalar field::div(const scalar& a, const scalar& b) const { return mul(a, inv(b)); }

std::string field::str(const scalar& a) const {
    if (is_fp()) {
        // balanced representative for readability
        std::int64_t v = a.fp_value();
        if (v > p_ / 2) v -= p_;
        return std::to_string(v);
    }
    std::ostringstream os;
    os << a.q_value();
    return os.str();
}

}  // namespace reduxalg
