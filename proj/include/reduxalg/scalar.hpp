#ifndef REDUXALG_SCALAR_HPP
#define REDUXALG_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "reduxalg/util.hpp"

namespace reduxalg {

// A field element: either F_p (value canonical in [0,p)) or an exact
// rational. Which arm is live is decided by the Field the ring was
// created with; mixing arms is a programming error.
class scalar {
  public:
    scalar() : v_(std::int64_t{0}) {}
    static scalar fp(std::int64_t v) { return scalar(v); }
    static scalar rational(const mpq_class& q) { return scalar(q); }

    std::int64_t fp_value() const { return std::get<std::int64_t>(v_); }
    const mpq_class& q_value() const { return std::get<mpq_class>(v_); }
    bool holds_fp() const { return std::holds_alternative<std::int64_t>(v_); }

  private:
    explicit scalar(std::int64_t v) : v_(v) {}
    explicit scalar(const mpq_class& q) : v_(q) {}
    std::variant<std::int64_t, mpq_class> v_;
};

// Field context: prime p, or p == 0 for exact rationals.
class field {
  public:
    explicit field(std::uint32_t p);
    static field rationals() { return field(); }

    bool is_fp() const { return p_ != 0; }
    std::uint32_t prime() const { return p_; }

    scalar zero() const;
    scalar one() const;
    scalar of_int(std::int64_t n) const;
    scalar parse(const std::string& text) const;  // "17" or "3/4" (rational mode)

    bool is_zero(const scalar& a) const;
    bool eq(const scalar& a, const scalar& b) const;

    scalar add(const scalar& a, const scalar& b) const;
    scalar sub(const scalar& a, const scalar& b) const;
    scalar mul(const scalar& a, const scalar& b) const;
    scalar neg(const scalar& a) const;
    scalar inv(const scalar& a) const;  // throws division_by_zero on 0
    scalar div(const scalar& a, const scalar& b) const;

    std::string str(const scalar& a) const;

    bool operator==(const field& o) const { return p_ == o.p_; }

  private:
    field() : p_(0) {}
    std::uint32_t p_;
};

}  // namespace reduxalg

#endif
