#ifndef REDUXALG_POLY_HPP
#define REDUXALG_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "reduxalg/ring.hpp"

namespace reduxalg {

struct term {
    monomial m;
    scalar c;
};

// Sparse multivariate polynomial: terms strictly descending in the ring
// order, no zero coefficients, no duplicate monomials.
class poly {
  public:
    poly() = default;
    explicit poly(ring_ptr r) : ring_(std::move(r)) {}

    static poly zero(ring_ptr r) { return poly(std::move(r)); }
    static poly constant(ring_ptr r, const scalar& c);
    static poly variable(ring_ptr r, int i);
    static poly term_of(ring_ptr r, const monomial& m, const scalar& c);

    const ring_ptr& ring() const { return ring_; }
    const std::vector<term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t nterms() const { return t_.size(); }
    const term& lead() const;

    poly add(const poly& o) const;
    poly sub(const poly& o) const;
    poly mul(const poly& o) const;
    poly scaled(const scalar& c) const;
    poly mono_mul(const monomial& m, const scalar& c) const;
    poly negated() const;

    bool equals(const poly& o) const;

    // weighted degree of a homogeneous polynomial; nullopt for 0
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;
    int wdeg() const;  // degree of lead term; error on zero

    // nonzero scalar iff degree-0 and not zero
    std::optional<scalar> constant_value() const;
    bool has_constant_term() const;

    std::string str() const;
    std::uint64_t content_hash() const;

    // sorted-merge constructor used by the arithmetic kernels; terms must
    // already be combined and descending
    static poly from_sorted(ring_ptr r, std::vector<term> ts);
    // combines duplicates, drops zeros, sorts
    static poly collect(ring_ptr r, std::vector<term> ts);

  private:
    ring_ptr ring_;
    std::vector<term> t_;
};

poly parse_poly(const ring_ptr& r, const std::string& text);

inline void check_same_ring(const ring_ptr& a, const ring_ptr& b) {
    if (a.get() != b.get()) fail(err::ring_mismatch, "operands live in different ambient rings");
}

}  // namespace reduxalg

#endif
