#ifndef REDUXALG_MONOMIAL_HPP
#define REDUXALG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "reduxalg/util.hpp"

namespace reduxalg {

inline constexpr int max_vars = 8;

// Dense exponent vector with the weighted degree cached. The weight
// vector lives in the ring; a monomial is only meaningful relative to it.
class monomial {
  public:
    monomial() = default;
    monomial(int nvars, const std::vector<int>& exps, const std::vector<int>& weights);

    int nvars() const { return n_; }
    int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
    int wdeg() const { return wdeg_; }
    bool is_one() const { return wdeg_ == 0; }
    int total_exp() const {
        int s = 0;
        for (int i = 0; i < n_; ++i) s += e_[static_cast<std::size_t>(i)];
        return s;
    }

    bool operator==(const monomial& o) const { return n_ == o.n_ && e_ == o.e_; }

    bool divides(const monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    // quotient o / this; caller checks divisibility
    monomial quotient_of(const monomial& o) const {
        monomial r;
        r.n_ = n_;
        r.wdeg_ = o.wdeg_ - wdeg_;
        for (int i = 0; i < n_; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::int16_t>(o.e_[static_cast<std::size_t>(i)] - e_[static_cast<std::size_t>(i)]);
        return r;
    }

    monomial times(const monomial& o, int degree_cap) const {
        monomial r;
        r.n_ = n_;
        r.wdeg_ = wdeg_ + o.wdeg_;
        if (r.wdeg_ > degree_cap)
            fail(err::degree_cap, "weighted degree cap " + std::to_string(degree_cap) + " exceeded");
        for (int i = 0; i < n_; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::int16_t>(e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)]);
        return r;
    }

    monomial lcm_with(const monomial& o, const std::vector<int>& weights) const;
    monomial gcd_with(const monomial& o, const std::vector<int>& weights) const;
    bool coprime(const monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<std::size_t>(i)] > 0 && o.e_[static_cast<std::size_t>(i)] > 0) return false;
        return true;
    }

  private:
    std::array<std::int16_t, max_vars> e_{};
    std::int32_t wdeg_ = 0;
    std::int8_t n_ = 0;
};

// Weighted degree first, ties by reverse lexicographic: the rightmost
// nonzero entry of ea - eb decides, negative meaning a > b.
//
// Returns +1 / 0 / -1 for a > b / a == b / a < b.
int wdegrevlex_compare(const monomial& a, const monomial& b);

}  // namespace reduxalg

#endif
