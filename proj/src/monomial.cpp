#include "reduxalg/monomial.hpp"

namespace reduxalg {

monomial::monomial(int nvars, const std::vector<int>& exps, const std::vector<int>& weights) {
    if (nvars > max_vars) fail(err::bad_input, "at most 8 variables are supported");
    if (static_cast<int>(exps.size()) != nvars || static_cast<int>(weights.size()) != nvars)
        fail(err::dim_mismatch, "exponent/weight length mismatch");
    n_ = static_cast<std::int8_t>(nvars);
    for (int i = 0; i < nvars; ++i) {
        if (exps[static_cast<std::size_t>(i)] < 0) fail(err::bad_input, "negative exponent");
        e_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(exps[static_cast<std::size_t>(i)]);
        wdeg_ += exps[static_cast<std::size_t>(i)] * weights[static_cast<std::size_t>(i)];
    }
}

monomial monomial::lcm_with(const monomial& o, const std::vector<int>& weights) const {
    monomial r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) {
        std::int16_t m = std::max(e_[static_cast<std::size_t>(i)], o.e_[static_cast<std::size_t>(i)]);
        r.e_[static_cast<std::size_t>(i)] = m;
        r.wdeg_ += m * weights[static_cast<std::size_t>(i)];
    }
    return r;
}

monomial monomial::gcd_with(const monomial& o, const std::vector<int>& weights) const {
    monomial r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) {
        std::int16_t m = std::min(e_[static_cast<std::size_t>(i)], o.e_[static_cast<std::size_t>(i)]);
        r.e_[static_cast<std::size_t>(i)] = m;
        r.wdeg_ += m * weights[static_cast<std::size_t>(i)];
    }
    return r;
}

int wdegrevlex_compare(const monomial& a, const monomial& b) {
    if (a.nvars() != b.nvars()) fail(err::dim_mismatch, "monomials from different ambient rings");
    if (a.wdeg() != b.wdeg()) return a.wdeg() > b.wdeg() ? 1 : -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        int d = a.exp(i) - b.exp(i);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace reduxalg
