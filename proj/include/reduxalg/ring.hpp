#ifndef REDUXALG_RING_HPP
#define REDUXALG_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "reduxalg/monomial.hpp"
#include "reduxalg/scalar.hpp"

namespace reduxalg {

// Term order on the ambient polynomial ring. All quotient-ring work uses
// the weighted degrevlex order; the elimination variant (first variable
// dominant) exists for the toric-ideal computation.
enum class ring_order { wdegrevlex, elim_first_var };

// Ambient weighted polynomial ring k[x_1..x_n], weights positive.
class ambient_ring {
  public:
    ambient_ring(std::vector<std::string> vars, std::vector<int> weights, field f,
                 int degree_cap = 64, ring_order order = ring_order::wdegrevlex);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    int max_weight() const { return max_weight_; }
    const field& coeffs() const { return field_; }
    int degree_cap() const { return degree_cap_; }
    ring_order order() const { return order_; }
    int var_index(const std::string& name) const;  // -1 if absent

    monomial one() const { return monomial(nvars(), std::vector<int>(static_cast<std::size_t>(nvars()), 0), weights_); }
    monomial var(int i) const;
    monomial mono(const std::vector<int>& exps) const { return monomial(nvars(), exps, weights_); }

    int compare(const monomial& a, const monomial& b) const {
        if (order_ == ring_order::elim_first_var) {
            if (a.exp(0) != b.exp(0)) return a.exp(0) > b.exp(0) ? 1 : -1;
        }
        return wdegrevlex_compare(a, b);
    }

    // All monomials of weighted degree exactly d, in descending order.
    std::vector<monomial> monomials_of_degree(int d) const;

    std::uint64_t fingerprint() const;

  private:
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    field field_;
    int degree_cap_;
    ring_order order_;
    int max_weight_;
};

using ring_ptr = std::shared_ptr<const ambient_ring>;

inline ring_ptr make_ambient(std::vector<std::string> vars, std::vector<int> weights, field f,
                             int degree_cap = 64, ring_order order = ring_order::wdegrevlex) {
    return std::make_shared<const ambient_ring>(std::move(vars), std::move(weights), f, degree_cap, order);
}

}  // namespace reduxalg

#endif
