#ifndef REDUXALG_FREEMOD_HPP
#define REDUXALG_FREEMOD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "reduxalg/poly.hpp"

namespace reduxalg {

// Graded free module over the ambient ring. shifts[i] is the degree of
// basis vector e_i, so a term u*e_i has degree wdeg(u) + shifts[i].
class free_module {
  public:
    free_module(ring_ptr r, std::vector<int> shifts) : ring_(std::move(r)), shifts_(std::move(shifts)) {}
    const ring_ptr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& shifts() const { return shifts_; }
    int shift(int i) const { return shifts_[static_cast<std::size_t>(i)]; }

  private:
    ring_ptr ring_;
    std::vector<int> shifts_;
};

using freemod_ptr = std::shared_ptr<const free_module>;

inline freemod_ptr make_freemod(ring_ptr r, std::vector<int> shifts) {
    return std::make_shared<const free_module>(std::move(r), std::move(shifts));
}

struct mod_term {
    int pos;
    monomial m;
};

// Module term order. shifted_top: shifted degree, then ring order on the
// monomials, then position (earlier position bigger). schreyer: induced by
// the lead terms of a fixed basis in a target module.
class module_order {
  public:
    static module_order shifted_top() { return module_order(); }
    static module_order schreyer(std::vector<mod_term> target_leads, std::vector<int> target_shifts) {
        module_order o;
        o.leads_ = std::move(target_leads);
        o.target_shifts_ = std::move(target_shifts);
        o.is_schreyer_ = true;
        return o;
    }

    bool is_schreyer() const { return is_schreyer_; }

    // compare terms of the free module F
    int compare(const free_module& F, int pos1, const monomial& m1, int pos2, const monomial& m2) const;

  private:
    module_order() = default;
    bool is_schreyer_ = false;
    std::vector<mod_term> leads_;
    std::vector<int> target_shifts_;
};

// Element of a free module: dense vector of polynomials.
class free_vec {
  public:
    free_vec() = default;
    explicit free_vec(freemod_ptr m);
    free_vec(freemod_ptr m, std::vector<poly> comps);

    static free_vec basis(const freemod_ptr& m, int i);

    const freemod_ptr& mod() const { return mod_; }
    int rank() const { return static_cast<int>(comp_.size()); }
    const poly& at(int i) const { return comp_[static_cast<std::size_t>(i)]; }
    poly& at(int i) { return comp_[static_cast<std::size_t>(i)]; }
    const std::vector<poly>& comps() const { return comp_; }

    bool is_zero() const;
    // shifted homogeneous degree; throws on inhomogeneous, nullopt on zero
    std::optional<int> degree() const;

    free_vec add(const free_vec& o) const;
    free_vec sub(const free_vec& o) const;
    free_vec negated() const;
    free_vec scaled(const scalar& c) const;
    free_vec mono_mul(const monomial& m, const scalar& c) const;
    free_vec poly_mul(const poly& p) const;

    bool equals(const free_vec& o) const;

    // lead module term under the given order
    mod_term lead(const module_order& ord) const;
    const scalar& lead_coeff(const module_order& ord) const;

    std::string str() const;

  private:
    freemod_ptr mod_;
    std::vector<poly> comp_;
};

inline void check_same_mod(const free_vec& a, const free_vec& b) {
    if (a.mod().get() != b.mod().get()) fail(err::ring_mismatch, "free-module elements from different modules");
}

}  // namespace reduxalg

#endif
