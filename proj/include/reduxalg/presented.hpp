#ifndef REDUXALG_PRESENTED_HPP
#define REDUXALG_PRESENTED_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reduxalg/groebner.hpp"

namespace reduxalg {

// Graded quotient ring R = k[x...]/I with the reduced basis of I cached.
// The maximal ideal is the ideal of all variables; every fixture ring is
// positively graded, so graded computations agree with local ones.
class presented_ring {
  public:
    static std::shared_ptr<const presented_ring> make(ring_ptr amb, std::vector<poly> ideal_gens);

    const ring_ptr& ambient() const { return amb_; }
    const std::vector<poly>& ideal_gens() const { return gens_; }
    const std::vector<poly>& ideal_basis() const { return gb_polys_; }
    const tracked_gb& ideal_gb() const { return *gb_; }
    bool is_polynomial_ring() const { return gb_polys_.empty(); }

    poly nf(const poly& p) const;
    std::uint64_t fingerprint() const { return fingerprint_; }

  private:
    presented_ring() = default;
    ring_ptr amb_;
    std::vector<poly> gens_;
    std::shared_ptr<const tracked_gb> gb_;
    std::vector<poly> gb_polys_;
    std::uint64_t fingerprint_ = 0;
};

using pring_ptr = std::shared_ptr<const presented_ring>;

pring_ptr make_ring(const std::vector<std::string>& vars, const std::vector<int>& weights,
                    const std::vector<std::string>& ideal_gens, field f, int degree_cap = 64);
pring_ptr make_ring(ring_ptr amb, std::vector<poly> ideal_gens);
// R/(extra): same ambient, larger ideal
pring_ptr quotient_ring(const pring_ptr& R, const std::vector<poly>& extra);

// Finitely presented graded module over R: generator degree shifts and a
// homogeneous relation matrix, stored column-wise over the ambient ring
// with entries in normal form mod I. Columns are canonically sorted.
class presented_module {
  public:
    presented_module() = default;  // null state, for struct plumbing only
    presented_module(pring_ptr R, std::vector<int> shifts, std::vector<free_vec> relations,
                     bool claim_minimal = false);

    const pring_ptr& ring() const { return ring_; }
    int ngens() const { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& shifts() const { return shifts_; }
    int shift(int i) const { return shifts_[static_cast<std::size_t>(i)]; }
    const std::vector<free_vec>& rels() const { return rels_; }
    int nrels() const { return static_cast<int>(rels_.size()); }
    bool claims_minimal() const { return minimal_; }

    const freemod_ptr& cover() const { return cover_; }
    // basis of relations + I*e_j, the full relation submodule over the ambient ring
    const tracked_gb& rel_gb() const;
    // the generators of rel_gb(): relations first, then ideal multiples
    std::vector<free_vec> rel_generators() const;
    // just the I*e_j columns
    std::vector<free_vec> ideal_base_columns() const;

    int hilbert_function(int degree) const;
    std::vector<mod_term> std_basis(int degree) const { return rel_gb().std_basis(degree); }
    bool is_zero() const;
    // all relation entries lie in the maximal ideal
    bool entries_in_max_ideal() const;

    std::uint64_t presentation_hash() const;
    std::string str() const;

  private:
    pring_ptr ring_;
    std::vector<int> shifts_;
    std::vector<free_vec> rels_;
    freemod_ptr cover_;
    bool minimal_ = false;
    mutable std::shared_ptr<const tracked_gb> relgb_;
};

inline void check_same_pring(const presented_module& a, const presented_module& b) {
    if (a.ring().get() != b.ring().get()) fail(err::ring_mismatch, "modules over different rings");
}
bool presentations_identical(const presented_module& a, const presented_module& b);

// ---- constructors ------------------------------------------------------

presented_module free_module(const pring_ptr& R, const std::vector<int>& shifts);
presented_module zero_module(const pring_ptr& R);
presented_module residue_field(const pring_ptr& R);
// ideal as a module: generators with their degrees, relations the syzygies
presented_module ideal_module(const pring_ptr& R, const std::vector<poly>& gens);
// cyclic module R/J
presented_module cyclic_module(const pring_ptr& R, const std::vector<poly>& ideal_gens);

// ---- functors ----------------------------------------------------------

presented_module twist(const presented_module& M, int a);  // M(a)_d = M_{a+d}
presented_module direct_sum(const presented_module& A, const presented_module& B);
presented_module power_module(const presented_module& M, int copies);
presented_module tensor(const presented_module& M, const presented_module& N);
// M (x)_R R/J, still presented over R
presented_module tensor_ring_quotient(const presented_module& M, const std::vector<poly>& J);
// M (x)_R S as an S-module, S a further quotient of the same ambient ring
presented_module to_ring(const presented_module& M, const pring_ptr& S);
// S-module viewed as an R-module along R ->> S
presented_module restrict_scalars(const presented_module& M, const pring_ptr& R);

// ---- minimality and syzygies -------------------------------------------

struct minimalize_data {
    presented_module m;
    // old generator e_i expressed in the new generators (columns over m.cover())
    std::vector<free_vec> old_to_new;
    // new generator e_j as a vector over the old cover
    std::vector<free_vec> new_to_old;
};
minimalize_data minimalize(const presented_module& M);
presented_module minimal_presentation(const presented_module& M);

// indices of a minimal generating subset of `candidates` modulo the span
// of `base`, greedy by ascending degree
std::vector<int> select_min_gens(const freemod_ptr& F, const std::vector<free_vec>& candidates,
                                 const std::vector<free_vec>& base);

// minimal first syzygy: kernel of the minimal free cover
presented_module syzygy_module(const presented_module& M);
presented_module nth_syzygy(const presented_module& M, int n);

// ---- graded numerics ---------------------------------------------------

// length of a finite-length module; throws not_stabilized if the Hilbert
// function has not died off within the degree cap
long module_length(const presented_module& M);
// smallest and largest degrees worth scanning for this presentation
int min_degree_bound(const presented_module& M);

}  // namespace reduxalg

#endif
