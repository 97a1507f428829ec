#ifndef REDUXALG_GROEBNER_HPP
#define REDUXALG_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "reduxalg/freemod.hpp"

namespace reduxalg {

struct gb_options {
    bool track_reps = true;
    std::optional<int> up_to_degree;  // truncated completion when set
    bool allow_cache = true;
};

struct division_result {
    std::vector<poly> quotients;  // one per basis element
    free_vec remainder;
};

// Reduced Groebner basis of a submodule of a graded free module, with
// every basis element tracked as a combination of the input generators.
class tracked_gb {
  public:
    tracked_gb(freemod_ptr mod, module_order ord, std::vector<free_vec> gens, gb_options opt = {});

    const freemod_ptr& mod() const { return mod_; }
    const module_order& order() const { return ord_; }
    const std::vector<free_vec>& originals() const { return orig_; }
    const std::vector<free_vec>& basis() const { return gb_; }
    const std::vector<std::vector<poly>>& reps() const { return rep_; }
    std::optional<int> truncated_at() const { return trunc_; }

    division_result divide(const free_vec& v) const;
    free_vec normal_form(const free_vec& v) const;
    bool contains(const free_vec& v) const;
    // coefficients over the original generators; throws if not a member
    std::vector<poly> express_in_originals(const free_vec& v) const;

    // Schreyer generators of the syzygies of basis(); elements live in a
    // free module with one position per basis element. They form a GB
    // under the Schreyer order induced by the basis lead terms.
    std::vector<free_vec> schreyer_syzygies() const;
    module_order schreyer_order() const;
    freemod_ptr syzygy_module() const;  // free module over basis indices

    // generators of the syzygies of originals(), via the Schreyer
    // generators and the tracked representations
    std::vector<free_vec> syzygies_of_originals() const;

    // standard module monomials of the quotient at a given shifted degree
    std::vector<mod_term> std_basis(int degree) const;
    int quotient_dim(int degree) const { return static_cast<int>(std_basis(degree).size()); }

    std::vector<mod_term> lead_terms() const;
    std::uint64_t content_hash() const;

    // re-reduce one S-pair to zero; used by the cache spot check
    bool spot_check(std::uint64_t which) const;

  private:
    void complete(std::vector<free_vec> gens, const gb_options& opt);
    void interreduce();
    bool load_from_cache(std::uint64_t key);
    void store_to_cache(std::uint64_t key) const;

    freemod_ptr mod_;
    module_order ord_;
    std::vector<free_vec> orig_;
    std::vector<free_vec> gb_;
    std::vector<std::vector<poly>> rep_;
    std::optional<int> trunc_;
    bool tracked_ = false;
};

// Krull dimension of the quotient by a rank-1 lead-term ideal: the largest
// variable subset meeting no lead-term support.
int initial_dim(const ring_ptr& r, const std::vector<mod_term>& leads);

// Process-wide GB disk cache. Disabled until a directory is set.
void set_gb_cache_dir(const std::string& dir, std::uint64_t spot_check_seed);
void disable_gb_cache();
struct gb_cache_stats {
    long hits = 0;
    long misses = 0;
    long rejected = 0;
};
gb_cache_stats gb_cache_counters();

}  // namespace reduxalg

#endif
