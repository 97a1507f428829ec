#ifndef REDUXALG_MAPS_HPP
#define REDUXALG_MAPS_HPP

#include "reduxalg/presented.hpp"

namespace reduxalg {

// Degree-0 homomorphism between presented modules, given by the images of
// the source generators as vectors over the target cover. Construction
// certifies well-definedness: every source relation maps into the target
// relation submodule.
class module_map {
  public:
    module_map() = default;  // null state, for struct plumbing only
    static module_map make(presented_module src, presented_module dst, std::vector<free_vec> cols);
    static module_map make_unchecked(presented_module src, presented_module dst, std::vector<free_vec> cols);
    static module_map identity(const presented_module& M);
    static module_map zero_map(presented_module src, presented_module dst);

    const presented_module& source() const { return src_; }
    const presented_module& target() const { return dst_; }
    const std::vector<free_vec>& cols() const { return cols_; }

    free_vec apply_vec(const free_vec& v) const;     // source cover -> target cover
    module_map compose(const module_map& first) const;  // this . first
    module_map add(const module_map& o) const;
    module_map sub(const module_map& o) const;
    module_map scaled(const scalar& c) const;

    bool is_zero_map() const;
    bool equals_mod_relations(const module_map& o) const;
    bool well_defined() const;

    std::string str() const;

  private:
    presented_module src_, dst_;
    std::vector<free_vec> cols_;
};

// ---- block constructions -------------------------------------------------

module_map dsum_map(const module_map& f, const module_map& g);
module_map power_map(const module_map& f, int copies);
// (f_1, ..., f_k): common source, target the direct sum of the targets
module_map tuple_map(const std::vector<module_map>& fs);
// [f_1 ... f_k]: source the direct sum of the sources, common target
module_map case_map(const std::vector<module_map>& fs);
module_map sum_inclusion(const presented_module& A, const presented_module& B, int which);
module_map sum_projection(const presented_module& A, const presented_module& B, int which);

// ---- kernels, images, quotients -------------------------------------------

struct submodule_data {
    presented_module sub;
    module_map inclusion;  // sub -> ambient module
};
// submodule of M generated by cover vectors
submodule_data submodule_module(const presented_module& M, const std::vector<free_vec>& vectors);

struct cokernel_data {
    presented_module coker;
    module_map projection;  // target(f) -> coker
};

submodule_data kernel(const module_map& f);
submodule_data image(const module_map& f);
cokernel_data cokernel(const module_map& f);

// express a cover vector of M in terms of given submodule generators
// (modulo the relations of M); nullopt if not a member
std::optional<std::vector<poly>> express_in_submodule(const presented_module& M,
                                                      const std::vector<free_vec>& gens,
                                                      const free_vec& v);
// u with f(u) = v (v over the target cover); nullopt if v not in the image
std::optional<free_vec> preimage(const module_map& f, const free_vec& v);

// ---- short exact sequences -------------------------------------------------

enum class ses_failure { shape_mismatch, not_complex, not_injective, not_surjective, not_exact_middle };
std::string ses_failure_name(ses_failure f);

struct ses_result {
    bool ok = false;
    std::optional<ses_failure> failure;
    std::string detail;
};
// certifies 0 -> A -f-> B -g-> C -> 0
ses_result ses_check(const module_map& f, const module_map& g);

struct short_exact_sequence {
    module_map inject, project;
};

// ---- pushout / pullback -----------------------------------------------------

struct pushout_data {
    presented_module p;
    module_map from_b, from_c;  // B -> P, C -> P
};
pushout_data pushout(const module_map& f, const module_map& g);  // f: A->B, g: A->C

struct pullback_data {
    presented_module p;
    module_map to_b, to_c;  // P -> B, P -> C
};
pullback_data pullback(const module_map& f, const module_map& g);  // f: B->D, g: C->D

// ---- hom ---------------------------------------------------------------------

// homogeneous degree-d homomorphism M -> N as raw columns
struct graded_hom {
    int degree = 0;
    std::vector<free_vec> cols;  // over the cover of N
};
// basis of Hom(M, N)_d by graded linear algebra
std::vector<graded_hom> hom_degree_basis(const presented_module& M, const presented_module& N, int d);
std::vector<module_map> hom_elements_degree0(const presented_module& M, const presented_module& N);

struct hom_module_data {
    presented_module hom;             // presentation of Hom_R(M, N)
    std::vector<graded_hom> gens;     // generator k as an explicit map
    presented_module hom_cover_mod;   // direct sum of twisted copies of N the hom module embeds in
    module_map inclusion;             // hom -> hom_cover_mod
};
hom_module_data hom_module(const presented_module& M, const presented_module& N);

// ---- free summands -----------------------------------------------------------

struct split_witness {
    int gen_index;
    std::vector<free_vec> projection_cols;  // the splitting functional
};
struct split_data {
    std::vector<int> free_shifts;
    presented_module free_part;
    presented_module reduced;  // no free summand remains
    presented_module sum;      // direct_sum(free_part, reduced)
    module_map to_sum;         // M -> sum
    module_map from_sum;       // sum -> M
    std::vector<split_witness> witnesses;
};
split_data split_free_summands(const presented_module& M);

// ---- isomorphism test ----------------------------------------------------------

enum class iso_verdict { yes, no, unknown };
struct iso_result {
    iso_verdict verdict = iso_verdict::unknown;
    std::optional<module_map> fwd, bwd;
    std::string detail;
};
iso_result is_isomorphic(const presented_module& M, const presented_module& N, std::uint64_t seed = 1,
                         int attempts = 64);

// ---- minimal presentations with transition maps ---------------------------------

struct minimalized {
    presented_module m;
    module_map to_min, from_min;
};
minimalized minimal_presentation_maps(const presented_module& M);

// induced map on minimal first syzygies of minimally presented modules
module_map induced_syzygy_map(const module_map& h);
// iterate n times; h must map minimally presented modules
module_map induced_nth_syzygy_map(const module_map& h, int n);

// dense nullspace over the coefficient field
std::vector<std::vector<scalar>> nullspace(const field& f, std::vector<std::vector<scalar>> rows, int ncols);

}  // namespace reduxalg

#endif
