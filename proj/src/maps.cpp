#include "reduxalg/maps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace reduxalg {

// ---- module_map ----------------------------------------------------------

module_map module_map::make_unchecked(presented_module src, presented_module dst, std::vector<free_vec> cols) {
    module_map f;
    f.src_ = std::move(src);
    f.dst_ = std::move(dst);
    if (static_cast<int>(cols.size()) != f.src_.ngens()) fail(err::dim_mismatch, "one column per source generator");
    f.cols_.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<poly> comps;
        for (const auto& p : cols[j].comps()) comps.push_back(f.dst_.ring()->nf(p));
        free_vec v(f.dst_.cover(), std::move(comps));
        auto d = v.degree();
        if (d && *d != f.src_.shift(static_cast<int>(j)))
            fail(err::ill_defined_map, "map is not homogeneous of degree zero");
        f.cols_.push_back(std::move(v));
    }
    return f;
}

module_map module_map::make(presented_module src, presented_module dst, std::vector<free_vec> cols) {
    check_same_pring(src, dst);
    module_map f = make_unchecked(std::move(src), std::move(dst), std::move(cols));
    if (!f.well_defined()) fail(err::ill_defined_map, "source relation does not map into target relations");
    return f;
}

module_map module_map::identity(const presented_module& M) {
    std::vector<free_vec> cols;
    for (int j = 0; j < M.ngens(); ++j) cols.push_back(free_vec::basis(M.cover(), j));
    return make_unchecked(M, M, std::move(cols));
}

module_map module_map::zero_map(presented_module src, presented_module dst) {
    std::vector<free_vec> cols(static_cast<std::size_t>(src.ngens()), free_vec(dst.cover()));
    return make_unchecked(std::move(src), std::move(dst), std::move(cols));
}

free_vec module_map::apply_vec(const free_vec& v) const {
    free_vec out(dst_.cover());
    for (int i = 0; i < src_.ngens(); ++i) {
        const poly& c = v.at(i);
        if (c.is_zero()) continue;
        out = out.add(cols_[static_cast<std::size_t>(i)].poly_mul(c));
    }
    return out;
}

module_map module_map::compose(const module_map& first) const {
    if (!presentations_identical(first.dst_, src_))
        fail(err::dim_mismatch, "composition shape mismatch");
    std::vector<free_vec> cols;
    for (const auto& c : first.cols_) cols.push_back(apply_vec(c));
    return make_unchecked(first.src_, dst_, std::move(cols));
}

module_map module_map::add(const module_map& o) const {
    std::vector<free_vec> cols;
    for (std::size_t j = 0; j < cols_.size(); ++j) cols.push_back(cols_[j].add(o.cols_[j]));
    return make_unchecked(src_, dst_, std::move(cols));
}

module_map module_map::sub(const module_map& o) const {
    std::vector<free_vec> cols;
    for (std::size_t j = 0; j < cols_.size(); ++j) cols.push_back(cols_[j].sub(o.cols_[j]));
    return make_unchecked(src_, dst_, std::move(cols));
}

module_map module_map::scaled(const scalar& c) const {
    std::vector<free_vec> cols;
    for (const auto& col : cols_) cols.push_back(col.scaled(c));
    return make_unchecked(src_, dst_, std::move(cols));
}

bool module_map::is_zero_map() const {
    for (const auto& c : cols_)
        if (!dst_.rel_gb().contains(c)) return false;
    return true;
}

bool module_map::equals_mod_relations(const module_map& o) const {
    return sub(o).is_zero_map();
}

bool module_map::well_defined() const {
    for (const auto& r : src_.rels())
        if (!dst_.rel_gb().contains(apply_vec(r))) return false;
    return true;
}

std::string module_map::str() const {
    std::ostringstream os;
    os << "map[" << src_.ngens() << "->" << dst_.ngens() << "]";
    for (const auto& c : cols_) os << " " << c.str();
    return os.str();
}

// ---- block constructions --------------------------------------------------

module_map dsum_map(const module_map& f, const module_map& g) {
    presented_module src = direct_sum(f.source(), g.source());
    presented_module dst = direct_sum(f.target(), g.target());
    std::vector<free_vec> cols;
    for (const auto& c : f.cols()) {
        free_vec v(dst.cover());
        for (int i = 0; i < f.target().ngens(); ++i) v.at(i) = c.at(i);
        cols.push_back(std::move(v));
    }
    for (const auto& c : g.cols()) {
        free_vec v(dst.cover());
        for (int i = 0; i < g.target().ngens(); ++i) v.at(f.target().ngens() + i) = c.at(i);
        cols.push_back(std::move(v));
    }
    return module_map::make_unchecked(std::move(src), std::move(dst), std::move(cols));
}

module_map power_map(const module_map& f, int copies) {
    if (copies <= 0) fail(err::bad_input, "power_map needs a positive count");
    module_map acc = f;
    for (int i = 1; i < copies; ++i) acc = dsum_map(acc, f);
    return acc;
}

module_map tuple_map(const std::vector<module_map>& fs) {
    if (fs.empty()) fail(err::bad_input, "tuple_map of nothing");
    presented_module dst = fs[0].target();
    for (std::size_t k = 1; k < fs.size(); ++k) dst = direct_sum(dst, fs[k].target());
    const presented_module& src = fs[0].source();
    std::vector<free_vec> cols;
    for (int j = 0; j < src.ngens(); ++j) {
        free_vec v(dst.cover());
        int off = 0;
        for (const auto& f : fs) {
            for (int i = 0; i < f.target().ngens(); ++i) v.at(off + i) = f.cols()[static_cast<std::size_t>(j)].at(i);
            off += f.target().ngens();
        }
        cols.push_back(std::move(v));
    }
    return module_map::make_unchecked(src, std::move(dst), std::move(cols));
}

module_map case_map(const std::vector<module_map>& fs) {
    if (fs.empty()) fail(err::bad_input, "case_map of nothing");
    presented_module src = fs[0].source();
    for (std::size_t k = 1; k < fs.size(); ++k) src = direct_sum(src, fs[k].source());
    const presented_module& dst = fs[0].target();
    std::vector<free_vec> cols;
    for (const auto& f : fs)
        for (const auto& c : f.cols()) cols.push_back(free_vec(dst.cover(), c.comps()));
    return module_map::make_unchecked(std::move(src), dst, std::move(cols));
}

module_map sum_inclusion(const presented_module& A, const presented_module& B, int which) {
    presented_module S = direct_sum(A, B);
    const presented_module& part = which == 0 ? A : B;
    int off = which == 0 ? 0 : A.ngens();
    std::vector<free_vec> cols;
    for (int j = 0; j < part.ngens(); ++j) cols.push_back(free_vec::basis(S.cover(), off + j));
    return module_map::make_unchecked(part, S, std::move(cols));
}

module_map sum_projection(const presented_module& A, const presented_module& B, int which) {
    presented_module S = direct_sum(A, B);
    const presented_module& part = which == 0 ? A : B;
    int off = which == 0 ? 0 : A.ngens();
    std::vector<free_vec> cols;
    for (int j = 0; j < S.ngens(); ++j) {
        free_vec v(part.cover());
        if (j >= off && j < off + part.ngens()) v = free_vec::basis(part.cover(), j - off);
        cols.push_back(std::move(v));
    }
    return module_map::make_unchecked(S, part, std::move(cols));
}

// ---- submodules -------------------------------------------------------------

submodule_data submodule_module(const presented_module& M, const std::vector<free_vec>& vectors) {
    const pring_ptr& R = M.ring();
    std::vector<free_vec> cand;
    for (const auto& v : vectors) {
        free_vec nf = M.rel_gb().normal_form(free_vec(M.cover(), v.comps()));
        if (!nf.is_zero()) cand.push_back(std::move(nf));
    }
    std::vector<int> keep = select_min_gens(M.cover(), cand, M.rel_generators());
    std::vector<free_vec> gens;
    std::vector<int> shifts;
    for (int i : keep) {
        gens.push_back(cand[static_cast<std::size_t>(i)]);
        shifts.push_back(*cand[static_cast<std::size_t>(i)].degree());
    }
    if (gens.empty()) {
        presented_module z = zero_module(R);
        return {z, module_map::make_unchecked(z, M, {})};
    }
    std::vector<free_vec> origs = gens;
    for (auto& v : M.rel_generators()) origs.push_back(std::move(v));
    tracked_gb G(M.cover(), module_order::shifted_top(), origs);
    freemod_ptr Fo = make_freemod(R->ambient(), shifts);
    std::vector<free_vec> rels;
    for (const auto& s : G.syzygies_of_originals()) {
        free_vec v(Fo);
        bool nonzero = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            poly e = R->nf(s.at(static_cast<int>(i)));
            if (!e.is_zero()) nonzero = true;
            v.at(static_cast<int>(i)) = e;
        }
        if (nonzero) rels.push_back(std::move(v));
    }
    presented_module raw(R, shifts, std::move(rels));
    auto keep2 = select_min_gens(raw.cover(), raw.rels(), raw.ideal_base_columns());
    std::vector<free_vec> kept;
    for (int i : keep2) kept.push_back(raw.rels()[static_cast<std::size_t>(i)]);
    presented_module sub(R, shifts, std::move(kept), true);
    return {sub, module_map::make_unchecked(sub, M, gens)};
}

std::optional<std::vector<poly>> express_in_submodule(const presented_module& M,
                                                      const std::vector<free_vec>& gens,
                                                      const free_vec& v) {
    std::vector<free_vec> origs;
    for (const auto& g : gens) origs.push_back(free_vec(M.cover(), g.comps()));
    std::size_t t = origs.size();
    for (auto& b : M.rel_generators()) origs.push_back(std::move(b));
    tracked_gb G(M.cover(), module_order::shifted_top(), origs);
    free_vec w(M.cover(), v.comps());
    if (!G.contains(w)) return std::nullopt;
    std::vector<poly> all = G.express_in_originals(w);
    std::vector<poly> out;
    for (std::size_t i = 0; i < t; ++i) out.push_back(M.ring()->nf(all[i]));
    return out;
}

std::optional<free_vec> preimage(const module_map& f, const free_vec& v) {
    auto coeffs = express_in_submodule(f.target(), f.cols(), v);
    if (!coeffs) return std::nullopt;
    free_vec u(f.source().cover());
    for (int j = 0; j < f.source().ngens(); ++j) u.at(j) = (*coeffs)[static_cast<std::size_t>(j)];
    return u;
}

submodule_data kernel(const module_map& f) {
    const presented_module& A = f.source();
    const presented_module& B = f.target();
    std::vector<free_vec> origs = f.cols();  // images of source generators, in B's cover
    std::size_t t = origs.size();
    for (auto& b : B.rel_generators()) origs.push_back(std::move(b));
    tracked_gb G(B.cover(), module_order::shifted_top(), origs);
    std::vector<free_vec> cand;
    for (const auto& s : G.syzygies_of_originals()) {
        free_vec u(A.cover());
        bool nonzero = false;
        for (std::size_t i = 0; i < t; ++i) {
            poly e = A.ring()->nf(s.at(static_cast<int>(i)));
            if (!e.is_zero()) nonzero = true;
            u.at(static_cast<int>(i)) = e;
        }
        if (nonzero) cand.push_back(std::move(u));
    }
    return submodule_module(A, cand);
}

submodule_data image(const module_map& f) { return submodule_module(f.target(), f.cols()); }

cokernel_data cokernel(const module_map& f) {
    const presented_module& B = f.target();
    std::vector<free_vec> rels = B.rels();
    for (const auto& c : f.cols()) rels.push_back(c);
    presented_module coker(B.ring(), B.shifts(), std::move(rels));
    std::vector<free_vec> cols;
    for (int j = 0; j < B.ngens(); ++j) cols.push_back(free_vec::basis(coker.cover(), j));
    return {coker, module_map::make_unchecked(B, coker, std::move(cols))};
}

// ---- ses ---------------------------------------------------------------------

std::string ses_failure_name(ses_failure f) {
    switch (f) {
        case ses_failure::shape_mismatch: return "ShapeMismatch";
        case ses_failure::not_complex: return "NotComplex";
        case ses_failure::not_injective: return "NotInjective";
        case ses_failure::not_surjective: return "NotSurjective";
        case ses_failure::not_exact_middle: return "NotExactAtMiddle";
    }
    return "?";
}

ses_result ses_check(const module_map& f, const module_map& g) {
    ses_result res;
    if (f.source().ring().get() != g.source().ring().get() ||
        !presentations_identical(f.target(), g.source())) {
        res.failure = ses_failure::shape_mismatch;
        res.detail = "middle modules differ";
        return res;
    }
    module_map comp = g.compose(f);
    if (!comp.is_zero_map()) {
        res.failure = ses_failure::not_complex;
        res.detail = "g o f != 0";
        return res;
    }
    if (!kernel(f).sub.is_zero()) {
        res.failure = ses_failure::not_injective;
        res.detail = "left map has a kernel";
        return res;
    }
    {  // surjectivity: every target generator lies in image + relations
        std::vector<free_vec> origs = g.cols();
        for (auto& b : g.target().rel_generators()) origs.push_back(std::move(b));
        gb_options opt;
        opt.track_reps = false;
        tracked_gb G(g.target().cover(), module_order::shifted_top(), origs, opt);
        for (int j = 0; j < g.target().ngens(); ++j)
            if (!G.contains(free_vec::basis(g.target().cover(), j))) {
                res.failure = ses_failure::not_surjective;
                res.detail = "generator " + std::to_string(j) + " of the quotient is not hit";
                return res;
            }
    }
    {  // exactness at the middle: ker g inside im f + relations
        submodule_data kg = kernel(g);
        std::vector<free_vec> origs = f.cols();
        for (auto& b : f.target().rel_generators()) origs.push_back(std::move(b));
        gb_options opt;
        opt.track_reps = false;
        tracked_gb G(f.target().cover(), module_order::shifted_top(), origs, opt);
        for (const auto& w : kg.inclusion.cols())
            if (!G.contains(w)) {
                res.failure = ses_failure::not_exact_middle;
                res.detail = "kernel of the right map is larger than the image of the left";
                return res;
            }
    }
    res.ok = true;
    return res;
}

// ---- pushout / pullback --------------------------------------------------------

pushout_data pushout(const module_map& f, const module_map& g) {
    if (!presentations_identical(f.source(), g.source())) fail(err::dim_mismatch, "pushout needs a shared corner");
    const presented_module& B = f.target();
    const presented_module& C = g.target();
    presented_module D = direct_sum(B, C);
    std::vector<free_vec> rels = D.rels();
    for (int j = 0; j < f.source().ngens(); ++j) {
        free_vec v(D.cover());
        for (int i = 0; i < B.ngens(); ++i) v.at(i) = f.cols()[static_cast<std::size_t>(j)].at(i);
        for (int i = 0; i < C.ngens(); ++i)
            v.at(B.ngens() + i) = g.cols()[static_cast<std::size_t>(j)].at(i).negated();
        rels.push_back(std::move(v));
    }
    presented_module P(B.ring(), D.shifts(), std::move(rels));
    std::vector<free_vec> bc, cc;
    for (int j = 0; j < B.ngens(); ++j) bc.push_back(free_vec::basis(P.cover(), j));
    for (int j = 0; j < C.ngens(); ++j) cc.push_back(free_vec::basis(P.cover(), B.ngens() + j));
    return {P, module_map::make_unchecked(B, P, std::move(bc)), module_map::make_unchecked(C, P, std::move(cc))};
}

pullback_data pullback(const module_map& f, const module_map& g) {
    if (!presentations_identical(f.target(), g.target())) fail(err::dim_mismatch, "pullback needs a shared corner");
    const presented_module& B = f.source();
    const presented_module& C = g.source();
    presented_module S = direct_sum(B, C);
    std::vector<free_vec> cols;
    for (int j = 0; j < B.ngens(); ++j) cols.push_back(f.cols()[static_cast<std::size_t>(j)]);
    for (int j = 0; j < C.ngens(); ++j) cols.push_back(g.cols()[static_cast<std::size_t>(j)].negated());
    module_map h = module_map::make_unchecked(S, f.target(), std::move(cols));
    submodule_data K = kernel(h);
    std::vector<free_vec> tb, tc;
    for (const auto& w : K.inclusion.cols()) {
        free_vec vb(B.cover()), vc(C.cover());
        for (int i = 0; i < B.ngens(); ++i) vb.at(i) = w.at(i);
        for (int i = 0; i < C.ngens(); ++i) vc.at(i) = w.at(B.ngens() + i);
        tb.push_back(std::move(vb));
        tc.push_back(std::move(vc));
    }
    return {K.sub, module_map::make_unchecked(K.sub, B, std::move(tb)),
            module_map::make_unchecked(K.sub, C, std::move(tc))};
}

// ---- hom -----------------------------------------------------------------------

std::vector<std::vector<scalar>> nullspace(const field& f, std::vector<std::vector<scalar>> rows, int ncols) {
    const std::size_t n = static_cast<std::size_t>(ncols);
    std::vector<int> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && f.is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        scalar inv = f.inv(rows[rank][col]);
        for (std::size_t c = 0; c < n; ++c) rows[rank][c] = f.mul(rows[rank][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || f.is_zero(rows[r][col])) continue;
            scalar m = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(m, rows[rank][c]));
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<scalar>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<scalar> v(n, f.zero());
        v[col] = f.one();
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] < 0) continue;
            v[c] = f.neg(rows[static_cast<std::size_t>(pivot_of_col[c])][col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct degree_basis {
    std::vector<mod_term> terms;
    std::map<std::pair<int, std::string>, int> index;
    explicit degree_basis(const presented_module& N, int d) {
        terms = N.std_basis(d);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            fnv1a h;
            std::string key;
            for (int v = 0; v < terms[i].m.nvars(); ++v) key += std::to_string(terms[i].m.exp(v)) + ",";
            index[{terms[i].pos, key}] = static_cast<int>(i);
        }
    }
    int find(int pos, const monomial& m) const {
        std::string key;
        for (int v = 0; v < m.nvars(); ++v) key += std::to_string(m.exp(v)) + ",";
        auto it = index.find({pos, key});
        return it == index.end() ? -1 : it->second;
    }
    // coordinates of a normal-form vector
    std::vector<scalar> coords(const field& f, const free_vec& nf) const {
        std::vector<scalar> out(terms.size(), f.zero());
        for (int pos = 0; pos < nf.rank(); ++pos)
            for (const auto& t : nf.at(pos).terms()) {
                int i = find(pos, t.m);
                if (i < 0) fail(err::bad_input, "vector is not in normal form for this basis");
                out[static_cast<std::size_t>(i)] = f.add(out[static_cast<std::size_t>(i)], t.c);
            }
        return out;
    }
};

free_vec term_vec(const presented_module& N, const mod_term& t, const scalar& c) {
    free_vec v(N.cover());
    v.at(t.pos) = poly::term_of(N.ring()->ambient(), t.m, c);
    return v;
}

}  // namespace

std::vector<graded_hom> hom_degree_basis(const presented_module& M, const presented_module& N, int d) {
    check_same_pring(M, N);
    const field& f = M.ring()->ambient()->coeffs();
    // unknown blocks: phi(e_j) in N_{s_j + d}
    std::vector<degree_basis> blocks;
    std::vector<int> offset;
    int total = 0;
    for (int j = 0; j < M.ngens(); ++j) {
        blocks.emplace_back(N, M.shift(j) + d);
        offset.push_back(total);
        total += static_cast<int>(blocks.back().terms.size());
    }
    if (total == 0) return {};
    std::vector<std::vector<scalar>> rows;
    for (const auto& r : M.rels()) {
        int target_deg = *r.degree() + d;
        degree_basis out_basis(N, target_deg);
        if (out_basis.terms.empty()) continue;
        std::vector<std::vector<scalar>> contrib(out_basis.terms.size(),
                                                 std::vector<scalar>(static_cast<std::size_t>(total), f.zero()));
        for (int j = 0; j < M.ngens(); ++j) {
            const poly& rj = r.at(j);
            if (rj.is_zero()) continue;
            for (std::size_t b = 0; b < blocks[static_cast<std::size_t>(j)].terms.size(); ++b) {
                free_vec bv = term_vec(N, blocks[static_cast<std::size_t>(j)].terms[b], f.one());
                free_vec prod = N.rel_gb().normal_form(bv.poly_mul(rj));
                std::vector<scalar> co = out_basis.coords(f, prod);
                for (std::size_t t = 0; t < co.size(); ++t)
                    contrib[t][static_cast<std::size_t>(offset[static_cast<std::size_t>(j)]) + b] =
                        f.add(contrib[t][static_cast<std::size_t>(offset[static_cast<std::size_t>(j)]) + b], co[t]);
            }
        }
        for (auto& row : contrib) rows.push_back(std::move(row));
    }
    std::vector<std::vector<scalar>> null = nullspace(f, std::move(rows), total);
    std::vector<graded_hom> out;
    for (const auto& v : null) {
        graded_hom h;
        h.degree = d;
        for (int j = 0; j < M.ngens(); ++j) {
            free_vec col(N.cover());
            for (std::size_t b = 0; b < blocks[static_cast<std::size_t>(j)].terms.size(); ++b) {
                const scalar& c = v[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)]) + b];
                if (f.is_zero(c)) continue;
                col = col.add(term_vec(N, blocks[static_cast<std::size_t>(j)].terms[b], c));
            }
            h.cols.push_back(std::move(col));
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<module_map> hom_elements_degree0(const presented_module& M, const presented_module& N) {
    std::vector<module_map> out;
    for (auto& h : hom_degree_basis(M, N, 0)) out.push_back(module_map::make(M, N, h.cols));
    return out;
}

hom_module_data hom_module(const presented_module& M, const presented_module& N) {
    check_same_pring(M, N);
    // Hom(M,N) = ker( (+)_i N(s_i) -> (+)_r N(d_r) ), blocks multiply by the
    // relation entries
    presented_module H0 = zero_module(M.ring());
    for (int i = 0; i < M.ngens(); ++i) H0 = direct_sum(H0, twist(N, M.shift(i)));
    if (M.ngens() == 0) {
        presented_module z = zero_module(M.ring());
        return {z, {}, H0, module_map::make_unchecked(z, H0, {})};
    }
    presented_module H1 = zero_module(M.ring());
    for (const auto& r : M.rels()) H1 = direct_sum(H1, twist(N, *r.degree()));
    const int bn = N.ngens();
    std::vector<free_vec> cols;
    for (int i = 0; i < M.ngens(); ++i)
        for (int k = 0; k < bn; ++k) {
            free_vec v(H1.cover());
            for (int r = 0; r < M.nrels(); ++r) {
                const poly& a = M.rels()[static_cast<std::size_t>(r)].at(i);
                if (a.is_zero()) continue;
                v.at(r * bn + k) = a;
            }
            cols.push_back(std::move(v));
        }
    module_map phi = M.nrels() == 0 ? module_map::zero_map(H0, H1)
                                    : module_map::make_unchecked(H0, H1, std::move(cols));
    submodule_data K = kernel(phi);
    hom_module_data out{K.sub, {}, H0, K.inclusion};
    for (const auto& w : K.inclusion.cols()) {
        graded_hom h;
        h.degree = 0;  // recorded per generator below via its shift
        for (int i = 0; i < M.ngens(); ++i) {
            free_vec col(N.cover());
            for (int k = 0; k < bn; ++k) col.at(k) = w.at(i * bn + k);
            h.cols.push_back(std::move(col));
        }
        out.gens.push_back(std::move(h));
    }
    for (std::size_t g = 0; g < out.gens.size(); ++g) out.gens[g].degree = K.sub.shift(static_cast<int>(g));
    return out;
}

// ---- free summands ----------------------------------------------------------

split_data split_free_summands(const presented_module& M0) {
    minimalized md = minimal_presentation_maps(M0);
    presented_module cur = md.m;
    module_map to_cur = md.to_min;      // M0 -> cur
    module_map from_cur = md.from_min;  // cur -> M0
    const pring_ptr& R = M0.ring();
    const field& f = R->ambient()->coeffs();

    std::vector<int> free_shifts;
    std::vector<module_map> free_proj;  // M0 -> R(-s)
    std::vector<module_map> free_sect;  // R(-s) -> M0
    std::vector<split_witness> wits;

    presented_module unit = free_module(R, {0});
    bool again = true;
    while (again && cur.ngens() > 0) {
        again = false;
        for (int j = 0; j < cur.ngens() && !again; ++j) {
            int s = cur.shift(j);
            for (auto& h : hom_degree_basis(cur, unit, -s)) {
                auto cval = h.cols[static_cast<std::size_t>(j)].at(0).constant_value();
                if (!cval) continue;
                // normalize so psi(e_j) = 1
                scalar inv = f.inv(*cval);
                presented_module Rs = free_module(R, {s});
                std::vector<free_vec> pcols;
                for (const auto& c : h.cols) pcols.push_back(free_vec(Rs.cover(), {c.at(0).scaled(inv)}));
                module_map psi = module_map::make(cur, Rs, pcols);
                module_map sigma = module_map::make(Rs, cur, {free_vec::basis(cur.cover(), j)});
                submodule_data ker = kernel(psi);
                // corestriction of id - sigma psi onto the kernel
                module_map defect = module_map::identity(cur).sub(sigma.compose(psi));
                std::vector<free_vec> picols;
                for (const auto& c : defect.cols()) {
                    auto coeffs = express_in_submodule(cur, ker.inclusion.cols(), c);
                    if (!coeffs) fail(err::split_failure, "splitting defect not inside the kernel");
                    free_vec u(ker.sub.cover());
                    for (int t = 0; t < ker.sub.ngens(); ++t) u.at(t) = (*coeffs)[static_cast<std::size_t>(t)];
                    picols.push_back(std::move(u));
                }
                module_map pi = module_map::make(cur, ker.sub, picols);

                free_shifts.push_back(s);
                free_proj.push_back(psi.compose(to_cur));
                free_sect.push_back(from_cur.compose(sigma));
                wits.push_back({j, psi.cols()});
                to_cur = pi.compose(to_cur);
                from_cur = from_cur.compose(ker.inclusion);
                cur = ker.sub;
                again = true;
                break;
            }
        }
    }

    split_data out;
    out.free_shifts = free_shifts;
    out.free_part = free_module(R, free_shifts);
    out.reduced = cur;
    out.sum = direct_sum(out.free_part, out.reduced);
    out.witnesses = std::move(wits);
    // assemble M0 -> sum and sum -> M0
    std::vector<free_vec> tcols;
    for (int i = 0; i < M0.ngens(); ++i) {
        free_vec v(out.sum.cover());
        for (std::size_t k = 0; k < free_proj.size(); ++k)
            v.at(static_cast<int>(k)) = free_proj[k].cols()[static_cast<std::size_t>(i)].at(0);
        for (int t = 0; t < cur.ngens(); ++t)
            v.at(static_cast<int>(free_shifts.size()) + t) = to_cur.cols()[static_cast<std::size_t>(i)].at(t);
        tcols.push_back(std::move(v));
    }
    out.to_sum = module_map::make(M0, out.sum, std::move(tcols));
    std::vector<free_vec> fcols;
    for (std::size_t k = 0; k < free_sect.size(); ++k) fcols.push_back(free_sect[k].cols()[0]);
    for (int t = 0; t < cur.ngens(); ++t) fcols.push_back(from_cur.cols()[static_cast<std::size_t>(t)]);
    out.from_sum = module_map::make(out.sum, M0, std::move(fcols));
    return out;
}

// ---- isomorphism ---------------------------------------------------------------

namespace {

bool surjective(const module_map& fm) {
    std::vector<free_vec> origs = fm.cols();
    for (auto& b : fm.target().rel_generators()) origs.push_back(std::move(b));
    gb_options opt;
    opt.track_reps = false;
    tracked_gb G(fm.target().cover(), module_order::shifted_top(), origs, opt);
    for (int j = 0; j < fm.target().ngens(); ++j)
        if (!G.contains(free_vec::basis(fm.target().cover(), j))) return false;
    return true;
}

std::optional<module_map> invert(const module_map& fm) {
    std::vector<free_vec> cols;
    for (int j = 0; j < fm.target().ngens(); ++j) {
        auto u = preimage(fm, free_vec::basis(fm.target().cover(), j));
        if (!u) return std::nullopt;
        cols.push_back(std::move(*u));
    }
    module_map g = module_map::make_unchecked(fm.target(), fm.source(), std::move(cols));
    if (!g.well_defined()) return std::nullopt;
    if (!g.compose(fm).equals_mod_relations(module_map::identity(fm.source()))) return std::nullopt;
    if (!fm.compose(g).equals_mod_relations(module_map::identity(fm.target()))) return std::nullopt;
    return g;
}

}  // namespace

iso_result is_isomorphic(const presented_module& M, const presented_module& N, std::uint64_t seed,
                         int attempts) {
    iso_result res;
    if (M.ring().get() != N.ring().get()) fail(err::ring_mismatch, "isomorphism test across rings");
    if (presentations_identical(M, N)) {
        res.verdict = iso_verdict::yes;
        res.fwd = module_map::identity(M);
        res.bwd = module_map::identity(M);
        res.detail = "identical presentations";
        return res;
    }
    minimalized mm = minimal_presentation_maps(M);
    minimalized nn = minimal_presentation_maps(N);
    // graded beta_0
    {
        std::multiset<int> a(mm.m.shifts().begin(), mm.m.shifts().end());
        std::multiset<int> b(nn.m.shifts().begin(), nn.m.shifts().end());
        if (a != b) {
            res.verdict = iso_verdict::no;
            res.detail = "graded generator counts differ";
            return res;
        }
    }
    // graded beta_1
    {
        std::multiset<int> a, b;
        for (const auto& c : mm.m.rels()) a.insert(*c.degree());
        for (const auto& c : nn.m.rels()) b.insert(*c.degree());
        if (a != b) {
            res.verdict = iso_verdict::no;
            res.detail = "graded relation counts differ";
            return res;
        }
    }
    // Hilbert function window
    {
        int lo = std::min(min_degree_bound(mm.m), min_degree_bound(nn.m));
        int hi = 0;
        for (int s : mm.m.shifts()) hi = std::max(hi, s);
        for (int s : nn.m.shifts()) hi = std::max(hi, s);
        for (const auto& c : mm.m.rels()) hi = std::max(hi, *c.degree());
        for (const auto& c : nn.m.rels()) hi = std::max(hi, *c.degree());
        hi += 2 * M.ring()->ambient()->max_weight();
        hi = std::min(hi, M.ring()->ambient()->degree_cap());
        for (int d = lo; d <= hi; ++d)
            if (mm.m.hilbert_function(d) != nn.m.hilbert_function(d)) {
                res.verdict = iso_verdict::no;
                res.detail = "Hilbert functions differ at degree " + std::to_string(d);
                return res;
            }
    }
    if (mm.m.ngens() == 0) {  // both zero
        res.verdict = iso_verdict::yes;
        res.fwd = nn.from_min.compose(module_map::make_unchecked(mm.m, nn.m, {})).compose(mm.to_min);
        res.bwd = mm.from_min.compose(module_map::make_unchecked(nn.m, mm.m, {})).compose(nn.to_min);
        return res;
    }
    // seeded search over the degree-0 hom space
    std::vector<graded_hom> basis = hom_degree_basis(mm.m, nn.m, 0);
    if (!basis.empty()) {
        const field& f = M.ring()->ambient()->coeffs();
        rng gen(seed);
        auto try_candidate = [&](const std::vector<free_vec>& cols) -> bool {
            module_map fm = module_map::make_unchecked(mm.m, nn.m, cols);
            if (!fm.well_defined() || !surjective(fm)) return false;
            if (!kernel(fm).sub.is_zero()) return false;
            auto g = invert(fm);
            if (!g) return false;
            res.verdict = iso_verdict::yes;
            res.fwd = nn.from_min.compose(fm).compose(mm.to_min);
            res.bwd = mm.from_min.compose(*g).compose(nn.to_min);
            return true;
        };
        int tried = 0;
        for (const auto& h : basis) {
            if (tried++ >= attempts) break;
            if (try_candidate(h.cols)) return res;
        }
        while (tried++ < attempts) {
            std::vector<free_vec> cols(static_cast<std::size_t>(mm.m.ngens()), free_vec(nn.m.cover()));
            for (const auto& h : basis) {
                scalar c = f.of_int(static_cast<long>(gen.next(f.is_fp() ? f.prime() : 1000)));
                for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = cols[j].add(h.cols[j].scaled(c));
            }
            if (try_candidate(cols)) return res;
        }
    }
    res.verdict = iso_verdict::unknown;
    res.detail = "no isomorphism found within the attempt budget";
    return res;
}

// ---- minimal presentation with maps ----------------------------------------------

minimalized minimal_presentation_maps(const presented_module& M) {
    minimalize_data d = minimalize(M);
    minimalized out{d.m, module_map::make_unchecked(M, d.m, d.old_to_new),
                    module_map::make_unchecked(d.m, M, d.new_to_old)};
    return out;
}

// ---- induced syzygy maps -----------------------------------------------------------

module_map induced_syzygy_map(const module_map& h) {
    minimalized mx = minimal_presentation_maps(h.source());
    minimalized my = minimal_presentation_maps(h.target());
    module_map hm = my.to_min.compose(h).compose(mx.from_min);
    presented_module OX = syzygy_module(mx.m);
    presented_module OY = syzygy_module(my.m);
    if (OX.ngens() == 0 || OY.ngens() == 0) return module_map::zero_map(OX, OY);
    // generators of OX are the relation columns of min(X); push through h
    std::vector<free_vec> cols;
    for (const auto& w : mx.m.rels()) {
        free_vec v = hm.apply_vec(w);
        auto coeffs = express_in_submodule(my.m, my.m.rels(), v);
        if (!coeffs) fail(err::split_failure, "image of a syzygy not inside the target syzygies");
        free_vec u(OY.cover());
        for (int t = 0; t < OY.ngens(); ++t) u.at(t) = (*coeffs)[static_cast<std::size_t>(t)];
        cols.push_back(std::move(u));
    }
    return module_map::make(OX, OY, std::move(cols));
}

module_map induced_nth_syzygy_map(const module_map& h, int n) {
    module_map cur = h;
    for (int i = 0; i < n; ++i) cur = induced_syzygy_map(cur);
    return cur;
}

}  // namespace reduxalg
