#include "reduxalg/presented.hpp"

#include <algorithm>
#include <sstream>

namespace reduxalg {

// ---- presented_ring ----------------------------------------------------

std::shared_ptr<const presented_ring> presented_ring::make(ring_ptr amb, std::vector<poly> ideal_gens) {
    auto R = std::shared_ptr<presented_ring>(new presented_ring());
    R->amb_ = amb;
    for (const auto& g : ideal_gens) {
        check_same_ring(g.ring(), amb);
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) {
            std::string offender;
            int d0 = g.terms().front().m.wdeg();
            for (const auto& t : g.terms())
                if (t.m.wdeg() != d0) offender = poly::term_of(amb, t.m, t.c).str();
            fail(err::inhomogeneous,
                 "inhomogeneous ideal generator " + g.str() + " (offending term " + offender + ")");
        }
        R->gens_.push_back(g);
    }
    freemod_ptr F = make_freemod(amb, {0});
    std::vector<free_vec> vs;
    for (const auto& g : R->gens_) vs.push_back(free_vec(F, {g}));
    R->gb_ = std::make_shared<const tracked_gb>(F, module_order::shifted_top(), vs);
    for (const auto& b : R->gb_->basis()) {
        const poly& p = b.at(0);
        if (p.has_constant_term()) fail(err::unit_ideal, "defining ideal is the unit ideal");
        R->gb_polys_.push_back(p);
    }
    fnv1a h;
    h.feed_u64(amb->fingerprint());
    h.feed_u64(R->gb_->content_hash());
    R->fingerprint_ = h.value();
    return R;
}

poly presented_ring::nf(const poly& p) const {
    if (gb_polys_.empty()) return p;
    free_vec v(gb_->mod(), {p});
    return gb_->normal_form(v).at(0);
}

pring_ptr make_ring(ring_ptr amb, std::vector<poly> ideal_gens) {
    return presented_ring::make(std::move(amb), std::move(ideal_gens));
}

pring_ptr make_ring(const std::vector<std::string>& vars, const std::vector<int>& weights,
                    const std::vector<std::string>& ideal_gens, field f, int degree_cap) {
    ring_ptr amb = make_ambient(vars, weights, f, degree_cap);
    std::vector<poly> gens;
    for (const auto& s : ideal_gens) gens.push_back(parse_poly(amb, s));
    return presented_ring::make(amb, std::move(gens));
}

pring_ptr quotient_ring(const pring_ptr& R, const std::vector<poly>& extra) {
    std::vector<poly> gens = R->ideal_gens();
    for (const auto& g : extra) gens.push_back(g);
    return presented_ring::make(R->ambient(), std::move(gens));
}

// ---- presented_module --------------------------------------------------

presented_module::presented_module(pring_ptr R, std::vector<int> shifts, std::vector<free_vec> relations,
                                   bool claim_minimal)
    : ring_(std::move(R)), shifts_(std::move(shifts)), minimal_(claim_minimal) {
    cover_ = make_freemod(ring_->ambient(), shifts_);
    std::vector<std::pair<std::pair<int, std::string>, free_vec>> cols;
    for (auto& c : relations) {
        if (c.rank() != static_cast<int>(shifts_.size()))
            fail(err::dim_mismatch, "relation column rank mismatch");
        std::vector<poly> comps;
        comps.reserve(c.comps().size());
        for (const auto& p : c.comps()) comps.push_back(ring_->nf(p));
        free_vec v(cover_, std::move(comps));
        if (v.is_zero()) continue;
        auto d = v.degree();  // homogeneity check
        cols.push_back({{*d, v.str()}, v});
    }
    std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& c : cols) rels_.push_back(std::move(c.second));
}

std::vector<free_vec> presented_module::ideal_base_columns() const {
    std::vector<free_vec> gens;
    for (const auto& q : ring_->ideal_basis())
        for (int j = 0; j < ngens(); ++j) {
            free_vec v(cover_);
            v.at(j) = q;
            gens.push_back(std::move(v));
        }
    return gens;
}

std::vector<free_vec> presented_module::rel_generators() const {
    std::vector<free_vec> gens = rels_;
    for (auto& v : ideal_base_columns()) gens.push_back(std::move(v));
    return gens;
}

const tracked_gb& presented_module::rel_gb() const {
    if (!relgb_)
        relgb_ = std::make_shared<const tracked_gb>(cover_, module_order::shifted_top(), rel_generators());
    return *relgb_;
}

int presented_module::hilbert_function(int degree) const { return rel_gb().quotient_dim(degree); }

bool presented_module::is_zero() const {
    for (int j = 0; j < ngens(); ++j)
        if (!rel_gb().contains(free_vec::basis(cover_, j))) return false;
    return true;
}

bool presented_module::entries_in_max_ideal() const {
    for (const auto& c : rels_)
        for (const auto& p : c.comps())
            if (p.has_constant_term()) return false;
    return true;
}

std::uint64_t presented_module::presentation_hash() const {
    fnv1a h;
    h.feed_u64(ring_->fingerprint());
    for (int s : shifts_) h.feed_u64(static_cast<std::uint64_t>(s) * 2654435761u + 1);
    for (const auto& c : rels_) h.feed(c.str());
    return h.value();
}

std::string presented_module::str() const {
    std::ostringstream os;
    os << "module(gens=" << ngens() << " shifts=[";
    for (int i = 0; i < ngens(); ++i) os << (i ? "," : "") << shifts_[static_cast<std::size_t>(i)];
    os << "] rels=" << nrels() << ")";
    return os.str();
}

bool presentations_identical(const presented_module& a, const presented_module& b) {
    if (a.ring().get() != b.ring().get()) return false;
    if (a.shifts() != b.shifts() || a.nrels() != b.nrels()) return false;
    for (int i = 0; i < a.nrels(); ++i)
        if (!a.rels()[static_cast<std::size_t>(i)].equals(b.rels()[static_cast<std::size_t>(i)])) return false;
    return true;
}

// ---- constructors ------------------------------------------------------

presented_module free_module(const pring_ptr& R, const std::vector<int>& shifts) {
    return presented_module(R, shifts, {}, true);
}

presented_module zero_module(const pring_ptr& R) { return presented_module(R, {}, {}, true); }

presented_module residue_field(const pring_ptr& R) {
    std::vector<free_vec> rels;
    freemod_ptr F = make_freemod(R->ambient(), std::vector<int>{0});
    for (int i = 0; i < R->ambient()->nvars(); ++i) {
        free_vec v(F);
        v.at(0) = poly::variable(R->ambient(), i);
        rels.push_back(std::move(v));
    }
    return presented_module(R, {0}, std::move(rels), true);
}

presented_module ideal_module(const pring_ptr& R, const std::vector<poly>& gens) {
    if (gens.empty()) fail(err::bad_input, "ideal module needs at least one generator");
    std::vector<poly> g;
    for (const auto& p : gens) {
        poly q = R->nf(p);
        if (q.is_zero()) fail(err::bad_input, "zero generator in ideal module");
        g.push_back(q);
    }
    std::vector<int> shifts;
    freemod_ptr F1 = make_freemod(R->ambient(), std::vector<int>{0});
    std::vector<free_vec> origs;
    for (const auto& p : g) {
        shifts.push_back(*p.homogeneous_degree());
        origs.push_back(free_vec(F1, {p}));
    }
    std::size_t t = origs.size();
    for (const auto& q : R->ideal_basis()) origs.push_back(free_vec(F1, {q}));
    tracked_gb G(F1, module_order::shifted_top(), origs);
    freemod_ptr Fg = make_freemod(R->ambient(), shifts);
    std::vector<free_vec> rels;
    for (const auto& s : G.syzygies_of_originals()) {
        free_vec v(Fg);
        bool nonzero = false;
        for (std::size_t i = 0; i < t; ++i) {
            poly e = R->nf(s.at(static_cast<int>(i)));
            if (!e.is_zero()) nonzero = true;
            v.at(static_cast<int>(i)) = e;
        }
        if (nonzero) rels.push_back(std::move(v));
    }
    presented_module raw(R, shifts, std::move(rels));
    auto keep = select_min_gens(raw.cover(), raw.rels(), raw.ideal_base_columns());
    std::vector<free_vec> kept;
    for (int i : keep) kept.push_back(raw.rels()[static_cast<std::size_t>(i)]);
    return presented_module(R, raw.shifts(), std::move(kept));
}

presented_module cyclic_module(const pring_ptr& R, const std::vector<poly>& ideal_gens) {
    freemod_ptr F = make_freemod(R->ambient(), std::vector<int>{0});
    std::vector<free_vec> rels;
    for (const auto& p : ideal_gens) {
        free_vec v(F);
        v.at(0) = p;
        rels.push_back(std::move(v));
    }
    return presented_module(R, {0}, std::move(rels));
}

// ---- functors ----------------------------------------------------------

presented_module twist(const presented_module& M, int a) {
    std::vector<int> shifts = M.shifts();
    for (int& s : shifts) s -= a;
    freemod_ptr F = make_freemod(M.ring()->ambient(), shifts);
    std::vector<free_vec> rels;
    for (const auto& c : M.rels()) rels.push_back(free_vec(F, c.comps()));
    return presented_module(M.ring(), shifts, std::move(rels), M.claims_minimal());
}

presented_module direct_sum(const presented_module& A, const presented_module& B) {
    check_same_pring(A, B);
    std::vector<int> shifts = A.shifts();
    shifts.insert(shifts.end(), B.shifts().begin(), B.shifts().end());
    freemod_ptr F = make_freemod(A.ring()->ambient(), shifts);
    std::vector<free_vec> rels;
    for (const auto& c : A.rels()) {
        free_vec v(F);
        for (int i = 0; i < A.ngens(); ++i) v.at(i) = c.at(i);
        rels.push_back(std::move(v));
    }
    for (const auto& c : B.rels()) {
        free_vec v(F);
        for (int i = 0; i < B.ngens(); ++i) v.at(A.ngens() + i) = c.at(i);
        rels.push_back(std::move(v));
    }
    return presented_module(A.ring(), shifts, std::move(rels), A.claims_minimal() && B.claims_minimal());
}

presented_module power_module(const presented_module& M, int copies) {
    if (copies < 0) fail(err::bad_input, "negative power");
    if (copies == 0) return zero_module(M.ring());
    presented_module acc = M;
    for (int i = 1; i < copies; ++i) acc = direct_sum(acc, M);
    return acc;
}

presented_module tensor(const presented_module& M, const presented_module& N) {
    check_same_pring(M, N);
    const int bm = M.ngens(), bn = N.ngens();
    std::vector<int> shifts;
    shifts.reserve(static_cast<std::size_t>(bm * bn));
    for (int i = 0; i < bm; ++i)
        for (int k = 0; k < bn; ++k) shifts.push_back(M.shift(i) + N.shift(k));
    freemod_ptr F = make_freemod(M.ring()->ambient(), shifts);
    auto idx = [&](int i, int k) { return i * bn + k; };
    std::vector<free_vec> rels;
    for (const auto& a : M.rels())
        for (int k = 0; k < bn; ++k) {
            free_vec v(F);
            for (int i = 0; i < bm; ++i) v.at(idx(i, k)) = a.at(i);
            rels.push_back(std::move(v));
        }
    for (const auto& b : N.rels())
        for (int i = 0; i < bm; ++i) {
            free_vec v(F);
            for (int k = 0; k < bn; ++k) v.at(idx(i, k)) = b.at(k);
            rels.push_back(std::move(v));
        }
    return presented_module(M.ring(), shifts, std::move(rels));
}

presented_module tensor_ring_quotient(const presented_module& M, const std::vector<poly>& J) {
    std::vector<free_vec> rels = M.rels();
    for (const auto& q : J) {
        if (q.is_zero()) continue;
        if (!q.is_homogeneous()) fail(err::inhomogeneous, "inhomogeneous quotient ideal");
        for (int j = 0; j < M.ngens(); ++j) {
            free_vec v(M.cover());
            v.at(j) = q;
            rels.push_back(std::move(v));
        }
    }
    return presented_module(M.ring(), M.shifts(), std::move(rels));
}

static void check_quotient_of(const pring_ptr& R, const pring_ptr& S) {
    if (R->ambient().get() != S->ambient().get())
        fail(err::ring_mismatch, "rings do not share an ambient polynomial ring");
    for (const auto& g : R->ideal_basis())
        if (!S->nf(g).is_zero()) fail(err::ring_mismatch, "target is not a quotient of the source ring");
}

presented_module to_ring(const presented_module& M, const pring_ptr& S) {
    check_quotient_of(M.ring(), S);
    return presented_module(S, M.shifts(), M.rels());
}

presented_module restrict_scalars(const presented_module& M, const pring_ptr& R) {
    check_quotient_of(R, M.ring());
    std::vector<free_vec> rels = M.rels();
    for (const auto& q : M.ring()->ideal_basis()) {
        poly qr = R->nf(q);
        if (qr.is_zero()) continue;
        for (int j = 0; j < M.ngens(); ++j) {
            free_vec v(M.cover());
            v.at(j) = qr;
            rels.push_back(std::move(v));
        }
    }
    return presented_module(R, M.shifts(), std::move(rels));
}

// ---- minimality --------------------------------------------------------

std::vector<int> select_min_gens(const freemod_ptr& F, const std::vector<free_vec>& candidates,
                                 const std::vector<free_vec>& base) {
    std::vector<int> order(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto da = candidates[static_cast<std::size_t>(a)].degree();
        auto db = candidates[static_cast<std::size_t>(b)].degree();
        int va = da ? *da : 0, vb = db ? *db : 0;
        if (va != vb) return va < vb;
        return candidates[static_cast<std::size_t>(a)].str() < candidates[static_cast<std::size_t>(b)].str();
    });
    std::vector<int> selected;
    std::vector<free_vec> span = base;
    gb_options opt;
    opt.track_reps = false;
    std::unique_ptr<tracked_gb> G;
    for (int i : order) {
        const free_vec& v = candidates[static_cast<std::size_t>(i)];
        if (v.is_zero()) continue;
        if (!G) G = std::make_unique<tracked_gb>(F, module_order::shifted_top(), span, opt);
        if (G->contains(v)) continue;
        selected.push_back(i);
        span.push_back(v);
        G = std::make_unique<tracked_gb>(F, module_order::shifted_top(), span, opt);
    }
    // selection order (degree ascending) is the canonical generator order
    return selected;
}

minimalize_data minimalize(const presented_module& M) {
    const pring_ptr& R = M.ring();
    const ring_ptr& amb = R->ambient();
    const field& f = amb->coeffs();

    std::vector<int> shifts = M.shifts();
    std::vector<free_vec> cols = M.rels();
    std::vector<int> alive;  // current row -> original generator index
    for (int i = 0; i < M.ngens(); ++i) alive.push_back(i);
    // original generator g written over the current generators
    std::vector<std::vector<poly>> to_cur;
    for (int g = 0; g < M.ngens(); ++g) {
        std::vector<poly> row(static_cast<std::size_t>(M.ngens()), poly::zero(amb));
        row[static_cast<std::size_t>(g)] = poly::constant(amb, f.one());
        to_cur.push_back(std::move(row));
    }

    while (true) {
        int ui = -1, uj = -1;
        scalar uc = f.zero();
        for (std::size_t j = 0; j < cols.size() && ui < 0; ++j) {
            for (std::size_t i = 0; i < alive.size(); ++i) {
                if (auto c = cols[j].at(static_cast<int>(i)).constant_value()) {
                    ui = static_cast<int>(i);
                    uj = static_cast<int>(j);
                    uc = *c;
                    break;
                }
            }
        }
        if (ui < 0) break;
        // relation col_uj reads: uc*e_ui + sum_{r != ui} a_r e_r = 0
        scalar minus_inv = f.neg(f.inv(uc));
        std::vector<poly> subst(alive.size(), poly::zero(amb));
        for (std::size_t r = 0; r < alive.size(); ++r) {
            if (static_cast<int>(r) == ui) continue;
            subst[r] = R->nf(cols[static_cast<std::size_t>(uj)].at(static_cast<int>(r)).scaled(minus_inv));
        }
        std::vector<free_vec> ncols;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (static_cast<int>(j) == uj) continue;
            poly coef = cols[j].at(ui);
            free_vec w = cols[j];
            if (!coef.is_zero())
                w = w.sub(cols[static_cast<std::size_t>(uj)].poly_mul(coef.scaled(f.inv(uc))));
            ncols.push_back(std::move(w));
        }
        for (auto& row : to_cur) {
            poly c = row[static_cast<std::size_t>(ui)];
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < alive.size(); ++r) {
                if (static_cast<int>(r) == ui) continue;
                row[r] = R->nf(row[r].add(subst[r].mul(c)));
            }
            row[static_cast<std::size_t>(ui)] = poly::zero(amb);
        }
        std::vector<int> nalive, nshifts;
        for (std::size_t r = 0; r < alive.size(); ++r) {
            if (static_cast<int>(r) == ui) continue;
            nalive.push_back(alive[r]);
            nshifts.push_back(shifts[r]);
        }
        freemod_ptr NF = make_freemod(amb, nshifts);
        std::vector<free_vec> packed;
        for (auto& c : ncols) {
            std::vector<poly> comps;
            for (std::size_t r = 0; r < alive.size(); ++r)
                if (static_cast<int>(r) != ui) comps.push_back(R->nf(c.at(static_cast<int>(r))));
            free_vec v(NF, std::move(comps));
            if (!v.is_zero()) packed.push_back(std::move(v));
        }
        for (auto& row : to_cur) {
            std::vector<poly> nrow;
            for (std::size_t r = 0; r < alive.size(); ++r)
                if (static_cast<int>(r) != ui) nrow.push_back(row[r]);
            row = std::move(nrow);
        }
        alive = std::move(nalive);
        shifts = std::move(nshifts);
        cols = std::move(packed);
    }

    presented_module pruned(R, shifts, cols);
    auto keep = select_min_gens(pruned.cover(), pruned.rels(), pruned.ideal_base_columns());
    std::vector<free_vec> kept;
    for (int i : keep) kept.push_back(pruned.rels()[static_cast<std::size_t>(i)]);
    presented_module out(R, shifts, std::move(kept), true);

    minimalize_data data{out, {}, {}};
    for (int g = 0; g < M.ngens(); ++g)
        data.old_to_new.push_back(free_vec(out.cover(), to_cur[static_cast<std::size_t>(g)]));
    for (std::size_t r = 0; r < alive.size(); ++r)
        data.new_to_old.push_back(free_vec::basis(M.cover(), alive[r]));
    return data;
}

presented_module minimal_presentation(const presented_module& M) {
    if (M.claims_minimal() && M.entries_in_max_ideal()) return M;
    return minimalize(M).m;
}

// ---- syzygies ----------------------------------------------------------

presented_module syzygy_module(const presented_module& M) {
    presented_module Mm = minimal_presentation(M);
    const pring_ptr& R = Mm.ring();
    const ring_ptr& amb = R->ambient();
    std::vector<free_vec> gens = Mm.rels();
    if (gens.empty()) return zero_module(R);
    std::vector<int> shifts;
    for (const auto& c : gens) shifts.push_back(*c.degree());
    std::vector<free_vec> origs = gens;
    for (auto& v : Mm.ideal_base_columns()) origs.push_back(std::move(v));
    tracked_gb G(Mm.cover(), module_order::shifted_top(), origs);
    freemod_ptr Fo = make_freemod(amb, shifts);
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
    auto keep = select_min_gens(raw.cover(), raw.rels(), raw.ideal_base_columns());
    std::vector<free_vec> kept;
    for (int i : keep) kept.push_back(raw.rels()[static_cast<std::size_t>(i)]);
    return presented_module(R, shifts, std::move(kept), true);
}

presented_module nth_syzygy(const presented_module& M, int n) {
    if (n < 0) fail(err::bad_input, "negative syzygy index");
    presented_module cur = minimal_presentation(M);
    for (int i = 0; i < n; ++i) cur = syzygy_module(cur);
    return cur;
}

// ---- graded numerics ---------------------------------------------------

int min_degree_bound(const presented_module& M) {
    int lo = 0;
    for (int s : M.shifts()) lo = std::min(lo, s);
    return lo;
}

long module_length(const presented_module& M) {
    if (M.ngens() == 0) return 0;
    int lo = min_degree_bound(M);
    const int w = M.ring()->ambient()->max_weight();
    const int cap = M.ring()->ambient()->degree_cap();
    long total = 0;
    int zero_run = 0;
    int max_shift = *std::max_element(M.shifts().begin(), M.shifts().end());
    for (int d = lo; d <= cap; ++d) {
        int h = M.hilbert_function(d);
        total += h;
        if (h == 0 && d >= max_shift)
            ++zero_run;
        else
            zero_run = 0;
        if (zero_run >= w) return total;
    }
    fail(err::not_stabilized, "module does not have finite length within the degree cap");
}

}  // namespace reduxalg
