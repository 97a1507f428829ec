#include "reduxalg/freemod.hpp"

#include <sstream>

namespace reduxalg {

int module_order::compare(const free_module& F, int pos1, const monomial& m1, int pos2,
                          const monomial& m2) const {
    const ambient_ring& R = *F.ring();
    if (is_schreyer_) {
        // compare images m1 * lead(g_{pos1}) vs m2 * lead(g_{pos2}) in the target
        const mod_term& L1 = leads_[static_cast<std::size_t>(pos1)];
        const mod_term& L2 = leads_[static_cast<std::size_t>(pos2)];
        monomial u1 = m1.times(L1.m, R.degree_cap());
        monomial u2 = m2.times(L2.m, R.degree_cap());
        int d1 = u1.wdeg() + target_shifts_[static_cast<std::size_t>(L1.pos)];
        int d2 = u2.wdeg() + target_shifts_[static_cast<std::size_t>(L2.pos)];
        if (d1 != d2) return d1 > d2 ? 1 : -1;
        if (L1.pos != L2.pos) return L1.pos < L2.pos ? 1 : -1;
        int c = R.compare(u1, u2);
        if (c != 0) return c;
        if (pos1 != pos2) return pos1 < pos2 ? 1 : -1;
        return 0;
    }
    int d1 = m1.wdeg() + F.shift(pos1);
    int d2 = m2.wdeg() + F.shift(pos2);
    if (d1 != d2) return d1 > d2 ? 1 : -1;
    int c = R.compare(m1, m2);
    if (c != 0) return c;
    if (pos1 != pos2) return pos1 < pos2 ? 1 : -1;
    return 0;
}

free_vec::free_vec(freemod_ptr m) : mod_(std::move(m)) {
    comp_.assign(static_cast<std::size_t>(mod_->rank()), poly::zero(mod_->ring()));
}

free_vec::free_vec(freemod_ptr m, std::vector<poly> comps) : mod_(std::move(m)), comp_(std::move(comps)) {
    if (static_cast<int>(comp_.size()) != mod_->rank()) fail(err::dim_mismatch, "component count != rank");
}

free_vec free_vec::basis(const freemod_ptr& m, int i) {
    free_vec v(m);
    v.comp_[static_cast<std::size_t>(i)] = poly::constant(m->ring(), m->ring()->coeffs().one());
    return v;
}

bool free_vec::is_zero() const {
    for (const auto& p : comp_)
        if (!p.is_zero()) return false;
    return true;
}

std::optional<int> free_vec::degree() const {
    std::optional<int> d;
    for (int i = 0; i < rank(); ++i) {
        const poly& p = comp_[static_cast<std::size_t>(i)];
        if (p.is_zero()) continue;
        int di = *p.homogeneous_degree() + mod_->shift(i);
        if (d && *d != di) fail(err::inhomogeneous, "inhomogeneous free-module element");
        d = di;
    }
    return d;
}

free_vec free_vec::add(const free_vec& o) const {
    check_same_mod(*this, o);
    std::vector<poly> out;
    out.reserve(comp_.size());
    for (std::size_t i = 0; i < comp_.size(); ++i) out.push_back(comp_[i].add(o.comp_[i]));
    return free_vec(mod_, std::move(out));
}

free_vec free_vec::sub(const free_vec& o) const { return add(o.negated()); }

free_vec free_vec::negated() const {
    std::vector<poly> out;
    out.reserve(comp_.size());
    for (const auto& p : comp_) out.push_back(p.negated());
    return free_vec(mod_, std::move(out));
}

free_vec free_vec::scaled(const scalar& c) const {
    std::vector<poly> out;
    out.reserve(comp_.size());
    for (const auto& p : comp_) out.push_back(p.scaled(c));
    return free_vec(mod_, std::move(out));
}

free_vec free_vec::mono_mul(const monomial& m, const scalar& c) const {
    std::vector<poly> out;
    out.reserve(comp_.size());
    for (const auto& p : comp_) out.push_back(p.mono_mul(m, c));
    return free_vec(mod_, std::move(out));
}

free_vec free_vec::poly_mul(const poly& p) const {
    std::vector<poly> out;
    out.reserve(comp_.size());
    for (const auto& q : comp_) out.push_back(q.mul(p));
    return free_vec(mod_, std::move(out));
}

bool free_vec::equals(const free_vec& o) const {
    if (comp_.size() != o.comp_.size()) return false;
    for (std::size_t i = 0; i < comp_.size(); ++i)
        if (!comp_[i].equals(o.comp_[i])) return false;
    return true;
}

mod_term free_vec::lead(const module_order& ord) const {
    int best_pos = -1;
    const monomial* best_m = nullptr;
    for (int i = 0; i < rank(); ++i) {
        const poly& p = comp_[static_cast<std::size_t>(i)];
        if (p.is_zero()) continue;
        const monomial& m = p.lead().m;
        if (best_pos < 0 || ord.compare(*mod_, i, m, best_pos, *best_m) > 0) {
            best_pos = i;
            best_m = &m;
        }
    }
    if (best_pos < 0) fail(err::bad_input, "lead of zero element");
    return {best_pos, *best_m};
}

const scalar& free_vec::lead_coeff(const module_order& ord) const {
    mod_term t = lead(ord);
    return comp_[static_cast<std::size_t>(t.pos)].lead().c;
}

std::string free_vec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ", ";
        os << comp_[static_cast<std::size_t>(i)].str();
    }
    os << ")";
    return os.str();
}

}  // namespace reduxalg
