#include "reduxalg/groebner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace reduxalg {

namespace {

struct spair {
    int deg;
    int i, j;
    bool operator<(const spair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// cache state
struct cache_state {
    bool enabled = false;
    std::string dir;
    std::uint64_t seed = 1;
    gb_cache_stats stats;
};
cache_state& cache() {
    static cache_state c;
    return c;
}

}  // namespace

void set_gb_cache_dir(const std::string& dir, std::uint64_t spot_check_seed) {
    cache().enabled = true;
    cache().dir = dir;
    cache().seed = spot_check_seed;
    std::filesystem::create_directories(dir);
}

void disable_gb_cache() { cache().enabled = false; }

gb_cache_stats gb_cache_counters() { return cache().stats; }

// ---- division ----------------------------------------------------------

division_result tracked_gb::divide(const free_vec& v) const {
    const field& f = mod_->ring()->coeffs();
    division_result res{std::vector<poly>(gb_.size(), poly::zero(mod_->ring())), free_vec(mod_)};
    free_vec h = v;
    while (!h.is_zero()) {
        mod_term t = h.lead(ord_);
        const scalar& hc = h.at(t.pos).lead().c;
        bool reduced = false;
        for (std::size_t k = 0; k < gb_.size(); ++k) {
            mod_term lt = gb_[k].lead(ord_);
            if (lt.pos != t.pos || !lt.m.divides(t.m)) continue;
            monomial u = lt.m.quotient_of(t.m);
            scalar c = f.div(hc, gb_[k].at(lt.pos).lead().c);
            h = h.sub(gb_[k].mono_mul(u, c));
            res.quotients[k] = res.quotients[k].add(poly::term_of(mod_->ring(), u, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the lead term to the remainder
            poly lt_poly = poly::term_of(mod_->ring(), t.m, hc);
            res.remainder.at(t.pos) = res.remainder.at(t.pos).add(lt_poly);
            h.at(t.pos) = h.at(t.pos).sub(lt_poly);
        }
    }
    return res;
}

free_vec tracked_gb::normal_form(const free_vec& v) const { return divide(v).remainder; }

bool tracked_gb::contains(const free_vec& v) const { return normal_form(v).is_zero(); }

std::vector<poly> tracked_gb::express_in_originals(const free_vec& v) const {
    if (!tracked_) fail(err::bad_input, "representation tracking disabled for this basis");
    division_result d = divide(v);
    if (!d.remainder.is_zero()) fail(err::bad_input, "element is not in the submodule");
    std::vector<poly> out(orig_.size(), poly::zero(mod_->ring()));
    for (std::size_t k = 0; k < gb_.size(); ++k) {
        if (d.quotients[k].is_zero()) continue;
        for (std::size_t i = 0; i < orig_.size(); ++i)
            out[i] = out[i].add(rep_[k][i].mul(d.quotients[k]));
    }
    return out;
}

// ---- Buchberger --------------------------------------------------------

tracked_gb::tracked_gb(freemod_ptr mod, module_order ord, std::vector<free_vec> gens, gb_options opt)
    : mod_(std::move(mod)), ord_(std::move(ord)), tracked_(opt.track_reps) {
    for (const auto& g : gens) {
        if (g.mod().get() != mod_.get()) fail(err::ring_mismatch, "generator not in the stated free module");
        g.degree();  // homogeneity check
    }
    orig_ = gens;
    // cache lookup
    std::uint64_t key = 0;
    if (cache().enabled && opt.allow_cache) {
        fnv1a h;
        h.feed_u64(mod_->ring()->fingerprint());
        for (int s : mod_->shifts()) h.feed_u64(static_cast<std::uint64_t>(s) * 2654435761u + 17);
        for (const auto& g : gens) h.feed(g.str());
        h.feed_u64(ord_.is_schreyer() ? 2 : 1);
        h.feed_u64(opt.up_to_degree ? static_cast<std::uint64_t>(*opt.up_to_degree) + 1 : 0);
        h.feed_u64(tracked_ ? 1 : 0);
        key = h.value();
        if (load_from_cache(key)) return;
    }
    complete(std::move(gens), opt);
    interreduce();
    if (cache().enabled && opt.allow_cache) store_to_cache(key);
}

void tracked_gb::complete(std::vector<free_vec> gens, const gb_options& opt) {
    const field& f = mod_->ring()->coeffs();
    const bool rank1 = mod_->rank() == 1;
    trunc_ = opt.up_to_degree;

    auto push_gen = [&](free_vec g, std::vector<poly> rep) {
        scalar lc = g.lead_coeff(ord_);
        if (!f.eq(lc, f.one())) {
            scalar ic = f.inv(lc);
            g = g.scaled(ic);
            if (tracked_)
                for (auto& r : rep) r = r.scaled(ic);
        }
        gb_.push_back(std::move(g));
        if (tracked_) rep_.push_back(std::move(rep));
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<poly> rep;
        if (tracked_) {
            rep.assign(orig_.size(), poly::zero(mod_->ring()));
            rep[i] = poly::constant(mod_->ring(), f.one());
        }
        push_gen(gens[i], std::move(rep));
    }

    std::set<spair> pairs;
    auto add_pairs_for = [&](int k) {
        mod_term lk = gb_[static_cast<std::size_t>(k)].lead(ord_);
        for (int l = 0; l < k; ++l) {
            mod_term ll = gb_[static_cast<std::size_t>(l)].lead(ord_);
            if (ll.pos != lk.pos) continue;
            if (rank1 && ll.m.coprime(lk.m)) continue;  // Buchberger's first criterion
            monomial lcm = ll.m.lcm_with(lk.m, mod_->ring()->weights());
            int deg = lcm.wdeg() + mod_->shift(lk.pos);
            if (opt.up_to_degree && deg > *opt.up_to_degree) continue;
            pairs.insert({deg, l, k});
        }
    };
    for (int k = 0; k < static_cast<int>(gb_.size()); ++k) add_pairs_for(k);

    while (!pairs.empty()) {
        spair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const free_vec& gi = gb_[static_cast<std::size_t>(pr.i)];
        const free_vec& gj = gb_[static_cast<std::size_t>(pr.j)];
        mod_term li = gi.lead(ord_);
        mod_term lj = gj.lead(ord_);
        if (li.pos != lj.pos) continue;
        monomial lcm = li.m.lcm_with(lj.m, mod_->ring()->weights());
        monomial ui = li.m.quotient_of(lcm);
        monomial uj = lj.m.quotient_of(lcm);
        free_vec s = gi.mono_mul(ui, f.one()).sub(gj.mono_mul(uj, f.one()));
        std::vector<poly> rep;
        if (tracked_) {
            rep.assign(orig_.size(), poly::zero(mod_->ring()));
            for (std::size_t t = 0; t < orig_.size(); ++t)
                rep[t] = rep_[static_cast<std::size_t>(pr.i)][t]
                             .mono_mul(ui, f.one())
                             .sub(rep_[static_cast<std::size_t>(pr.j)][t].mono_mul(uj, f.one()));
        }
        // full reduction
        division_result d = divide(s);
        if (d.remainder.is_zero()) continue;
        if (tracked_) {
            for (std::size_t k = 0; k < gb_.size(); ++k) {
                if (d.quotients[k].is_zero()) continue;
                for (std::size_t t = 0; t < orig_.size(); ++t)
                    rep[t] = rep[t].sub(rep_[k][t].mul(d.quotients[k]));
            }
        }
        push_gen(d.remainder, std::move(rep));
        add_pairs_for(static_cast<int>(gb_.size()) - 1);
    }
}

void tracked_gb::interreduce() {
    const field& f = mod_->ring()->coeffs();
    // drop basis elements whose lead is divisible by another kept lead
    std::vector<int> order_idx(gb_.size());
    for (std::size_t i = 0; i < gb_.size(); ++i) order_idx[i] = static_cast<int>(i);
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        mod_term la = gb_[static_cast<std::size_t>(a)].lead(ord_);
        mod_term lb = gb_[static_cast<std::size_t>(b)].lead(ord_);
        return ord_.compare(*mod_, la.pos, la.m, lb.pos, lb.m) < 0;
    });
    std::vector<bool> removed(gb_.size(), false);
    for (std::size_t a = 0; a < order_idx.size(); ++a) {
        int k = order_idx[a];
        mod_term lk = gb_[static_cast<std::size_t>(k)].lead(ord_);
        for (std::size_t b = 0; b < a; ++b) {
            int l = order_idx[b];
            if (removed[static_cast<std::size_t>(l)]) continue;
            mod_term ll = gb_[static_cast<std::size_t>(l)].lead(ord_);
            if (ll.pos == lk.pos && ll.m.divides(lk.m)) {
                removed[static_cast<std::size_t>(k)] = true;
                break;
            }
        }
    }
    std::vector<free_vec> kept;
    std::vector<std::vector<poly>> kept_rep;
    for (int k : order_idx) {
        if (removed[static_cast<std::size_t>(k)]) continue;
        kept.push_back(gb_[static_cast<std::size_t>(k)]);
        if (tracked_) kept_rep.push_back(rep_[static_cast<std::size_t>(k)]);
    }
    gb_ = std::move(kept);
    rep_ = std::move(kept_rep);

    // tail reduction to a fixed point
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < gb_.size(); ++k) {
            free_vec g = gb_[k];
            std::vector<poly> rep = tracked_ ? rep_[k] : std::vector<poly>{};
            // temporarily mask element k by reducing only with others
            free_vec h = g;
            free_vec out(mod_);
            bool touched = false;
            while (!h.is_zero()) {
                mod_term t = h.lead(ord_);
                const scalar& hc = h.at(t.pos).lead().c;
                bool red = false;
                for (std::size_t l = 0; l < gb_.size(); ++l) {
                    if (l == k) continue;
                    mod_term ll = gb_[l].lead(ord_);
                    if (ll.pos != t.pos || !ll.m.divides(t.m)) continue;
                    monomial u = ll.m.quotient_of(t.m);
                    scalar c = f.div(hc, gb_[l].at(ll.pos).lead().c);
                    h = h.sub(gb_[l].mono_mul(u, c));
                    if (tracked_)
                        for (std::size_t ti = 0; ti < orig_.size(); ++ti)
                            rep[ti] = rep[ti].sub(rep_[l][ti].mono_mul(u, c));
                    red = true;
                    touched = true;
                    break;
                }
                if (!red) {
                    poly lt_poly = poly::term_of(mod_->ring(), t.m, hc);
                    out.at(t.pos) = out.at(t.pos).add(lt_poly);
                    h.at(t.pos) = h.at(t.pos).sub(lt_poly);
                }
            }
            if (touched) {
                gb_[k] = out;
                if (tracked_) rep_[k] = rep;
                changed = true;
            }
        }
    }
}

// ---- Schreyer ----------------------------------------------------------

freemod_ptr tracked_gb::syzygy_module() const {
    std::vector<int> shifts;
    shifts.reserve(gb_.size());
    for (const auto& g : gb_) shifts.push_back(*g.degree());
    return make_freemod(mod_->ring(), std::move(shifts));
}

module_order tracked_gb::schreyer_order() const {
    return module_order::schreyer(lead_terms(), mod_->shifts());
}

std::vector<free_vec> tracked_gb::schreyer_syzygies() const {
    const field& f = mod_->ring()->coeffs();
    freemod_ptr syzmod = syzygy_module();
    std::vector<free_vec> out;
    for (std::size_t i = 0; i < gb_.size(); ++i) {
        mod_term li = gb_[i].lead(ord_);
        for (std::size_t j = i + 1; j < gb_.size(); ++j) {
            mod_term lj = gb_[j].lead(ord_);
            if (li.pos != lj.pos) continue;
            monomial lcm = li.m.lcm_with(lj.m, mod_->ring()->weights());
            monomial ui = li.m.quotient_of(lcm);
            monomial uj = lj.m.quotient_of(lcm);
            free_vec s = gb_[i].mono_mul(ui, f.one()).sub(gb_[j].mono_mul(uj, f.one()));
            division_result d = divide(s);
            if (!d.remainder.is_zero())
                fail(err::bad_input, "S-pair did not reduce to zero on a completed basis");
            free_vec syz(syzmod);
            syz.at(static_cast<int>(i)) = poly::term_of(mod_->ring(), ui, f.one());
            syz.at(static_cast<int>(j)) = syz.at(static_cast<int>(j)).sub(poly::term_of(mod_->ring(), uj, f.one()));
            for (std::size_t k = 0; k < gb_.size(); ++k)
                syz.at(static_cast<int>(k)) = syz.at(static_cast<int>(k)).sub(d.quotients[k]);
            if (!syz.is_zero()) out.push_back(std::move(syz));
        }
    }
    return out;
}

std::vector<free_vec> tracked_gb::syzygies_of_originals() const {
    if (!tracked_) fail(err::bad_input, "representation tracking disabled for this basis");
    const field& f = mod_->ring()->coeffs();
    std::vector<int> shifts;
    for (const auto& o : orig_) {
        auto d = o.degree();
        shifts.push_back(d ? *d : 0);
    }
    freemod_ptr origmod = make_freemod(mod_->ring(), shifts);
    std::vector<free_vec> out;

    // quotients of each original over the basis
    std::vector<std::vector<poly>> q;
    q.reserve(orig_.size());
    for (const auto& o : orig_) {
        division_result d = divide(o);
        if (!d.remainder.is_zero()) fail(err::bad_input, "original does not reduce to zero");
        q.push_back(std::move(d.quotients));
    }

    // columns of Id - Rep*Q
    for (std::size_t i = 0; i < orig_.size(); ++i) {
        free_vec w(origmod);
        w.at(static_cast<int>(i)) = poly::constant(mod_->ring(), f.one());
        for (std::size_t l = 0; l < orig_.size(); ++l) {
            poly acc = poly::zero(mod_->ring());
            for (std::size_t k = 0; k < gb_.size(); ++k) {
                if (q[i][k].is_zero() || rep_[k][l].is_zero()) continue;
                acc = acc.add(rep_[k][l].mul(q[i][k]));
            }
            w.at(static_cast<int>(l)) = w.at(static_cast<int>(l)).sub(acc);
        }
        if (!w.is_zero()) out.push_back(std::move(w));
    }

    // Rep * (Schreyer syzygies)
    for (const auto& s : schreyer_syzygies()) {
        free_vec w(origmod);
        for (std::size_t l = 0; l < orig_.size(); ++l) {
            poly acc = poly::zero(mod_->ring());
            for (std::size_t k = 0; k < gb_.size(); ++k) {
                if (s.at(static_cast<int>(k)).is_zero() || rep_[k][l].is_zero()) continue;
                acc = acc.add(rep_[k][l].mul(s.at(static_cast<int>(k))));
            }
            w.at(static_cast<int>(l)) = acc;
        }
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

// ---- standard bases ----------------------------------------------------

std::vector<mod_term> tracked_gb::std_basis(int degree) const {
    std::vector<mod_term> out;
    std::vector<mod_term> leads = lead_terms();
    for (int pos = 0; pos < mod_->rank(); ++pos) {
        int d = degree - mod_->shift(pos);
        if (d < 0) continue;
        for (const monomial& m : mod_->ring()->monomials_of_degree(d)) {
            bool divisible = false;
            for (const auto& lt : leads) {
                if (lt.pos == pos && lt.m.divides(m)) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) out.push_back({pos, m});
        }
    }
    return out;
}

std::vector<mod_term> tracked_gb::lead_terms() const {
    std::vector<mod_term> out;
    out.reserve(gb_.size());
    for (const auto& g : gb_) out.push_back(g.lead(ord_));
    return out;
}

std::uint64_t tracked_gb::content_hash() const {
    fnv1a h;
    for (const auto& g : gb_) h.feed(g.str());
    return h.value();
}

bool tracked_gb::spot_check(std::uint64_t which) const {
    const field& f = mod_->ring()->coeffs();
    std::vector<std::pair<int, int>> candidates;
    for (std::size_t i = 0; i < gb_.size(); ++i)
        for (std::size_t j = i + 1; j < gb_.size(); ++j)
            if (gb_[i].lead(ord_).pos == gb_[j].lead(ord_).pos)
                candidates.push_back({static_cast<int>(i), static_cast<int>(j)});
    if (candidates.empty()) return true;
    auto [i, j] = candidates[which % candidates.size()];
    mod_term li = gb_[static_cast<std::size_t>(i)].lead(ord_);
    mod_term lj = gb_[static_cast<std::size_t>(j)].lead(ord_);
    monomial lcm = li.m.lcm_with(lj.m, mod_->ring()->weights());
    free_vec s = gb_[static_cast<std::size_t>(i)]
                     .mono_mul(li.m.quotient_of(lcm), f.one())
                     .sub(gb_[static_cast<std::size_t>(j)].mono_mul(lj.m.quotient_of(lcm), f.one()));
    return normal_form(s).is_zero();
}

// ---- disk cache --------------------------------------------------------
//
// Text format, one polynomial per line, parsed back against the live ring.
// A loaded basis is trusted only after a seeded S-pair spot check.

bool tracked_gb::load_from_cache(std::uint64_t key) {
    std::filesystem::path p = std::filesystem::path(cache().dir) / (hex64(key) + ".gb");
    std::ifstream in(p);
    if (!in) {
        ++cache().stats.misses;
        return false;
    }
    auto reject = [&](const char* why) {
        ++cache().stats.rejected;
        std::cerr << "[gb-cache] rejecting " << p.string() << ": " << why << ", recomputing\n";
        gb_.clear();
        rep_.clear();
        return false;
    };
    try {
        std::string tag;
        std::uint64_t fp = 0;
        std::size_t ngb = 0, norig = 0;
        int rank = 0;
        long trunc = -1;
        int tracked = 0;
        in >> tag >> fp >> rank >> ngb >> norig >> tracked >> trunc;
        in.ignore();
        if (tag != "RXGB1" || fp != mod_->ring()->fingerprint() || rank != mod_->rank() ||
            norig != orig_.size() || tracked != (tracked_ ? 1 : 0))
            return reject("header mismatch");
        auto read_vec = [&]() {
            std::vector<poly> comps;
            for (int i = 0; i < rank; ++i) {
                std::string line;
                if (!std::getline(in, line)) fail(err::bad_input, "truncated cache entry");
                comps.push_back(parse_poly(mod_->ring(), line));
            }
            return free_vec(mod_, std::move(comps));
        };
        for (std::size_t k = 0; k < ngb; ++k) gb_.push_back(read_vec());
        if (tracked_) {
            for (std::size_t k = 0; k < ngb; ++k) {
                std::vector<poly> row;
                for (std::size_t i = 0; i < norig; ++i) {
                    std::string line;
                    if (!std::getline(in, line)) fail(err::bad_input, "truncated cache entry");
                    row.push_back(parse_poly(mod_->ring(), line));
                }
                rep_.push_back(std::move(row));
            }
        }
        if (trunc >= 0) trunc_ = static_cast<int>(trunc);
        if (!spot_check(cache().seed)) return reject("spot check failed");
        // the representations must still express the basis
        if (tracked_) {
            for (std::size_t k = 0; k < gb_.size(); ++k) {
                free_vec acc(mod_);
                for (std::size_t i = 0; i < orig_.size(); ++i)
                    acc = acc.add(orig_[i].poly_mul(rep_[k][i]));
                if (!acc.equals(gb_[k])) return reject("representation check failed");
            }
        }
    } catch (const std::exception& e) {
        return reject(e.what());
    }
    ++cache().stats.hits;
    return true;
}

void tracked_gb::store_to_cache(std::uint64_t key) const {
    std::filesystem::path p = std::filesystem::path(cache().dir) / (hex64(key) + ".gb");
    std::ofstream out(p);
    if (!out) return;
    out << "RXGB1 " << mod_->ring()->fingerprint() << " " << mod_->rank() << " " << gb_.size() << " "
        << orig_.size() << " " << (tracked_ ? 1 : 0) << " " << (trunc_ ? *trunc_ : -1) << "\n";
    for (const auto& g : gb_)
        for (const auto& c : g.comps()) out << c.str() << "\n";
    if (tracked_)
        for (const auto& row : rep_)
            for (const auto& c : row) out << c.str() << "\n";
}

int initial_dim(const ring_ptr& r, const std::vector<mod_term>& leads) {
    int n = r->nvars();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& lt : leads) {
            bool support_inside = true;
            for (int v = 0; v < n; ++v) {
                if (lt.m.exp(v) > 0 && !(mask & (1u << v))) {
                    support_inside = false;
                    break;
                }
            }
            if (support_inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace reduxalg
