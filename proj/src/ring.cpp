#include "reduxalg/ring.hpp"

#include <algorithm>

namespace reduxalg {

ambient_ring::ambient_ring(std::vector<std::string> vars, std::vector<int> weights, field f,
                           int degree_cap, ring_order order)
    : vars_(std::move(vars)), weights_(std::move(weights)), field_(f), degree_cap_(degree_cap), order_(order) {
    if (vars_.empty() || vars_.size() > static_cast<std::size_t>(max_vars))
        fail(err::bad_input, "between 1 and 8 variables are supported");
    if (weights_.size() != vars_.size()) fail(err::dim_mismatch, "weights/variables length mismatch");
    for (int w : weights_)
        if (w <= 0) fail(err::bad_input, "weights must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) fail(err::bad_input, "duplicate variable name " + vars_[i]);
    max_weight_ = *std::max_element(weights_.begin(), weights_.end());
    if (degree_cap_ < max_weight_) fail(err::bad_input, "degree cap below largest weight");
}

int ambient_ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

monomial ambient_ring::var(int i) const {
    std::vector<int> e(static_cast<std::size_t>(nvars()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(nvars(), e, weights_);
}

static void enumerate_rec(const ambient_ring& r, int remaining, int var, std::vector<int>& cur,
                          std::vector<monomial>& out) {
    if (var == r.nvars()) {
        if (remaining == 0) out.push_back(r.mono(cur));
        return;
    }
    if (var == r.nvars() - 1) {
        int w = r.weight(var);
        if (remaining % w == 0) {
            cur[static_cast<std::size_t>(var)] = remaining / w;
            out.push_back(r.mono(cur));
            cur[static_cast<std::size_t>(var)] = 0;
        }
        return;
    }
    int w = r.weight(var);
    for (int e = 0; e * w <= remaining; ++e) {
        cur[static_cast<std::size_t>(var)] = e;
        enumerate_rec(r, remaining - e * w, var + 1, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

std::vector<monomial> ambient_ring::monomials_of_degree(int d) const {
    std::vector<monomial> out;
    if (d < 0) return out;
    if (d > degree_cap_) fail(err::degree_cap, "monomial enumeration beyond degree cap");
    std::vector<int> cur(static_cast<std::size_t>(nvars()), 0);
    enumerate_rec(*this, d, 0, cur, out);
    std::sort(out.begin(), out.end(), [this](const monomial& a, const monomial& b) { return compare(a, b) > 0; });
    return out;
}

std::uint64_t ambient_ring::fingerprint() const {
    fnv1a h;
    h.feed_u64(field_.is_fp() ? field_.prime() : 0);
    for (const auto& v : vars_) h.feed(v);
    for (int w : weights_) h.feed_u64(static_cast<std::uint64_t>(w));
    h.feed_u64(order_ == ring_order::wdegrevlex ? 1 : 2);
    return h.value();
}

}  // namespace reduxalg
