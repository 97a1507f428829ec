#include "reduxalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reduxalg {

poly poly::constant(ring_ptr r, const scalar& c) {
    poly p(r);
    if (!r->coeffs().is_zero(c)) p.t_.push_back({r->one(), c});
    return p;
}

poly poly::variable(ring_ptr r, int i) {
    poly p(r);
    p.t_.push_back({r->var(i), r->coeffs().one()});
    return p;
}

poly poly::term_of(ring_ptr r, const monomial& m, const scalar& c) {
    poly p(r);
    if (!r->coeffs().is_zero(c)) p.t_.push_back({m, c});
    return p;
}

const term& poly::lead() const {
    if (t_.empty()) fail(err::bad_input, "lead term of zero polynomial");
    return t_.front();
}

poly poly::from_sorted(ring_ptr r, std::vector<term> ts) {
    poly p(std::move(r));
    p.t_ = std::move(ts);
    return p;
}

poly poly::collect(ring_ptr r, std::vector<term> ts) {
    const field& f = r->coeffs();
    std::stable_sort(ts.begin(), ts.end(),
                     [&](const term& a, const term& b) { return r->compare(a.m, b.m) > 0; });
    std::vector<term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = f.add(out.back().c, t.c);
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [&](const term& t) { return f.is_zero(t.c); });
    return from_sorted(std::move(r), std::move(out));
}

poly poly::add(const poly& o) const {
    check_same_ring(ring_, o.ring_);
    const field& f = ring_->coeffs();
    std::vector<term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = ring_->compare(t_[i].m, o.t_[j].m);
        if (c > 0)
            out.push_back(t_[i++]);
        else if (c < 0)
            out.push_back(o.t_[j++]);
        else {
            scalar s = f.add(t_[i].c, o.t_[j].c);
            if (!f.is_zero(s)) out.push_back({t_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
    return from_sorted(ring_, std::move(out));
}

poly poly::sub(const poly& o) const { return add(o.negated()); }

poly poly::negated() const {
    const field& f = ring_->coeffs();
    std::vector<term> out = t_;
    for (auto& t : out) t.c = f.neg(t.c);
    return from_sorted(ring_, std::move(out));
}

poly poly::scaled(const scalar& c) const {
    const field& f = ring_->coeffs();
    if (f.is_zero(c)) return zero(ring_);
    std::vector<term> out = t_;
    for (auto& t : out) t.c = f.mul(t.c, c);
    return from_sorted(ring_, std::move(out));
}

poly poly::mono_mul(const monomial& m, const scalar& c) const {
    const field& f = ring_->coeffs();
    if (f.is_zero(c)) return zero(ring_);
    std::vector<term> out;
    out.reserve(t_.size());
    int cap = ring_->degree_cap();
    for (const auto& t : t_) out.push_back({t.m.times(m, cap), f.mul(t.c, c)});
    return from_sorted(ring_, std::move(out));
}

poly poly::mul(const poly& o) const {
    check_same_ring(ring_, o.ring_);
    poly acc = zero(ring_);
    // accumulate the smaller side over the bigger one
    const poly& a = t_.size() <= o.t_.size() ? *this : o;
    const poly& b = t_.size() <= o.t_.size() ? o : *this;
    for (const auto& t : a.t_) acc = acc.add(b.mono_mul(t.m, t.c));
    return acc;
}

bool poly::equals(const poly& o) const {
    if (ring_.get() != o.ring_.get() || t_.size() != o.t_.size()) return false;
    const field& f = ring_->coeffs();
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || !f.eq(t_[i].c, o.t_[i].c)) return false;
    return true;
}

std::optional<int> poly::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = t_.front().m.wdeg();
    for (const auto& t : t_)
        if (t.m.wdeg() != d) fail(err::inhomogeneous, "inhomogeneous polynomial: " + str());
    return d;
}

bool poly::is_homogeneous() const {
    for (const auto& t : t_)
        if (t.m.wdeg() != t_.front().m.wdeg()) return false;
    return true;
}

int poly::wdeg() const { return lead().m.wdeg(); }

std::optional<scalar> poly::constant_value() const {
    if (t_.size() == 1 && t_.front().m.is_one()) return t_.front().c;
    return std::nullopt;
}

bool poly::has_constant_term() const {
    return !t_.empty() && t_.back().m.is_one();
}

std::string poly::str() const {
    if (t_.empty()) return "0";
    const field& f = ring_->coeffs();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        std::string c = f.str(t.c);
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) os << "-", c = c.substr(1);
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = c.substr(1);
        }
        first = false;
        bool unit_coeff = c == "1";
        if (!unit_coeff || t.m.is_one()) os << c;
        bool any = !unit_coeff || t.m.is_one();
        for (int i = 0; i < t.m.nvars(); ++i) {
            int e = t.m.exp(i);
            if (e == 0) continue;
            if (any) os << "*";
            os << ring_->vars()[static_cast<std::size_t>(i)];
            if (e > 1) os << "^" << e;
            any = true;
        }
    }
    return os.str();
}

std::uint64_t poly::content_hash() const {
    fnv1a h;
    h.feed(str());
    return h.value();
}

// ---- parsing ----------------------------------------------------------

namespace {

struct poly_lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return s[i++];
    }
};

int parse_uint(poly_lexer& lx) {
    lx.skip();
    if (lx.i >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
        fail(err::bad_input, "expected number in polynomial: " + lx.s);
    long v = 0;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
        v = v * 10 + (lx.s[lx.i] - '0');
        if (v > 1000000000L) fail(err::bad_input, "numeric literal too large");
        ++lx.i;
    }
    return static_cast<int>(v);
}

std::string parse_ident(poly_lexer& lx) {
    lx.skip();
    std::string id;
    while (lx.i < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_')) {
        id += lx.s[lx.i++];
    }
    return id;
}

// factor := number | number '/' number | var ('^' number)?
// term   := factor ('*' factor)*
poly parse_term(const ring_ptr& r, poly_lexer& lx) {
    const field& f = r->coeffs();
    scalar coeff = f.one();
    monomial m = r->one();
    bool more = true;
    while (more) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int num = parse_uint(lx);
            if (lx.peek() == '/') {
                lx.get();
                int den = parse_uint(lx);
                if (f.is_fp())
                    coeff = f.mul(coeff, f.div(f.of_int(num), f.of_int(den)));
                else
                    coeff = f.mul(coeff, scalar::rational(mpq_class(num, den)));
            } else {
                coeff = f.mul(coeff, f.of_int(num));
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = parse_ident(lx);
            int vi = r->var_index(id);
            if (vi < 0) fail(err::bad_input, "unknown variable '" + id + "'");
            int e = 1;
            if (lx.peek() == '^') {
                lx.get();
                e = parse_uint(lx);
            }
            for (int k = 0; k < e; ++k) m = m.times(r->var(vi), r->degree_cap());
        } else {
            fail(err::bad_input, "unexpected character in polynomial: " + std::string(1, c));
        }
        if (lx.peek() == '*') {
            lx.get();
        } else {
            more = false;
        }
    }
    poly p = poly::term_of(r, m, coeff);
    return p;
}

}  // namespace

poly parse_poly(const ring_ptr& r, const std::string& text) {
    poly_lexer lx{text};
    poly acc = poly::zero(r);
    bool neg = false;
    if (lx.peek() == '-') {
        lx.get();
        neg = true;
    } else if (lx.peek() == '+') {
        lx.get();
    }
    if (lx.eof()) fail(err::bad_input, "empty polynomial");
    while (true) {
        if (lx.peek() == '0') {
            // allow a literal zero term
        }
        poly t = parse_term(r, lx);
        acc = neg ? acc.sub(t) : acc.add(t);
        if (lx.eof()) break;
        char c = lx.get();
        if (c == '+')
            neg = false;
        else if (c == '-')
            neg = true;
        else
            fail(err::bad_input, "unexpected character in polynomial: " + std::string(1, c));
    }
    return acc;
}

}  // namespace reduxalg
