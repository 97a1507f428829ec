#ifndef REDUXALG_UTIL_HPP
#define REDUXALG_UTIL_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace reduxalg {

// Error taxonomy shared across the library. Semi-decisions (isomorphism
// tests, Hdim window verdicts) are returned as values, not thrown.
enum class err {
    ring_mismatch,
    dim_mismatch,
    inhomogeneous,
    degree_cap,
    division_by_zero,
    unit_ideal,
    ill_defined_map,
    bad_input,
    budget_exhausted,
    not_stabilized,
    split_failure,
    x_not_regular,
    x_not_annihilating,
    tor_obstruction,
};

class algebra_error : public std::runtime_error {
  public:
    algebra_error(err kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    err kind() const { return kind_; }

  private:
    err kind_;
};

[[noreturn]] inline void fail(err kind, const std::string& what) {
    throw algebra_error(kind, what);
}

// FNV-1a, used for content fingerprints in certificates and the GB cache.
struct fnv1a {
    std::uint64_t h = 1469598103934665603ULL;
    void feed(const void* data, std::size_t n) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    }
    void feed(const std::string& s) { feed(s.data(), s.size()); }
    void feed_u64(std::uint64_t v) { feed(&v, sizeof v); }
    std::uint64_t value() const { return h; }
};

std::string hex64(std::uint64_t v);

// Deterministic RNG handle. Every randomized search records its seed.
class rng {
  public:
    explicit rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}
    std::uint64_t seed() const { return seed_; }
    std::uint64_t next(std::uint64_t bound) {  // uniform in [0, bound)
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(eng_);
    }

  private:
    std::mt19937_64 eng_;
    std::uint64_t seed_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace reduxalg

#endif
