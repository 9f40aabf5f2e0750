#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "orelab/config.hpp"
#include "orelab/ring.hpp"

namespace orelab {

// Unital ring endomorphism, validated at construction (additive and
// multiplicative on every pair for enumerable rings, on sampled pairs
// otherwise; sigma(1) = 1 always required).
class Endo {
  public:
    const RingPtr& ring() const;
    Elem operator()(const Elem& e) const;
    // Enumerable fast path (precomputed image table).
    std::uint32_t apply_index(std::uint32_t i) const;
    bool is_identity() const;
    const nlohmann::json& descriptor() const;
    std::string label() const;
    // Set when the descriptor is componentwise over a direct sum.
    const std::optional<std::pair<Endo, Endo>>& components() const;

  private:
    friend Endo make_endo(RingPtr, const nlohmann::json&, const Config&);
    friend std::vector<Endo> enumerate_endos(const RingPtr&, const Config&);
    struct Impl;
    explicit Endo(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

Endo make_endo(RingPtr ring, const nlohmann::json& spec,
               const Config& cfg = {});

// Every unital endomorphism of a small enumerable ring, found by
// backtracking over image assignments with additive propagation; ordered
// lexicographically by image table. CapError above cfg.endo_cap.
std::vector<Endo> enumerate_endos(const RingPtr& ring, const Config& cfg = {});

// sigma-derivation: additive with delta(ab) = sigma(a) delta(b) + delta(a) b.
class Derivation {
  public:
    const RingPtr& ring() const;
    Elem operator()(const Elem& e) const;
    std::uint32_t apply_index(std::uint32_t i) const;
    bool is_zero_map() const;
    const nlohmann::json& descriptor() const;
    std::string label() const;

  private:
    friend Derivation make_derivation(RingPtr, const Endo&,
                                      const nlohmann::json&, const Config&);
    struct Impl;
    explicit Derivation(std::shared_ptr<const Impl> impl)
        : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

Derivation make_derivation(RingPtr ring, const Endo& sigma,
                           const nlohmann::json& spec, const Config& cfg = {});

class QuasiDerivation;
using QdPtr = std::shared_ptr<const QuasiDerivation>;

// The pair (sigma, delta) together with the coefficient maps f_i^j of the
// expansion x^j r = sum_i f_i^j(r) x^i: f_i^j is the sum over all words
// in sigma, delta of length j with i sigmas (rightmost letter applied
// first), equivalently f_0^0 = id and
// f_i^j = sigma . f_{i-1}^{j-1} + delta . f_i^{j-1} with out-of-range
// terms zero.
class QuasiDerivation {
  public:
    static QdPtr make(RingPtr ring, Endo sigma, Derivation delta,
                      const Config& cfg = {});

    const RingPtr& ring() const { return ring_; }
    const Endo& sigma() const { return sigma_; }
    const Derivation& delta() const { return delta_; }
    nlohmann::json descriptor() const;
    std::string label() const;

    // Recurrence evaluation; memoized per layer on enumerable rings.
    Elem f(std::uint32_t i, std::uint32_t j, const Elem& r) const;
    std::uint32_t f_index(std::uint32_t i, std::uint32_t j,
                          std::uint32_t r) const;

    // Independent word-expansion evaluation (C(j, i) words); the oracle
    // the recurrence is tested against. CapError beyond the word cap.
    Elem f_oracle(std::uint32_t i, std::uint32_t j, const Elem& r) const;

    // Builds memo layers through j; call before using f_index inside a
    // parallel scan (growth is locked, reads after that are lock-free).
    void ensure(std::uint32_t j) const;

  private:
    QuasiDerivation(RingPtr ring, Endo sigma, Derivation delta,
                    const Config& cfg);
    Elem f_recurse(std::uint32_t i, std::uint32_t j, const Elem& r) const;

    RingPtr ring_;
    Endo sigma_;
    Derivation delta_;
    int word_cap_;

    static constexpr std::uint32_t max_layers = 64;
    mutable std::vector<std::vector<std::vector<std::uint16_t>>> layers_;
    mutable std::atomic<std::uint32_t> ready_{0};
    mutable std::mutex grow_mu_;
};

} // namespace orelab
