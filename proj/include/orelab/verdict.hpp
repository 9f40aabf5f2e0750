#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace orelab {

// Every property check lands on one of these. Holds is reserved for
// exhaustive scans and closed-form certificates; sampled evidence caps
// out at HoldsBounded, and Fails always carries a replayable witness.
enum class VerdictKind { Holds, HoldsBounded, Fails, Inconclusive };

std::string to_string(VerdictKind k);
VerdictKind verdict_kind_from(const std::string& s);

// A counterexample as named parts, each formatted in its ring's literal
// grammar so it can be parsed back and replayed.
struct Witness {
    std::vector<std::pair<std::string, std::string>> parts;
    std::string note;

    std::string str() const;
    nlohmann::json to_json() const;
    static Witness from_json(const nlohmann::json& j);
};

// What a bounded or sampled check actually covered.
struct Bounds {
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> pairs;
    std::optional<std::uint64_t> scanned;
    std::optional<std::uint64_t> seed;
    std::optional<int> deg_bound;
    std::optional<int> deg_p;
    std::optional<int> deg_phi;
    std::optional<int> j_max;
    std::string note;

    std::string str() const;
    nlohmann::json to_json() const;
    static Bounds from_json(const nlohmann::json& j);
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string property;
    std::string subject;
    std::optional<Witness> witness;      // first (canonical) witness
    std::vector<Witness> all_witnesses;  // every failing generator, when
                                         // the checker collects them
    std::optional<Bounds> bounds;
    std::string note;

    bool holds() const { return kind == VerdictKind::Holds; }
    bool fails() const { return kind == VerdictKind::Fails; }

    std::string str() const;
    // Key-sorted, so equal verdicts serialize byte for byte.
    nlohmann::json to_json() const;
    static Verdict from_json(const nlohmann::json& j);
};

} // namespace orelab
