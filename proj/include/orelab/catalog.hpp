#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orelab/theorem_lab.hpp"

namespace orelab {

using WitnessParts = std::vector<std::pair<std::string, std::string>>;

// One pinned outcome for a named check on a catalog entry. `check` is a
// property name or one of lemma-stability, lemma-compat-f, lemma-rigid-sweep.
struct Expectation {
    std::string check;
    VerdictKind expected = VerdictKind::Inconclusive;
    // when set, the produced verdict's witness parts must match exactly
    std::optional<WitnessParts> witness;
    // when set, these parts must appear among the reported witnesses
    std::optional<WitnessParts> among;
    // independently documented witness, replayed through the checker
    std::optional<Witness> documented;
    std::string anchor;
};

struct CatalogEntry {
    std::string name;
    std::string headline;
    nlohmann::json ring;
    nlohmann::json sigma;
    nlohmann::json delta;
    std::vector<Expectation> expects;

    // pinned roundtrip shape
    std::string branch;        // "i", "ii", "iii" or "none"
    std::string branch_level;  // "certified" / "bounded", empty for "none"
    // forward transfer: either a verdict kind or a blocking hypothesis name
    std::optional<VerdictKind> forward;
    std::string forward_blocked;
    VerdictKind converse = VerdictKind::Inconclusive;

    QdPtr instantiate(const Config& cfg) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

struct CheckLine {
    std::string check;
    bool ok = false;
    std::string detail;
};

struct EntryReport {
    std::string name;
    bool ok = true;
    std::vector<CheckLine> lines;
    HypothesisReport roundtrip;

    nlohmann::json to_json() const;
    std::string str() const;  // one status line per check
};

// Runs the full roundtrip plus every pinned expectation for one entry.
EntryReport run_entry(const CatalogEntry& entry, const Config& cfg = {});

}  // namespace orelab
