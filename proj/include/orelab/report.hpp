#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "orelab/catalog.hpp"

namespace orelab {

enum class Format { text, machine };

// "text" or "machine"; anything else is a ValidationError.
Format parse_format(const std::string& name);

// Everything `report` prints for one (R, sigma, delta): the hypothesis
// rows with branch/forward/converse, plus the idempotent inventory when
// the backend can produce one.
struct RingSurvey {
    HypothesisReport roundtrip;
    nlohmann::json profile;  // null when no inventory is available

    nlohmann::json to_json() const;
    std::string str() const;
};

RingSurvey survey(const QdPtr& qd, const Config& cfg = {});

void render(std::ostream& os, Format f, const Verdict& v);
void render(std::ostream& os, Format f, const RingSurvey& s);
void render(std::ostream& os, Format f, const EntryReport& r);

// The pass/fail matrix over catalog entries, in catalog order.
void render_catalog(std::ostream& os, Format f,
                    const std::vector<EntryReport>& reports);

}  // namespace orelab
