#include "orelab/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "orelab/annihilators.hpp"
#include "orelab/catalog.hpp"
#include "orelab/errors.hpp"
#include "orelab/properties.hpp"
#include "orelab/report.hpp"

namespace orelab {

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

// Options shared by every ring-bound command.
struct Common {
    std::string name;
    std::string file;
    std::string format = "text";
    Config cfg;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--name", c.name, "catalog entry name");
    sub->add_option("--file", c.file,
                    "ring file with top-level keys ring, sigma, delta");
    sub->add_option("--format", c.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--seed", c.cfg.seed, "sample stream seed");
    sub->add_option("--samples", c.cfg.samples, "sampled pair/element budget");
    sub->add_option("--deg-bound", c.cfg.deg_bound,
                    "degree bound for splitting scans (-1 = automatic)");
    sub->add_option("--deg-p", c.cfg.deg_p, "degree bound for swept p");
    sub->add_option("--deg-phi", c.cfg.deg_phi,
                    "degree bound for annihilator members");
    sub->add_option("--scan-cap", c.cfg.scan_cap,
                    "upper bound for brute-force loops");
}

// Ring files keep the same descriptor grammars the catalog uses; sigma
// and delta default to identity and zero. Unknown keys are rejected.
QdPtr load_ring_file(const std::string& path, const Config& cfg) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open ring file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("ring file '" + path + "': " + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("ring file must hold one object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "ring" && key != "sigma" && key != "delta")
            throw ValidationError("ring file has unknown key '" + key + "'");
    }
    if (!doc.contains("ring"))
        throw ValidationError("ring file needs a 'ring' descriptor");
    RingPtr ring = build_ring(doc.at("ring"), cfg);
    nlohmann::json sig = doc.contains("sigma")
                             ? doc.at("sigma")
                             : nlohmann::json{{"kind", "identity"}};
    nlohmann::json del = doc.contains("delta")
                             ? doc.at("delta")
                             : nlohmann::json{{"kind", "zero"}};
    Endo sigma = make_endo(ring, sig, cfg);
    Derivation delta = make_derivation(ring, sigma, del, cfg);
    return QuasiDerivation::make(ring, sigma, delta, cfg);
}

QdPtr resolve_subject(const Common& c) {
    if (c.name.empty() == c.file.empty())
        throw ValidationError("give exactly one of --name or --file");
    if (!c.name.empty()) {
        const CatalogEntry* e = find_entry(c.name);
        if (!e) {
            std::string known;
            for (const auto& entry : catalog()) {
                if (!known.empty()) known += ", ";
                known += entry.name;
            }
            throw ValidationError("no catalog entry '" + c.name +
                                  "' (known: " + known + ")");
        }
        return e->instantiate(c.cfg);
    }
    return load_ring_file(c.file, c.cfg);
}

int verdict_exit(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Holds:
        case VerdictKind::HoldsBounded:
            return kOk;
        case VerdictKind::Fails:
            return kFails;
        case VerdictKind::Inconclusive:
            return kInconclusive;
    }
    return kUsage;
}

int cmd_report(const Common& c, std::ostream& out) {
    QdPtr qd = resolve_subject(c);
    RingSurvey s = survey(qd, c.cfg);
    render(out, parse_format(c.format), s);
    return kOk;
}

int cmd_check(const Common& c, const std::string& property, std::ostream& out) {
    QdPtr qd = resolve_subject(c);
    Verdict v = run_property(property, qd->ring(), qd, c.cfg);
    render(out, parse_format(c.format), v);
    return verdict_exit(v);
}

int cmd_mul(const Common& c, const std::string& p_text,
            const std::string& q_text, std::ostream& out) {
    QdPtr qd = resolve_subject(c);
    CtxPtr ctx = make_context(qd->ring(), qd);
    SkewPoly p = parse_skew_poly(ctx, p_text);
    SkewPoly q = parse_skew_poly(ctx, q_text);
    SkewPoly prod = p.mul(q);
    if (parse_format(c.format) == Format::machine)
        out << nlohmann::json{{"p", p.str()},
                              {"q", q.str()},
                              {"product", prod.str()}}
                   .dump(2)
            << "\n";
    else
        out << "(" << p.str() << ") * (" << q.str() << ") = " << prod.str()
            << "\n";
    return kOk;
}

int cmd_ann(const Common& c, const std::string& elem_text, bool left,
            bool principal, std::ostream& out) {
    QdPtr qd = resolve_subject(c);
    const RingPtr& ring = qd->ring();
    Elem a = ring->parse(elem_text);
    AnnSet ann = left ? (principal ? left_ann_principal(ring, a)
                                   : left_ann(ring, {a}))
                      : (principal ? right_ann_principal(ring, a)
                                   : right_ann(ring, {a}));
    std::optional<std::uint32_t> gen = left ? idempotent_generator_left(ann)
                                            : idempotent_generator_right(ann);
    nlohmann::json members = nlohmann::json::array();
    for (std::uint32_t i : ann.members.indices())
        members.push_back(ring->format(Elem(i)));
    if (parse_format(c.format) == Format::machine) {
        out << nlohmann::json{
                   {"generator", gen ? nlohmann::json(ring->format(Elem(*gen)))
                                     : nlohmann::json()},
                   {"members", members},
                   {"set", ann.generator}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << ann.generator << " has " << members.size() << " member(s):";
    for (const auto& m : members) out << " " << m.get<std::string>();
    out << "\n";
    out << "idempotent generator: "
        << (gen ? ring->format(Elem(*gen)) : std::string("NONE")) << "\n";
    return kOk;
}

int cmd_fmap(const Common& c, std::uint32_t i, std::uint32_t j,
             const std::string& elem_text, std::ostream& out) {
    QdPtr qd = resolve_subject(c);
    const RingPtr& ring = qd->ring();
    Elem r = ring->parse(elem_text);
    qd->ensure(j);
    Elem img = qd->f(i, j, r);
    if (parse_format(c.format) == Format::machine)
        out << nlohmann::json{{"i", i},
                              {"j", j},
                              {"arg", ring->format(r)},
                              {"value", ring->format(img)}}
                   .dump(2)
            << "\n";
    else
        out << "f_" << i << "^" << j << "(" << ring->format(r)
            << ") = " << ring->format(img) << "\n";
    return kOk;
}

int cmd_witness(const Common& c, const std::string& p_text, std::ostream& out) {
    QdPtr qd = resolve_subject(c);
    CtxPtr ctx = make_context(qd->ring(), qd);
    SkewPoly p = parse_skew_poly(ctx, p_text);
    PqBaerWitness w = build_pq_baer_witness(
        p, static_cast<std::uint32_t>(c.cfg.deg_phi),
        static_cast<std::uint32_t>(c.cfg.deg_phi), c.cfg);
    if (parse_format(c.format) == Format::machine) {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& e : w.e_parts) parts.push_back(qd->ring()->format(e));
        out << nlohmann::json{{"p", w.p.str()},
                              {"e_parts", parts},
                              {"e", qd->ring()->format(w.e)},
                              {"claim1_ok", w.claim1_ok},
                              {"claim2_ok", w.claim2_ok},
                              {"ann_members", w.ann_members},
                              {"expected", w.expected}}
                   .dump(2)
            << "\n";
    } else {
        out << w.str() << "\n";
    }
    return w.ok() ? kOk : kFails;
}

int cmd_paper(const Common& c, std::ostream& out) {
    std::vector<EntryReport> reports;
    bool all_ok = true;
    for (const auto& entry : catalog()) {
        if (!c.name.empty() && entry.name != c.name) continue;
        reports.push_back(run_entry(entry, c.cfg));
        all_ok = all_ok && reports.back().ok;
    }
    if (reports.empty())
        throw ValidationError("no catalog entry '" + c.name + "'");
    render_catalog(out, parse_format(c.format), reports);
    return all_ok ? kOk : kFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"desk-scale workbench for skew polynomial rings"};
    app.name("orelab");
    app.require_subcommand(1);

    Common common;

    auto* report = app.add_subcommand("report", "full hypothesis survey");
    add_common(report, common);

    auto* check = app.add_subcommand("check", "one property, exit-coded");
    std::string property;
    check->add_option("property", property, "property name")->required();
    add_common(check, common);

    auto* mul = app.add_subcommand("mul", "skew polynomial product");
    std::string p_text, q_text;
    mul->add_option("--p", p_text, "left factor")->required();
    mul->add_option("--q", q_text, "right factor")->required();
    add_common(mul, common);

    auto* ann = app.add_subcommand("ann", "annihilator set and generator");
    std::string elem_text;
    bool ann_left = false, ann_principal = false;
    ann->add_option("--elem", elem_text, "element literal")->required();
    ann->add_flag("--left", ann_left, "left annihilator instead of right");
    ann->add_flag("--principal", ann_principal,
                  "annihilate the whole principal ideal");
    add_common(ann, common);

    auto* fmap = app.add_subcommand("fmap", "evaluate one f_i^j map");
    std::uint32_t fi = 0, fj = 0;
    std::string fmap_elem;
    fmap->add_option("--i", fi, "which coefficient map")->required();
    fmap->add_option("--j", fj, "power of x")->required();
    fmap->add_option("--elem", fmap_elem, "element literal")->required();
    add_common(fmap, common);

    auto* witness = app.add_subcommand(
        "witness", "idempotent construction for r_S(pS) = eS");
    std::string w_text;
    witness->add_option("--p", w_text, "skew polynomial")->required();
    add_common(witness, common);

    auto* paper = app.add_subcommand("paper",
                                     "run the pinned catalog expectations");
    add_common(paper, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (report->parsed()) return cmd_report(common, out);
        if (check->parsed()) return cmd_check(common, property, out);
        if (mul->parsed()) return cmd_mul(common, p_text, q_text, out);
        if (ann->parsed())
            return cmd_ann(common, elem_text, ann_left, ann_principal, out);
        if (fmap->parsed()) return cmd_fmap(common, fi, fj, fmap_elem, out);
        if (witness->parsed()) return cmd_witness(common, w_text, out);
        if (paper->parsed()) return cmd_paper(common, out);
        err << "usage error: no command given\n";
        return kUsage;
    } catch (const HypothesisError& e) {
        err << "blocked: " << e.what() << "\n";
        return kInconclusive;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace orelab
