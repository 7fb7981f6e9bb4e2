#include "bgk/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "bgk/errors.hpp"

namespace bgk {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* kNoteCFamily =
    "c-family degrees are 2 n p^k - 2; the variant reading 2 n^k - 2 is rejected "
    "because k = 0 would give degree 0, impossible in the reduced homology of a "
    "connected space.";

const char* kNoteMhIndexing =
    "MH odd degrees for the factor Omega^3 S^{2 n_i - 1} are 2(n_i - 1) p - 3, the "
    "degree of its a[k=1,j=0] generator; the variant reading 2 n_i p - 3 matches no "
    "generator of that factor and is shown only with --verbose.";

SpaceReport make_space(std::string key, AlgebraPresentation pres) {
    PowerSeries s = poincare(pres, pres.trunc());
    return SpaceReport{std::move(key), std::move(pres), std::move(s)};
}

std::string regime_failure_message(const ApplicabilityVerdict& v, const GroupType& type, int p,
                                   long long chern) {
    switch (v.regime) {
        case Regime::PrimeTwoOutOfScope:
            return "p = 2 is out of scope (odd primes only)";
        case Regime::PDividesK:
            return "(" + std::to_string(p) + ",k)=1 fails: " + std::to_string(p) +
                   " divides k = " + std::to_string(chern);
        case Regime::PRegularOnly:
            return "n_l < p-1 fails (n_l = " + std::to_string(type.max_entry()) +
                   ", p-1 = " + std::to_string(p - 1) + "); no homology statement applies";
        case Regime::NotPRegular:
            return type.display() + " is not " + std::to_string(p) + "-regular (n_l = " +
                   std::to_string(type.max_entry()) + " > p = " + std::to_string(p) + ")";
        default:
            return "regime " + std::string(regime_name(v.regime)) + " not computable";
    }
}

}  // namespace

OutputDocument make_verdict_document(const std::string& raw, const GroupType& type, int p,
                                     long long chern) {
    OutputDocument doc;
    doc.group_raw = raw;
    doc.type = type;
    doc.prime = p;
    doc.chern = chern;
    doc.applicability = verdict(type, p, chern);
    return doc;
}

OutputDocument make_compute_document(const std::string& raw, const GroupType& type, int p,
                                     long long chern, int trunc, bool verbose) {
    OutputDocument doc;
    doc.group_raw = raw;
    doc.type = type;
    doc.prime = p;
    doc.chern = chern;
    doc.max_degree = trunc;
    doc.applicability = verdict(type, p, chern);

    switch (doc.applicability.regime) {
        case Regime::FullTheorem: {
            doc.spaces.push_back(make_space("BGk", bgk_homology(type, p, chern, trunc)));
            doc.spaces.push_back(make_space("Omega3G3", loops3_g3(type, p, trunc)));
            doc.spaces.push_back(make_space("BG", classifying_space_bg(type, p, trunc)));
            doc.spaces.push_back(make_space("G", group_g(type, p, trunc)));
            doc.mh = MhReport{mh_odd(type, p), std::nullopt};
            break;
        }
        case Regime::SU2Mod3: {
            doc.spaces.push_back(make_space("BGk", su2_mod3_bgk(chern, trunc)));
            doc.spaces.push_back(make_space("Omega3G3", anick_t(3, trunc)));
            doc.spaces.push_back(make_space("G", group_g(type, 3, trunc)));
            doc.mh = MhReport{mh_odd(type, 3), std::nullopt};
            break;
        }
        default:
            throw hypothesis_error(regime_failure_message(doc.applicability, type, p, chern));
    }
    if (verbose && doc.mh)
        doc.mh->printed_variant = mh_odd_printed_variant(type, p);
    doc.notes = {kNoteCFamily, kNoteMhIndexing};
    return doc;
}

OutputDocument make_generators_document(const std::string& raw, const GroupType& type, int p,
                                        int trunc, const std::string& space, bool verbose) {
    OutputDocument doc;
    doc.group_raw = raw;
    doc.type = type;
    doc.prime = p;
    doc.max_degree = trunc;
    doc.space_request = space;
    // No chern class here; the k-dependent verdict fields assume k = 1.
    doc.applicability = verdict(type, p, 1);
    if (doc.applicability.regime == Regime::PrimeTwoOutOfScope)
        throw hypothesis_error("p = 2 is out of scope (odd primes only)");
    if (!doc.applicability.p_regular)
        throw hypothesis_error(type.display() + " is not " + std::to_string(p) +
                               "-regular (n_l = " + std::to_string(type.max_entry()) +
                               " > p = " + std::to_string(p) + ")");

    if (space == "omega3g3")
        doc.spaces.push_back(make_space("Omega3G3", loops3_g3(type, p, trunc)));
    else if (space == "bg")
        doc.spaces.push_back(make_space("BG", classifying_space_bg(type, p, trunc)));
    else if (space == "g")
        doc.spaces.push_back(make_space("G", group_g(type, p, trunc)));
    else if (space == "anick")
        doc.spaces.push_back(make_space("Anick", anick_t(p, trunc)));
    else
        throw std::invalid_argument("unknown space \"" + space +
                                    "\" (expected omega3g3|bg|g|anick)");
    if (verbose && space == "omega3g3")
        doc.mh = MhReport{mh_odd(type, p), mh_odd_printed_variant(type, p)};
    doc.notes = {kNoteCFamily, kNoteMhIndexing};
    doc.notes.push_back("no chern class supplied; verdict fields involving k assume k = 1");
    return doc;
}

AuditReport run_oracle_audit(const OutputDocument& doc, int inject_degree) {
    AuditReport report;
    for (const SpaceReport& sp : doc.spaces) {
        for (int d = 0; d <= sp.pres.trunc(); ++d) {
            Int emitted = sp.series.coefficient(d);
            if (sp.key == "BGk" && d == inject_degree)
                emitted += 1;
            Int recomputed = monomial_count_oracle(sp.pres, d);
            ++report.checked;
            if (emitted != recomputed)
                report.mismatches.push_back({sp.key, d, emitted, recomputed});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// text

namespace {

struct Palette {
    bool on = false;
    std::string good(const std::string& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
    std::string warn(const std::string& s) const { return on ? "\033[33m" + s + "\033[0m" : s; }
    std::string bad(const std::string& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
};

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string regime_colored(const Palette& pal, Regime r) {
    const std::string name = regime_name(r);
    switch (r) {
        case Regime::FullTheorem:
        case Regime::SU2Mod3: return pal.good(name);
        case Regime::PRegularOnly: return pal.warn(name);
        default: return pal.bad(name);
    }
}

std::string generator_line(const Generator& g) {
    std::ostringstream os;
    os << "deg " << g.degree << "  " << kind_name(g.kind) << "  " << g.label << "  ["
       << family_formula(g.family);
    switch (g.family) {
        case Family::A:
        case Family::B:
            os << "; n=" << g.param << ", k=" << g.k << ", j=" << g.j;
            break;
        case Family::C:
            os << "; n=" << g.param << ", k=" << g.k;
            break;
        case Family::ABar:
        case Family::BBar:
            os << "; k=" << g.k;
            break;
        case Family::XBG:
        case Family::XG:
            os << "; n_i=" << g.param;
            break;
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string render_text(const OutputDocument& doc, bool color) {
    Palette pal{color};
    std::ostringstream os;
    os << "bgk " << kVersion << "\n";
    os << "inputs: group=" << doc.group_raw << "  type=" << doc.type.display() << "  p="
       << doc.prime;
    if (doc.chern) os << "  k=" << *doc.chern;
    if (doc.max_degree) os << "  N=" << *doc.max_degree;
    if (doc.space_request) os << "  space=" << *doc.space_request;
    os << "\n\n";

    const ApplicabilityVerdict& v = doc.applicability;
    os << "verdict: " << regime_colored(pal, v.regime) << "\n";
    os << "  p-regular (n_l <= p)      " << yesno(v.p_regular) << "\n";
    os << "  theorem cond (n_l < p-1)  " << yesno(v.theorem_condition) << "\n";
    os << "  (p,k) = 1                 " << yesno(v.coprime) << "\n";
    os << "  boundary map null         " << yesno(v.boundary_null) << "\n";
    os << "  gauge group splits        " << yesno(v.gauge_splits) << "\n";
    os << "  BGauge_k ~ BGauge_1       " << yesno(v.bgk_equiv_bg1) << "\n";
    if (v.su2_boundary_order)
        os << "  SU(2) boundary order      " << *v.su2_boundary_order << "\n";
    os << "  " << v.notes << "\n";

    for (const SpaceReport& sp : doc.spaces) {
        os << "\nspace " << sp.key << ": " << sp.pres.tag() << "\n";
        os << "  generators (" << sp.pres.generators().size() << "):\n";
        for (const Generator& g : sp.pres.generators())
            os << "    " << generator_line(g) << "\n";
        os << "  dims (degree: dimension):\n";
        for (int d = 0; d <= sp.pres.trunc(); ++d)
            os << "    " << d << ": " << sp.series.coefficient(d).str() << "\n";
    }

    if (doc.mh) {
        os << "\nMH odd degrees: " << join_ints(doc.mh->degrees) << "\n";
        if (doc.mh->printed_variant)
            os << "  printed-variant reading (not generator degrees): "
               << join_ints(*doc.mh->printed_variant) << "\n";
    }

    if (doc.audit) {
        const AuditReport& a = *doc.audit;
        os << "\noracle audit (exhaustive monomial count vs series):\n";
        for (const SpaceReport& sp : doc.spaces) {
            for (int d = 0; d <= sp.pres.trunc(); ++d) {
                auto mm = std::find_if(a.mismatches.begin(), a.mismatches.end(),
                                       [&](const AuditMismatch& m) {
                                           return m.space == sp.key && m.degree == d;
                                       });
                if (mm == a.mismatches.end()) {
                    os << "  " << sp.key << " deg " << d << ": "
                       << sp.series.coefficient(d).str() << " " << pal.good("PASS") << "\n";
                } else {
                    os << "  " << sp.key << " deg " << d << ": emitted " << mm->emitted.str()
                       << " != recomputed " << mm->recomputed.str() << " " << pal.bad("FAIL")
                       << "\n";
                }
            }
        }
        os << "  summary: " << a.checked << " checked, " << a.mismatches.size()
           << " mismatch(es): " << (a.passed() ? pal.good("PASS") : pal.bad("FAIL")) << "\n";
    }

    if (!doc.notes.empty()) {
        os << "\nnotes:\n";
        for (const std::string& n : doc.notes)
            os << "  - " << n << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// json

std::string render_json(const OutputDocument& doc) {
    ordered_json j;
    ordered_json inputs;
    inputs["group"] = doc.group_raw;
    inputs["name"] = doc.type.name.empty() ? ordered_json(nullptr) : ordered_json(doc.type.name);
    inputs["type_entries"] = doc.type.entries;
    inputs["prime"] = doc.prime;
    inputs["chern"] = doc.chern ? ordered_json(*doc.chern) : ordered_json(nullptr);
    inputs["max_degree"] = doc.max_degree ? ordered_json(*doc.max_degree) : ordered_json(nullptr);
    inputs["space"] =
        doc.space_request ? ordered_json(*doc.space_request) : ordered_json(nullptr);
    j["inputs"] = inputs;

    const ApplicabilityVerdict& v = doc.applicability;
    ordered_json jv;
    jv["regime"] = regime_name(v.regime);
    jv["p_regular"] = v.p_regular;
    jv["theorem_condition"] = v.theorem_condition;
    jv["coprime"] = v.coprime;
    jv["boundary_null"] = v.boundary_null;
    jv["gauge_splits"] = v.gauge_splits;
    jv["bgk_equiv_bg1"] = v.bgk_equiv_bg1;
    jv["su2_boundary_order"] =
        v.su2_boundary_order ? ordered_json(*v.su2_boundary_order) : ordered_json(nullptr);
    jv["notes"] = v.notes;
    j["verdict"] = jv;

    ordered_json spaces = ordered_json::object();
    for (const SpaceReport& sp : doc.spaces) {
        ordered_json js;
        js["tag"] = sp.pres.tag();
        js["prime"] = sp.pres.prime();
        js["trunc"] = sp.pres.trunc();
        ordered_json gens = ordered_json::array();
        for (const Generator& g : sp.pres.generators()) {
            ordered_json jg;
            jg["label"] = g.label;
            jg["family"] = family_name(g.family);
            jg["n"] = g.param;
            jg["k"] = g.k;
            jg["j"] = g.j;
            jg["degree"] = g.degree;
            jg["kind"] = kind_name(g.kind);
            jg["formula"] = family_formula(g.family);
            gens.push_back(jg);
        }
        js["generators"] = gens;
        ordered_json dims = ordered_json::array();
        // Dimensions as decimal strings: they outgrow 64-bit integers.
        for (int d = 0; d <= sp.pres.trunc(); ++d)
            dims.push_back(ordered_json::array({d, sp.series.coefficient(d).str()}));
        js["dims"] = dims;
        spaces[sp.key] = js;
    }
    if (doc.mh) {
        ordered_json jm;
        jm["degrees"] = doc.mh->degrees;
        if (doc.mh->printed_variant)
            jm["printed_variant_degrees"] = *doc.mh->printed_variant;
        spaces["MH_odd"] = jm;
    }
    j["spaces"] = spaces;

    ordered_json meta;
    meta["version"] = kVersion;
    meta["notes"] = doc.notes;
    if (doc.audit) {
        ordered_json ja;
        ja["passed"] = doc.audit->passed();
        ja["checked"] = doc.audit->checked;
        ordered_json mms = ordered_json::array();
        for (const AuditMismatch& m : doc.audit->mismatches) {
            ordered_json jm;
            jm["space"] = m.space;
            jm["degree"] = m.degree;
            jm["emitted"] = m.emitted.str();
            jm["recomputed"] = m.recomputed.str();
            mms.push_back(jm);
        }
        ja["mismatches"] = mms;
        meta["audit"] = ja;
    }
    j["meta"] = meta;

    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// csv

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const OutputDocument& doc) {
    std::string out = "space,degree,dimension\n";
    for (const SpaceReport& sp : doc.spaces)
        for (int d = 0; d <= sp.pres.trunc(); ++d)
            out += csv_escape(sp.key) + "," + std::to_string(d) + "," +
                   csv_escape(sp.series.coefficient(d).str()) + "\n";
    return out;
}

}  // namespace bgk
