#include "fcone/report.hpp"

#include <json.hpp>
#include <sstream>

namespace fcone::cli {

namespace {

using json = nlohmann::ordered_json;

std::string class_name(multiplicity::ClassVerdict v) {
    switch (v) {
        case multiplicity::ClassVerdict::Minimal: return "Minimal";
        case multiplicity::ClassVerdict::AlmostMinimal: return "AlmostMinimal";
        default: return "Neither";
    }
}

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::string join_idx(const std::vector<IndexResult>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    os << "]";
    return os.str();
}

std::string ring_line(const RingSpec& spec) {
    std::ostringstream os;
    if (spec.kind == RingKind::Polynomial) {
        os << "localized polynomial ring in ";
        for (size_t i = 0; i < spec.vars.size(); ++i) os << (i ? ", " : "") << spec.vars[i];
    } else {
        os << "semigroup ring k[[t^a : a in <";
        for (size_t i = 0; i < spec.sgens.size(); ++i) os << (i ? "," : "") << spec.sgens[i];
        os << ">]]";
    }
    return os.str();
}

std::string ideal_line(const RingSpec& spec) {
    std::ostringstream os;
    os << "(";
    if (spec.kind == RingKind::Polynomial) {
        for (size_t i = 0; i < spec.ideal_monos.size(); ++i)
            os << (i ? ", " : "") << to_string(spec.ideal_monos[i], spec.vars);
    } else {
        for (size_t i = 0; i < spec.ideal_exps.size(); ++i)
            os << (i ? ", " : "") << "t^" << spec.ideal_exps[i];
    }
    os << ")";
    return os.str();
}

std::string numerator_line(const std::optional<hilbert::Numerator>& h, int d) {
    if (!h) return "not stabilized within the truncation window";
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < h->size(); ++i) {
        long c = (*h)[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        long a = std::abs(c);
        if (a != 1 || i == 0) os << a;
        if (i == 1) os << (a != 1 ? "*L" : "L");
        if (i > 1) os << (a != 1 ? "*L^" : "L^") << i;
        first = false;
    }
    if (first) os << "0";
    os << ") / (1-L)^" << d;
    return os.str();
}

json report_json(const AnalysisReport& rep) {
    json j;
    j["kind"] = rep.spec.kind == RingKind::Polynomial ? "polynomial" : "semigroup";
    j["dim"] = rep.d;
    j["prime"] = rep.spec.bounds.prime;
    j["seed"] = rep.spec.bounds.seed;
    j["mu"] = rep.mu;
    j["e_ring"] = rep.e_ring;
    j["mixed"] = rep.mixed;
    j["mixed_crosschecked"] = rep.mixed_crosschecked;
    j["class"] = class_name(rep.classification.verdict);
    j["slack"] = rep.classification.slack;
    j["rm_index"] = to_string(rep.rm);
    json rs = json::array();
    for (const auto& r : rep.rm_samples) rs.push_back(to_string(r));
    j["rm_samples"] = rs;
    j["reduction_number"] = to_string(rep.r_ideal);
    json rr = json::array();
    for (const auto& r : rep.r_samples) rr.push_back(to_string(r));
    j["reduction_samples"] = rr;
    j["gamma_lb"] = rep.gamma_lb;
    j["phi_lb"] = rep.phi_lb;
    j["gamma_failed_at"] = rep.gamma_failed_at;
    j["gamma_witness"] = rep.gamma_witness;
    j["deficits"] = rep.deficits;
    j["corrections"] = rep.corrections;
    j["telescoping_checked"] = rep.lemma42_checked;
    j["telescoping_ok"] = rep.lemma42_ok;
    j["observed_mu"] = rep.observed_mu;
    j["theorem"] = rep.verdict.theorem_id;
    json hy = json::array();
    for (const auto& h : rep.verdict.hypotheses)
        hy.push_back(json{{"name", h.name}, {"certified", h.certified}});
    j["hypotheses"] = hy;
    j["predicted_numerator"] =
        rep.verdict.predicted ? json(*rep.verdict.predicted) : json();
    j["observed_numerator"] =
        rep.verdict.observed ? json(*rep.verdict.observed) : json();
    j["verdict"] = hilbert::to_string(rep.verdict.verdict);
    j["red_alert"] = rep.verdict.red_alert;
    j["cm_via_numerator"] = hilbert::to_string(rep.cm.via_numerator);
    j["cm_via_reduction"] = hilbert::to_string(rep.cm.via_corollary14);
    j["cm_via_dim1"] = hilbert::to_string(rep.cm.via_dim1);
    j["cm_length"] = rep.cm.corollary14_length;
    return j;
}

}  // namespace

std::string render_human(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "ring         " << ring_line(rep.spec) << "  (d = " << rep.d << ", p = "
       << rep.spec.bounds.prime << ")\n";
    os << "ideal        I = " << ideal_line(rep.spec) << ", mu(I) = " << rep.mu << "\n";
    os << "mixed        e_j(m|I) = " << join(rep.mixed)
       << (rep.mixed_crosschecked ? "  [cross-checked]" : "  [not cross-checked]") << "\n";
    os << "class        " << class_name(rep.classification.verdict)
       << " (slack " << rep.classification.slack << ")\n";
    os << "r(m|I)       " << to_string(rep.rm) << "  samples " << join_idx(rep.rm_samples)
       << "\n";
    os << "r(I)         " << to_string(rep.r_ideal) << "  samples "
       << join_idx(rep.r_samples) << "\n";
    os << "depth        certified gamma >= " << rep.gamma_lb << ", phi >= " << rep.phi_lb;
    if (!rep.gamma_witness.empty())
        os << "  (gamma chain stopped at degree " << rep.gamma_failed_at << " by "
           << rep.gamma_witness << ")";
    os << "\n";
    os << "deficits     " << join(rep.deficits);
    if (!rep.corrections.empty()) os << "  corrections " << join(rep.corrections);
    if (rep.lemma42_checked)
        os << "  telescoping " << (rep.lemma42_ok ? "ok" : "VIOLATED");
    os << "\n";
    os << "mu(I^n)      " << join(rep.observed_mu) << "\n";
    os << "theorem      " << rep.verdict.theorem_id << "\n";
    for (const auto& h : rep.verdict.hypotheses)
        os << "  hypothesis " << h.name << ": " << (h.certified ? "certified" : "UNCERTIFIED")
           << "\n";
    os << "predicted    " << numerator_line(rep.verdict.predicted, rep.d) << "\n";
    os << "observed     " << numerator_line(rep.verdict.observed, rep.d) << "\n";
    os << "verdict      " << hilbert::to_string(rep.verdict.verdict)
       << (rep.verdict.red_alert ? "  ** RED ALERT: certified mismatch **" : "") << "\n";
    os << "CM           numerator: " << hilbert::to_string(rep.cm.via_numerator)
       << ", reduction criterion: " << hilbert::to_string(rep.cm.via_corollary14);
    if (rep.cm.corollary14_length >= 0)
        os << " (l(I^2/(JI+mI^2)) = " << rep.cm.corollary14_length << ")";
    os << ", dim-1 criterion: " << hilbert::to_string(rep.cm.via_dim1) << "\n";
    return os.str();
}

std::string render_machine(const AnalysisReport& rep) { return report_json(rep).dump(2) + "\n"; }

std::string render_hilbert(const AnalysisReport& rep, bool js) {
    if (js) {
        json j;
        j["coeffs"] = rep.observed_mu;
        j["d"] = rep.d;
        j["numerator"] = rep.verdict.observed ? json(*rep.verdict.observed) : json();
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "mu(I^n), n = 0.." << rep.observed_mu.size() - 1 << ": " << join(rep.observed_mu)
       << "\n";
    os << "series       " << numerator_line(rep.verdict.observed, rep.d) << "\n";
    return os.str();
}

std::string render_mixedmult(const AnalysisReport& rep, bool js) {
    if (js) {
        json j;
        j["mixed"] = rep.mixed;
        j["crosschecked"] = rep.mixed_crosschecked;
        j["class"] = class_name(rep.classification.verdict);
        j["slack"] = rep.classification.slack;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "e_j(m|I), j = 0.." << rep.d << ": " << join(rep.mixed)
       << (rep.mixed_crosschecked ? "  [cross-checked]" : "  [not cross-checked]") << "\n";
    os << "class        " << class_name(rep.classification.verdict) << " (slack "
       << rep.classification.slack << ")\n";
    return os.str();
}

std::string render_reductions(const AnalysisReport& rep, bool js) {
    if (js) {
        json j;
        j["rm_index"] = to_string(rep.rm);
        json rs = json::array();
        for (const auto& r : rep.rm_samples) rs.push_back(to_string(r));
        j["rm_samples"] = rs;
        j["reduction_number"] = to_string(rep.r_ideal);
        j["deficits"] = rep.deficits;
        j["gamma_lb"] = rep.gamma_lb;
        j["phi_lb"] = rep.phi_lb;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "r(m|I)       " << to_string(rep.rm) << "  samples " << join_idx(rep.rm_samples)
       << "\n";
    os << "r(I)         " << to_string(rep.r_ideal) << "\n";
    os << "deficits     " << join(rep.deficits) << "\n";
    os << "depth        certified gamma >= " << rep.gamma_lb << ", phi >= " << rep.phi_lb
       << "\n";
    return os.str();
}

std::string render_search(const std::vector<SearchHit>& hits, bool js) {
    if (js) {
        json arr = json::array();
        for (const auto& h : hits) {
            json j;
            j["trial"] = h.trial;
            j["spec"] = print_spec(h.spec);
            j["report"] = report_json(h.report);
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    os << hits.size() << " hit(s)\n";
    for (const auto& h : hits) {
        os << "--- trial " << h.trial << " ---\n";
        os << print_spec(h.spec);
        os << render_human(h.report);
    }
    return os.str();
}

}  // namespace fcone::cli
