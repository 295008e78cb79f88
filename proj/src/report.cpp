#include "cage_spectra/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace cage_spectra {

double round_significant(double x, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
    return std::strtod(buffer, nullptr);
}

std::string format_float(double x, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
    return buffer;
}

nlohmann::json json_integer(const mpz_class& z)
{
    if (z.fits_slong_p())
        return static_cast<long long>(z.get_si());
    return z.get_str();
}

std::string dump_json(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

namespace {

nlohmann::json json_float(double x)
{
    return round_significant(x);
}

nlohmann::json json_float(const Real& x)
{
    return round_significant(static_cast<double>(x));
}

nlohmann::json json_float(const mpq_class& x)
{
    return round_significant(x.get_d());
}

std::string verdict_text(Verdict v)
{
    return std::string(to_string(v));
}

nlohmann::json gap_json(const GapReport& gap)
{
    return {
        {"status", std::string(to_string(gap.status))},
        {"lower", json_float(gap.lower)},
        {"upper", json_float(gap.upper)},
        {"contains_integer", gap.contains_integer},
        {"inside_unit_interval", gap.inside_unit_interval},
        {"analytic_bound", json_float(gap.analytic_bound)},
        {"below_analytic_bound", gap.below_analytic_bound},
        {"chain",
            {
                {"lead", json_float(gap.chain_lead)},
                {"degree_term", json_float(gap.chain_degree)},
                {"excess_term", json_float(gap.chain_excess)},
                {"tail", json_float(gap.chain_tail)},
                {"holds", gap.chain_ok},
            }},
    };
}

nlohmann::json multiplicity_value(const MultiplicityEntry& m)
{
    if (m.status == IntegralityStatus::integral)
        return json_integer(m.nearest);
    return json_float(m.closed_form);
}

std::string multiplicity_text(const MultiplicityEntry& m)
{
    if (m.status == IntegralityStatus::integral)
        return m.nearest.get_str();
    return format_float(static_cast<double>(m.closed_form));
}

} // namespace

nlohmann::json to_json(const FeasibilityReport& r)
{
    nlohmann::json j;
    j["k"] = r.k;
    j["d"] = r.d;
    j["e"] = r.e;
    j["n"] = json_integer(r.n);
    j["verdict"] = verdict_text(r.verdict);
    j["notes"] = r.notes;

    auto eigenvalues = nlohmann::json::array();
    auto multiplicities = nlohmann::json::array();
    auto integrality = nlohmann::json::array();
    for (const auto& m : r.multiplicities) {
        eigenvalues.push_back(json_float(m.theta));
        multiplicities.push_back(multiplicity_value(m));
        integrality.push_back(std::string(to_string(m.status)));
    }
    j["eigenvalues"] = eigenvalues;
    j["multiplicities"] = multiplicities;
    j["integrality"] = integrality;

    auto roots = nlohmann::json::array();
    for (const auto& m : r.multiplicities) {
        if (m.trivial)
            continue;
        const auto& records = m.epsilon == 1 ? r.mu_roots : r.lambda_roots;
        const auto& rec = records[static_cast<std::size_t>(m.index - 1)];
        roots.push_back({
            {"epsilon", rec.epsilon},
            {"index", rec.index},
            {"eta", rec.eta},
            {"theta", json_float(rec.theta)},
            {"phi", json_float(rec.phi)},
            {"alpha", json_float(rec.alpha)},
            {"alpha_bound_ok", rec.alpha_sign_ok && rec.alpha_bound_ok},
            {"multiplicity", json_float(m.closed_form)},
            {"multiplicity_angle_form", json_float(m.trig)},
            {"enclosure", {json_float(m.enclosure.lower()), json_float(m.enclosure.upper())}},
            {"integrality", std::string(to_string(m.status))},
            {"nearest_integer", json_integer(m.nearest)},
            {"deviation", json_float(m.deviation)},
        });
    }
    j["roots"] = roots;
    j["max_integrality_deviation"] = json_float(r.max_integrality_deviation);
    j["multiplicity_sum"] = json_float(r.multiplicity_sum);
    j["max_dual_difference"] = json_float(r.max_dual_difference);

    double worst = 0.0;
    for (const auto& row : r.moments)
        worst = std::max(worst, row.relative_error);
    j["moments"] = {
        {"checked", !r.moments.empty()},
        {"passed", r.moments_ok},
        {"orders", r.moments.size()},
        {"worst_q", r.worst_moment_q},
        {"max_relative_error", json_float(worst)},
    };
    j["gap"] = r.gap ? gap_json(*r.gap) : nlohmann::json(nullptr);
    return j;
}

std::string to_text(const FeasibilityReport& r)
{
    std::ostringstream out;
    out << "k = " << r.k << ", d = " << r.d << ", e = " << r.e << ", n = " << r.n.get_str() << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    for (const auto& note : r.notes)
        out << "note: " << note << "\n";
    if (r.multiplicities.empty())
        return out.str();

    out << std::left << std::setw(24) << "eigenvalue" << std::setw(24) << "multiplicity" << "integrality\n";
    for (const auto& m : r.multiplicities)
        out << std::setw(24) << format_float(static_cast<double>(m.theta)) << std::setw(24) << multiplicity_text(m)
            << to_string(m.status) << "\n";
    out << "sum of multiplicities: " << format_float(static_cast<double>(r.multiplicity_sum)) << "\n";
    out << "max integrality deviation: " << format_float(r.max_integrality_deviation) << "\n";
    out << "closed vs angle form, max relative difference: " << format_float(r.max_dual_difference) << "\n";
    double worst = 0.0;
    for (const auto& row : r.moments)
        worst = std::max(worst, row.relative_error);
    out << "moments q = 0.." << (r.moments.empty() ? 0 : r.moments.size() - 1) << ": "
        << (r.moments_ok ? "passed" : "failed") << " (worst relative error " << format_float(worst) << " at q = "
        << r.worst_moment_q << ")\n";
    if (r.gap) {
        const auto& g = *r.gap;
        out << "gap lambda_2^2 - mu_2^2 in [" << format_float(g.lower.get_d()) << ", " << format_float(g.upper.get_d())
            << "]: " << to_string(g.status) << (g.contains_integer ? " (contains an integer)" : " (no integer)")
            << "\n";
        out << "analytic bound: " << format_float(g.analytic_bound)
            << (g.below_analytic_bound ? " (interval below it)" : " (interval NOT below it)") << "\n";
        out << "chain " << format_float(g.chain_lead) << " > " << format_float(g.chain_degree)
            << " >= " << format_float(g.chain_excess) << " > " << format_float(g.chain_tail) << ": "
            << (g.chain_ok ? "holds" : "fails") << "\n";
    }
    return out.str();
}

std::string to_csv_row(const FeasibilityReport& r)
{
    std::ostringstream out;
    out << r.k << ',' << r.d << ',' << r.e << ',' << r.n.get_str() << ',' << to_string(r.verdict) << ',';
    if (r.gap && r.gap->status != GapStatus::outside_regime)
        out << format_float(r.gap->lower.get_d()) << ',' << format_float(r.gap->upper.get_d());
    else
        out << ',';
    out << ',';
    if (!r.multiplicities.empty())
        out << format_float(r.max_integrality_deviation);
    return out.str();
}

VerifyOutcome verify_graph(const Graph& g, std::string source, int k, int d, int e)
{
    VerifyOutcome v;
    v.source = std::move(source);
    v.k = k;
    v.d = d;
    v.e = e;
    v.structural = structural_check(g, k, d, e);
    v.distance_identity = verify_distance_identity(g, k, d, e);
    v.ones_identity = verify_ones_identity(g, k, d, e);
    v.spectral = spectral_crosscheck(g, k, d, e);
    return v;
}

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& x)
{
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

nlohmann::json identity_json(const IdentityCheck& c)
{
    return {
        {"refused", c.refused},
        {"reason", c.reason},
        {"max_abs_residual", json_integer(c.max_abs_residual)},
        {"holds", c.holds()},
    };
}

std::string identity_text(const IdentityCheck& c)
{
    if (c.refused)
        return "refused (" + c.reason + ")";
    return c.holds() ? "holds (residual 0)" : "FAILS (max residual " + c.max_abs_residual.get_str() + ")";
}

std::string pass_word(bool ok)
{
    return ok ? "pass" : "fail";
}

} // namespace

nlohmann::json to_json(const VerifyOutcome& v)
{
    const auto& s = v.structural;
    nlohmann::json spectral = {
        {"refused", v.spectral.refused},
        {"reason", v.spectral.reason},
        {"ok", v.spectral.ok},
        {"max_deviation", json_float(v.spectral.max_deviation)},
        {"trivial_count", v.spectral.trivial_count},
        {"target_hits", v.spectral.target_hits},
    };
    auto targets = nlohmann::json::array();
    for (double t : v.spectral.targets)
        targets.push_back(json_float(t));
    spectral["targets"] = targets;

    return {
        {"source", v.source},
        {"k", v.k},
        {"d", v.d},
        {"e", v.e},
        {"passed", v.passed()},
        {"structural",
            {
                {"order", s.order},
                {"degree", optional_json(s.degree)},
                {"girth", optional_json(s.girth)},
                {"diameter", optional_json(s.diameter)},
                {"bipartite", s.bipartite},
                {"excess", json_integer(s.excess)},
                {"antipodes_per_vertex", optional_json(s.antipodes_per_vertex)},
                {"antipodal_cliques", s.antipodal_cliques_ok},
                {"clique_count", optional_json(s.clique_count)},
                {"failures", s.failures},
                {"regime_notes", s.regime_notes},
                {"passed", s.passed()},
            }},
        {"distance_identity", identity_json(v.distance_identity)},
        {"ones_identity", identity_json(v.ones_identity)},
        {"spectral", spectral},
    };
}

std::string to_text(const VerifyOutcome& v)
{
    const auto& s = v.structural;
    std::ostringstream out;
    out << v.source << " (k = " << v.k << ", d = " << v.d << ", e = " << v.e << ")\n";
    out << "  order " << s.order << ", degree " << (s.degree ? std::to_string(*s.degree) : "irregular") << ", girth "
        << (s.girth ? std::to_string(*s.girth) : "inf") << ", diameter "
        << (s.diameter ? std::to_string(*s.diameter) : "inf") << (s.bipartite ? ", bipartite" : ", not bipartite")
        << ", excess " << s.excess.get_str() << "\n";
    out << "  structure: " << (s.passed() ? "pass" : "fail");
    for (const auto& f : s.failures)
        out << " [" << f << "]";
    if (s.clique_count)
        out << ", " << *s.clique_count << " antipodal cliques";
    for (const auto& note : s.regime_notes)
        out << " (note: " << note << ")";
    out << "\n";
    out << "  F_d(A) = k A_d - A A_{d+1}: " << identity_text(v.distance_identity) << "\n";
    out << "  k J = (A + k I)(H_{d-1}(A) + A_{d+1}): " << identity_text(v.ones_identity) << "\n";
    out << "  spectrum: ";
    if (v.spectral.refused)
        out << "refused (" << v.spectral.reason << ")";
    else
        out << pass_word(v.spectral.ok) << " (max deviation " << format_float(v.spectral.max_deviation) << ")";
    out << "\n";
    out << "  verdict: " << (v.passed() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string to_csv_row(const VerifyOutcome& v)
{
    std::ostringstream out;
    out << v.source << ',' << v.k << ',' << v.d << ',' << v.e << ',' << pass_word(v.structural.passed()) << ','
        << pass_word(v.distance_identity.holds()) << ',' << pass_word(v.ones_identity.holds()) << ','
        << pass_word(v.spectral.ok) << ',' << pass_word(v.passed());
    return out.str();
}

} // namespace cage_spectra
