#include "cage_spectra/cli.hpp"

#include "cage_spectra/catalog.hpp"
#include "cage_spectra/errors.hpp"
#include "cage_spectra/feasibility.hpp"
#include "cage_spectra/polynomial.hpp"
#include "cage_spectra/precision.hpp"
#include "cage_spectra/report.hpp"
#include "cage_spectra/structure.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <thread>

namespace cage_spectra {

namespace {

int parse_int(std::string_view text)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw DomainError(DomainErrorKind::bad_argument, "'" + std::string(text) + "' is not an integer");
    return value;
}

std::string csv_quote(std::string_view text)
{
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

enum class Format { text, json, csv };

Format parse_format(const std::string& name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return Format::text;
}

int do_moore(int k, int g, Format format, std::ostream& out)
{
    const mpz_class m = moore_bound(k, g);
    switch (format) {
    case Format::text:
        out << m.get_str() << "\n";
        break;
    case Format::json:
        out << dump_json({{"k", k}, {"g", g}, {"moore_bound", json_integer(m)}});
        break;
    case Format::csv:
        out << "k,g,moore_bound\n" << k << ',' << g << ',' << m.get_str() << "\n";
        break;
    }
    return exit_ok;
}

int do_poly(const std::string& family_name, int k, int i, Format format, std::ostream& out)
{
    const Family family = parse_family(family_name);
    const IntPolynomial p = dickson_family(family, k, i);
    const std::string label = std::string(1, family_letter(family)) + "_" + std::to_string(i);
    switch (format) {
    case Format::text:
        out << label << "(x) = " << p.to_string() << "\n";
        out << "coefficients (constant term first):";
        for (int j = 0; j <= p.degree(); ++j)
            out << ' ' << p.coefficient(j).get_str();
        out << "\n";
        break;
    case Format::json: {
        auto coefficients = nlohmann::json::array();
        for (int j = 0; j <= p.degree(); ++j)
            coefficients.push_back(json_integer(p.coefficient(j)));
        out << dump_json({{"family", std::string(1, family_letter(family))}, {"k", k}, {"index", i},
            {"degree", p.degree()}, {"coefficients", coefficients}, {"polynomial", p.to_string()}});
        break;
    }
    case Format::csv:
        out << "power,coefficient\n";
        for (int j = 0; j <= p.degree(); ++j)
            out << j << ',' << p.coefficient(j).get_str() << "\n";
        break;
    }
    return exit_ok;
}

int do_catalog(Format format, std::ostream& out)
{
    const auto& entries = catalog_entries();
    switch (format) {
    case Format::text:
        for (const auto& e : entries)
            out << "catalog:" << e.name << "  n=" << e.order << " k=" << e.degree << " girth=" << e.girth << "  "
                << e.description << "\n";
        break;
    case Format::json: {
        auto list = nlohmann::json::array();
        for (const auto& e : entries)
            list.push_back({{"name", std::string(e.name)}, {"description", std::string(e.description)},
                {"order", e.order}, {"degree", e.degree}, {"girth", e.girth}});
        out << dump_json(list);
        break;
    }
    case Format::csv:
        out << "name,order,degree,girth,description\n";
        for (const auto& e : entries)
            out << e.name << ',' << e.order << ',' << e.degree << ',' << e.girth << ',' << csv_quote(e.description)
                << "\n";
        break;
    }
    return exit_ok;
}

int do_verify(const std::string& source, int k, int d, int e, Format format, std::ostream& out)
{
    std::vector<std::pair<std::string, Graph>> graphs;
    constexpr std::string_view prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        graphs.emplace_back(source, catalog(std::string_view(source).substr(prefix.size())));
    } else {
        std::ifstream in(source);
        if (!in)
            throw DomainError(DomainErrorKind::bad_argument, "cannot open '" + source + "'");
        auto parsed = read_graph6(in);
        if (parsed.empty())
            throw DomainError(DomainErrorKind::bad_argument, "'" + source + "' holds no graph");
        for (std::size_t i = 0; i < parsed.size(); ++i)
            graphs.emplace_back(parsed.size() == 1 ? source : source + "#" + std::to_string(i + 1), std::move(parsed[i]));
    }

    std::vector<VerifyOutcome> outcomes;
    for (const auto& [name, g] : graphs)
        outcomes.push_back(verify_graph(g, name, k, d, e));

    switch (format) {
    case Format::text:
        for (const auto& o : outcomes)
            out << to_text(o);
        break;
    case Format::json:
        if (outcomes.size() == 1) {
            out << dump_json(to_json(outcomes.front()));
        } else {
            auto list = nlohmann::json::array();
            for (const auto& o : outcomes)
                list.push_back(to_json(o));
            out << dump_json(list);
        }
        break;
    case Format::csv:
        out << verify_csv_header << "\n";
        for (const auto& o : outcomes)
            out << to_csv_row(o) << "\n";
        break;
    }
    const bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed(); });
    return all ? exit_ok : exit_failure;
}

void emit_reports(const std::vector<FeasibilityReport>& reports, bool single, Format format, std::ostream& out)
{
    switch (format) {
    case Format::text:
        if (single) {
            out << to_text(reports.front());
            break;
        }
        for (const auto& r : reports) {
            out << "k=" << r.k << " d=" << r.d << " e=" << r.e << " n=" << r.n.get_str() << " " << to_string(r.verdict);
            if (r.gap && r.gap->status != GapStatus::outside_regime)
                out << " gap=[" << format_float(r.gap->lower.get_d()) << ", " << format_float(r.gap->upper.get_d())
                    << "] chain=" << (r.gap->chain_ok ? "holds" : "fails");
            for (const auto& note : r.notes)
                out << " (" << note << ")";
            out << "\n";
        }
        break;
    case Format::json:
        if (single) {
            out << dump_json(to_json(reports.front()));
        } else {
            auto list = nlohmann::json::array();
            for (const auto& r : reports)
                list.push_back(to_json(r));
            out << dump_json(list);
        }
        break;
    case Format::csv:
        out << feasibility_csv_header << "\n";
        for (const auto& r : reports)
            out << to_csv_row(r) << "\n";
        break;
    }
}

} // namespace

std::vector<int> parse_int_list(const std::string& text)
{
    if (text.empty())
        throw DomainError(DomainErrorKind::bad_argument, "empty list");
    std::vector<int> values;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            values.push_back(parse_int(item));
        } else {
            const int first = parse_int(item.substr(0, dots));
            const int last = parse_int(item.substr(dots + 2));
            for (int v = first; v <= last; ++v)
                values.push_back(v);
        }
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral feasibility tools for antipodal bipartite cages", "cage-spectra"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    int k = 0;
    int g = 0;
    int d = 0;
    int e = 0;
    int index = 0;
    std::string family;
    std::string source;
    std::string k_list;
    std::string d_list;
    std::string e_list;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* moore = app.add_subcommand("moore", "Moore bound M(k, g)");
    moore->add_option("k", k, "degree")->required();
    moore->add_option("g", g, "girth")->required();

    auto* poly = app.add_subcommand("poly", "Coefficients of G_i, F_i or H_i for degree k");
    poly->add_option("family", family, "G, F or H")->required();
    poly->add_option("k", k, "degree")->required();
    poly->add_option("i", index, "index")->required();

    auto* verify = app.add_subcommand("verify", "Check a graph against the antipodal cage structure and identities");
    verify->add_option("source", source, "graph6 file or catalog:<name>")->required();
    verify->add_option("--k", k, "degree")->required();
    verify->add_option("--d", d, "half the girth")->required();
    verify->add_option("--e", e, "excess")->required();

    auto* feasibility = app.add_subcommand("feasibility", "Spectral feasibility of an antipodal (k, 2d)-cage of excess e");
    feasibility->add_option("k", k, "degree")->required();
    feasibility->add_option("d", d, "half the girth (odd)")->required();
    feasibility->add_option("e", e, "excess (even)")->required();

    auto* scan_cmd = app.add_subcommand("scan", "Feasibility over a grid of parameters");
    scan_cmd->add_option("--k", k_list, "degrees, e.g. 4..20")->required();
    scan_cmd->add_option("--d", d_list, "half-girths, e.g. 7,9,11")->required();
    scan_cmd->add_option("--e", e_list, "excesses, e.g. 2,4")->required();
    scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

    auto* list = app.add_subcommand("catalog", "List the embedded graphs");

    std::vector<const char*> argv{"cage-spectra"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const Format format = parse_format(format_name);
    try {
        working_precision_bits();
        if (*moore)
            return do_moore(k, g, format, out);
        if (*poly)
            return do_poly(family, k, index, format, out);
        if (*list)
            return do_catalog(format, out);
        if (*verify)
            return do_verify(source, k, d, e, format, out);
        if (*feasibility) {
            emit_reports({spectral_feasibility(k, d, e)}, true, format, out);
            return exit_ok;
        }
        if (*scan_cmd) {
            const auto reports = scan(parse_int_list(k_list), parse_int_list(d_list), parse_int_list(e_list), jobs);
            emit_reports(reports, false, format, out);
            return exit_ok;
        }
    } catch (const DomainError& error) {
        err << "error: " << error.what() << "\n";
        return exit_usage;
    } catch (const Graph6Error& error) {
        err << "error: malformed graph6 input: " << error.what() << "\n";
        return exit_usage;
    } catch (const std::exception& error) {
        err << "error: " << error.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace cage_spectra
