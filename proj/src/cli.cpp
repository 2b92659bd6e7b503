#include "fthresh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fthresh/errors.hpp"
#include "fthresh/gallery.hpp"
#include "fthresh/io.hpp"

namespace fthresh {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string ideal, filtration, hypergraph, file;
    std::size_t n = 0;
};

struct Common {
    Input input;
    std::string target = "m";
    unsigned long p = 2;
    unsigned e = 1;
    unsigned e_max = 4;
    std::string format;
    int decimal = -1;
};

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c); };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

// Raw text of the single input source and whether it came flagged as an ideal.
std::pair<std::string, char> raw_input(const Input& in, std::istream& stdin_) {
    int given = !in.ideal.empty() + !in.filtration.empty() + !in.hypergraph.empty() + !in.file.empty();
    if (given > 1) throw UsageError("give exactly one of --ideal, --filtration, --hypergraph, --file");
    if (!in.ideal.empty()) return {in.ideal, 'i'};
    if (!in.filtration.empty()) return {in.filtration, 'f'};
    if (!in.hypergraph.empty()) return {in.hypergraph, 'h'};
    std::string text;
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw UsageError("cannot read " + in.file);
        text = slurp(f);
    } else {
        text = slurp(stdin_);
    }
    text = trim(text);
    if (text.empty()) throw UsageError("no input: pass --ideal, --filtration, --file or pipe to stdin");
    return {text, text.front() == '{' ? 'j' : 'i'};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError("malformed JSON", ex.byte, "");
    }
}

MonomialIdeal read_ideal(const Input& in, std::istream& s) {
    auto [text, tag] = raw_input(in, s);
    if (tag == 'i') return parse_ideal(text, in.n);
    auto j = parse_json(text);
    if (j.is_object() && j.contains("ideal")) return ideal_from_json(j.at("ideal"), j.value("n", in.n));
    return ideal_from_json(j, in.n);
}

Filtration read_filtration(const Input& in, std::istream& s) {
    auto [text, tag] = raw_input(in, s);
    if (tag == 'i') return Filtration::ordinary(parse_ideal(text, in.n));
    if (tag == 'h') throw UsageError("this verb takes an ideal or filtration, not a hypergraph");
    return filtration_from_json(parse_json(text), in.n);
}

Hypergraph read_hypergraph(const Input& in, std::istream& s) {
    auto [text, tag] = raw_input(in, s);
    if (tag == 'i') return Hypergraph::from_ideal(parse_ideal(text, in.n));
    if (tag == 'f') throw UsageError("hypergraph takes --hypergraph or --ideal");
    return hypergraph_from_json(parse_json(text));
}

MonomialIdeal read_target(const std::string& text, std::size_t n) { return parse_ideal(text, n); }

std::optional<unsigned> digits(const Common& c) {
    if (c.decimal < 0) return std::nullopt;
    return static_cast<unsigned>(c.decimal);
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
            out << (c + 1 < r.size() ? "  " : "\n");
        }
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
}

std::string cell(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit(std::ostream& out, const json& j, const std::string& format) {
    if (format == "table" && j.is_object()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : j.items()) rows.push_back({k, cell(v)});
        print_table(out, {"field", "value"}, rows);
        return;
    }
    out << j.dump() << "\n";
}

ThresholdResult dispatch_threshold(const Filtration& F, const MonomialIdeal& target, const Common& c) {
    const bool at_m = target == MonomialIdeal::maximal(F.ambient());
    switch (F.kind()) {
        case RuleKind::Ordinary:
            return at_m ? fthreshold_ordinary(F.ideal()) : fthreshold_ordinary(F.ideal(), target, c.p, c.e_max);
        case RuleKind::Symbolic:
            if (at_m) return fthreshold_symbolic_squarefree(F.ideal());
            break;
        case RuleKind::PrimePowerIntersection:
            if (at_m) return fthreshold_prime_power_intersection(F.ambient(), F.components());
            break;
        case RuleKind::Veronese: return veronese_reduce(F, target, c.p, c.e_max);
        default: break;
    }
    return fthreshold_bracket(F, target, c.p, c.e_max);
}

int gallery(const std::string& only, const std::vector<std::string>& expects, const std::string& format,
            std::ostream& out) {
    GalleryOptions opts;
    opts.filter = only;
    for (const auto& e : expects) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw UsageError("--expect takes NAME=VALUE");
        opts.overrides[e.substr(0, eq)] = e.substr(eq + 1);
    }
    auto rows = verify_examples(opts);
    bool all = std::all_of(rows.begin(), rows.end(), [](const GalleryRow& r) { return r.pass; });
    if (format == "json") {
        json a = json::array();
        for (const auto& r : rows)
            a.push_back({{"name", r.name}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
        out << json{{"rows", a}, {"ok", all}}.dump() << "\n";
    } else if (format == "csv") {
        out << "name,expected,computed,pass\n";
        for (const auto& r : rows)
            out << '"' << r.name << "\",\"" << r.expected << "\",\"" << r.computed << "\"," << (r.pass ? "pass" : "fail")
                << "\n";
    } else {
        std::vector<std::vector<std::string>> t;
        for (const auto& r : rows) t.push_back({r.name, r.expected, r.computed, r.pass ? "pass" : "FAIL"});
        print_table(out, {"fixture", "expected", "computed", "status"}, t);
        std::size_t passed = std::count_if(rows.begin(), rows.end(), [](const GalleryRow& r) { return r.pass; });
        out << passed << "/" << rows.size() << " passed\n";
    }
    return rows.empty() || !all ? 1 : 0;
}

void add_input(CLI::App* sub, Common& c) {
    sub->add_option("--ideal", c.input.ideal, "Ideal, e.g. \"x1^2;x2*x3\"");
    sub->add_option("--filtration", c.input.filtration, "Filtration descriptor (JSON)");
    sub->add_option("--file", c.input.file, "Read the input from a file");
    sub->add_option("-n,--vars", c.input.n, "Number of variables");
}

void add_numeric(CLI::App* sub, Common& c, bool e_single) {
    sub->add_option("--target", c.target, "Target ideal (default m)");
    sub->add_option("-p", c.p, "Characteristic");
    if (e_single) sub->add_option("-e", c.e, "Frobenius exponent");
    sub->add_option("--emax", c.e_max, "Largest e");
}

void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--decimal", c.decimal, "Add k-digit decimal renderings");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius thresholds of monomial filtrations", "fthresh"};
    app.require_subcommand(1);
    Common c;
    std::string weights, left, right, left_target, right_target, only;
    std::vector<std::string> expects;
    std::uint64_t horizon = 12, vdeg = 0;

    auto* nu_cmd = app.add_subcommand("nu", "nu(p^e) of a filtration against a target");
    add_input(nu_cmd, c);
    add_numeric(nu_cmd, c, true);
    add_format(nu_cmd, c);

    auto* seq_cmd = app.add_subcommand("nu-seq", "nu(p^e) for e = 1..emax");
    add_input(seq_cmd, c);
    add_numeric(seq_cmd, c, false);
    add_format(seq_cmd, c);

    auto* ft_cmd = app.add_subcommand("fthreshold", "F-threshold: exact when a closed form applies, else a bracket");
    add_input(ft_cmd, c);
    add_numeric(ft_cmd, c, false);
    add_format(ft_cmd, c);

    auto* sym_cmd = app.add_subcommand("symbolic", "Symbolic F-threshold of a square-free ideal");
    add_input(sym_cmd, c);
    add_format(sym_cmd, c);

    auto* rees_cmd = app.add_subcommand("rees", "Rees valuations of an ideal");
    add_input(rees_cmd, c);
    add_format(rees_cmd, c);

    auto* newton_cmd = app.add_subcommand("newton", "Facets of the Newton polyhedron");
    add_input(newton_cmd, c);
    add_format(newton_cmd, c);

    auto* wald_cmd = app.add_subcommand("waldschmidt", "Skew-Waldschmidt constant of a filtration");
    add_input(wald_cmd, c);
    add_format(wald_cmd, c);
    wald_cmd->add_option("--weights", weights, "Comma separated rational weights (default all ones)");
    wald_cmd->add_option("--horizon", horizon, "Largest level used for the bounds");
    wald_cmd->add_option("--veronese", vdeg, "Claimed Veronese degree (verified)");

    auto* hg_cmd = app.add_subcommand("hypergraph", "Threshold bounds for an edge ideal");
    hg_cmd->add_option("--hypergraph", c.input.hypergraph, "{\"n\":5,\"edges\":[[0,1],...]}");
    hg_cmd->add_option("--ideal", c.input.ideal, "Square-free ideal read as its hypergraph");
    hg_cmd->add_option("--file", c.input.file, "Read the input from a file");
    add_format(hg_cmd, c);

    auto* law_cmd = app.add_subcommand("laws", "Check the min law, the sum and product laws (with targets), or a nu shift");
    law_cmd->add_option("--left", left, "Filtration (JSON or ideal)")->required();
    law_cmd->add_option("--right", right, "Filtration (JSON or ideal)")->required();
    law_cmd->add_option("--left-target", left_target, "Target of the left filtration");
    law_cmd->add_option("--right-target", right_target, "Target of the right filtration");
    std::string shift;
    law_cmd->add_option("--shift", shift, "Check nu_right <= nu_left + k at --target instead");
    law_cmd->add_option("--target", c.target, "Target ideal for --shift (default m)");
    law_cmd->add_option("-n,--vars", c.input.n, "Number of variables");
    law_cmd->add_option("-p", c.p, "Characteristic");
    law_cmd->add_option("--emax", c.e_max, "Largest e");
    add_format(law_cmd, c);

    auto* ex_cmd = app.add_subcommand("verify-examples", "Run the regression gallery");
    ex_cmd->add_option("--only", only, "Run fixtures whose name contains this");
    ex_cmd->add_option("--expect", expects, "Override an expected value, NAME=VALUE");
    ex_cmd->add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"json", "csv", "table"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n";
        return 2;
    }

    auto fmt = [&](const char* dflt) { return c.format.empty() ? std::string(dflt) : c.format; };
    try {
        if (*ex_cmd) return gallery(only, expects, fmt("table"), out);
        if (*nu_cmd) {
            auto F = read_filtration(c.input, in);
            auto rec = nu(F, read_target(c.target, F.ambient()), c.p, c.e);
            if (fmt("json") == "csv") out << nu_csv({rec});
            else emit(out, nu_record_to_json(rec), fmt("json"));
        } else if (*seq_cmd) {
            auto F = read_filtration(c.input, in);
            auto seq = nu_sequence(F, read_target(c.target, F.ambient()), c.p, c.e_max);
            if (fmt("json") == "csv") {
                out << nu_csv(seq.records);
            } else if (fmt("json") == "table") {
                std::vector<std::vector<std::string>> rows;
                for (const auto& r : seq.records) {
                    auto j = nu_record_to_json(r);
                    rows.push_back({std::to_string(r.e), r.q.get_str(), cell(j["nu"]), cell(j["ratio"])});
                }
                print_table(out, {"e", "q", "nu", "ratio"}, rows);
            } else {
                json recs = json::array();
                for (const auto& r : seq.records) recs.push_back(nu_record_to_json(r));
                json j{{"records", recs}, {"doubling_ok", seq.doubling_ok}};
                j["running_sup"] = seq.running_sup ? json(to_string(*seq.running_sup)) : json(nullptr);
                out << j.dump() << "\n";
            }
        } else if (*ft_cmd) {
            auto F = read_filtration(c.input, in);
            auto res = dispatch_threshold(F, read_target(c.target, F.ambient()), c);
            emit(out, threshold_to_json(res, digits(c)), fmt("json"));
        } else if (*sym_cmd) {
            auto res = fthreshold_symbolic_squarefree(read_ideal(c.input, in));
            emit(out, threshold_to_json(res, digits(c)), fmt("json"));
        } else if (*rees_cmd) {
            json a = json::array();
            for (const auto& rv : rees_valuations(read_ideal(c.input, in))) {
                auto j = valuation_to_json(rv.v);
                j["value"] = rv.value.get_str();
                a.push_back(j);
            }
            out << json{{"rees_valuations", a}}.dump() << "\n";
        } else if (*newton_cmd) {
            auto np = newton_polyhedron(read_ideal(c.input, in));
            json a = json::array();
            for (const auto& f : np.facets()) a.push_back(facet_to_json(f));
            out << json{{"facets", a}, {"essential", np.essential_facets().size()}}.dump() << "\n";
        } else if (*wald_cmd) {
            auto F = read_filtration(c.input, in);
            std::vector<Rational> w;
            if (weights.empty()) {
                w.assign(F.ambient(), Rational(1));
            } else {
                std::stringstream ss(weights);
                for (std::string tok; std::getline(ss, tok, ',');) w.push_back(parse_rational(trim(tok)));
            }
            if (w.size() != F.ambient()) throw DomainError("--weights needs one weight per variable");
            std::optional<std::uint64_t> vd;
            if (vdeg) vd = vdeg;
            auto res = skew_waldschmidt(WeightVector(w), F, horizon, vd);
            emit(out, waldschmidt_to_json(res), fmt("json"));
        } else if (*hg_cmd) {
            emit(out, bounds_to_json(threshold_bounds_report(read_hypergraph(c.input, in))), fmt("json"));
        } else if (*law_cmd) {
            auto filt = [&](const std::string& s) {
                auto t = trim(s);
                if (!t.empty() && t.front() == '{') return filtration_from_json(parse_json(t), c.input.n);
                return Filtration::ordinary(parse_ideal(t, c.input.n));
            };
            auto F = filt(left), G = filt(right);
            json j;
            bool ok;
            if (left_target.empty() != right_target.empty())
                throw UsageError("give both --left-target and --right-target, or neither");
            if (!shift.empty()) {
                if (!left_target.empty()) throw UsageError("--shift does not take --left-target or --right-target");
                auto k = parse_rational(shift);
                if (k.get_den() != 1) throw UsageError("--shift must be an integer");
                auto r = check_nu_shift(F, G, read_target(c.target, F.ambient()), k.get_num(), c.p, c.e_max);
                ok = r.ok;
                j = law_to_json(r);
            } else if (left_target.empty()) {
                auto r = check_min_law(F, G, c.p, c.e_max);
                ok = r.ok;
                j = law_to_json(r);
            } else {
                auto [sum, prod] = check_sum_product_laws(F, read_target(left_target, F.ambient()), G,
                                                          read_target(right_target, G.ambient()), c.p, c.e_max);
                ok = sum.ok && prod.ok;
                j = {{"sum", law_to_json(sum)}, {"product", law_to_json(prod)}, {"ok", ok}};
            }
            out << j.dump() << "\n";
            return ok ? 0 : 1;
        }
        return 0;
    } catch (const UsageError& ex) {
        err << "usage: " << ex.what() << "\n";
        return 2;
    } catch (const ParseError& ex) {
        out << json{{"error", {{"type", "parse"}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    } catch (const CapabilityError& ex) {
        out << json{{"error", {{"type", "capability"}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    } catch (const UnsupportedError& ex) {
        out << json{{"error", {{"type", "unsupported"}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    } catch (const DomainError& ex) {
        out << json{{"error", {{"type", "domain"}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    } catch (const json::exception& ex) {
        out << json{{"error", {{"type", "domain"}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    }
}

}  // namespace fthresh
