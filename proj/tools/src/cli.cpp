#include "enriques_tools/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <enriques/gw_engine.hpp>
#include <enriques/km_model.hpp>
#include <enriques/local_surface.hpp>
#include <enriques/modular.hpp>

#include "enriques_tools/acceptance.hpp"

namespace enriques::tools {

namespace {

using nlohmann::ordered_json;
using lattice::LatticeVector;

// Malformed user input detected after CLI11 parsing; reported as a usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LatticeVector parse_beta(const std::string& text) {
    try {
        return LatticeVector::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--beta: ") + e.what());
    }
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& text, const std::string& flag, Parse parse) {
    std::vector<T> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse(item));
        } catch (const std::exception&) {
            throw UsageError(flag + ": cannot parse '" + item + "'");
        }
    }
    return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& flag) {
    return parse_list<std::int64_t>(text, flag, [](const std::string& s) {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return static_cast<std::int64_t>(v);
    });
}

ordered_json row_json(const gw::InvariantRecord& rec) {
    ordered_json j;
    j["genus"] = rec.genus;
    j["beta"] = rec.cls.beta.coords();
    j["d"] = rec.cls.d;
    j["value"] = rec.value.str();
    j["rule"] = std::string(gw::to_string(rec.rule));
    return j;
}

std::string row_csv(const gw::InvariantRecord& rec) {
    std::string s = std::to_string(rec.genus);
    for (const auto c : rec.cls.beta.coords()) s += "," + std::to_string(c);
    s += "," + std::to_string(rec.cls.d) + "," + rec.value.str() + "," + std::string(gw::to_string(rec.rule));
    return s;
}

const char* kCsvHeader = "genus,b1,b2,b3,b4,b5,b6,b7,b8,b9,b10,d,value,rule";

ordered_json series_json(const std::string& what, const qseries::QSeries& s) {
    ordered_json j;
    j["what"] = what;
    j["offset"] = s.offset();
    std::vector<std::string> coeffs;
    for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
    j["coefficients"] = coeffs;
    return j;
}

std::string series_text(const qseries::QSeries& s) {
    std::string line;
    for (const auto& c : s.coefficients()) line += (line.empty() ? "" : ", ") + c.str();
    return line;
}

// Options shared between subcommand definitions and their handlers.
struct Options {
    // invariant / table / km-check
    int genus = 1;
    std::string beta;
    std::int64_t degree = 0;
    std::int64_t max_b1 = 6;
    std::int64_t max_b2 = 6;
    std::int64_t max_e8_norm = 8;
    std::int64_t max_degree = 20;
    std::size_t max_classes = 200000;
    unsigned threads = 1;
    std::string format = "json";
    // series
    std::string what;
    std::int64_t order = 10;
    std::int64_t k = 1;
    std::string series_format = "text";
    // km-check
    std::vector<int> km_genera;
    std::string convention = "both";
    bool f56 = false;
    // local
    std::int64_t local_degree = 1;
    std::string alphas;
    std::string alphas_tilde;
    std::string pairings;
    std::int64_t gc = 1;
    int sign = 1;
    std::int64_t domain_genus = 0;
    std::int64_t m = 0;
    bool check_dimension = false;
    std::optional<std::int64_t> s2n;
    // selfcheck
    std::vector<int> criteria;
    bool verbose = false;
};

int cmd_invariant(const Options& o, std::ostream& out) {
    const auto rec = gw::n_invariant(o.genus, gw::CurveClassQ{parse_beta(o.beta), o.degree});
    if (o.format == "csv") {
        out << kCsvHeader << '\n' << row_csv(rec) << '\n';
    } else {
        out << row_json(rec).dump() << '\n';
    }
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.max_b1 < 0 || o.max_b2 < 0 || o.max_e8_norm < 0 || o.max_degree < 0) {
        throw UsageError("box limits must be non-negative");
    }
    std::vector<LatticeVector> classes;
    const auto e8 = lattice::short_vectors(o.max_e8_norm);
    const std::size_t estimate = static_cast<std::size_t>(o.max_b1 + 1) * static_cast<std::size_t>(o.max_b2 + 1) * e8.size();
    if (estimate > o.max_classes * 2 + 64) {
        throw std::length_error("box holds about " + std::to_string(estimate) + " classes, above --max-classes " +
                                std::to_string(o.max_classes));
    }
    for (std::int64_t b1 = 0; b1 <= o.max_b1; ++b1) {
        for (std::int64_t b2 = 0; b2 <= o.max_b2; ++b2) {
            for (const auto& e : e8) {
                LatticeVector v(b1, b2, e);
                if (lattice::is_positive(v)) classes.push_back(v);
            }
        }
    }
    if (classes.size() > o.max_classes) {
        throw std::length_error("box holds " + std::to_string(classes.size()) + " classes, above --max-classes " +
                                std::to_string(o.max_classes));
    }
    std::sort(classes.begin(), classes.end());

    const std::size_t per_class = static_cast<std::size_t>(o.max_degree + 1);
    std::vector<gw::InvariantRecord> rows(classes.size() * per_class);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& beta = classes[i / per_class];
            rows[i] = gw::n_invariant(o.genus, gw::CurveClassQ{beta, static_cast<std::int64_t>(i % per_class)});
        }
    };
    const unsigned threads = std::max(1u, o.threads);
    if (threads == 1 || rows.size() < 2) {
        fill(0, rows.size());
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        const std::size_t chunk = (rows.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(rows.size(), t * chunk);
            const std::size_t end = std::min(rows.size(), begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                try {
                    fill(begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    if (o.format == "csv") {
        out << kCsvHeader << '\n';
        for (const auto& r : rows) out << row_csv(r) << '\n';
    } else {
        for (const auto& r : rows) out << row_json(r).dump() << '\n';
    }
    return kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    if (o.order < 0) throw UsageError("--order must be non-negative");
    const std::string& w = o.what;
    std::smatch m;
    if (std::regex_match(w, m, std::regex("S([0-9]+)"))) {
        const auto poly = qseries::s_polynomial(std::stoll(m[1]));
        if (o.series_format == "json") {
            out << ordered_json{{"what", w}, {"polynomial", poly.str()}}.dump() << '\n';
        } else {
            out << poly.str() << '\n';
        }
        return kOk;
    }
    if (w == "P2-report") {
        const auto rep = qseries::p2_discrepancy_report(o.order);
        for (const auto& l : rep.lines()) out << l << '\n';
        return kOk;
    }

    qseries::QSeries s;
    if (std::regex_match(w, m, std::regex("E([0-9]+)"))) {
        s = qseries::eisenstein(std::stoll(m[1]), o.order);
    } else if (w == "eta") {
        s = qseries::inv_even_eta_product(o.order);
    } else if (std::regex_match(w, m, std::regex("P([0-9]+)-subst"))) {
        s = qseries::p_series_substituted(std::stoll(m[1]), o.order);
    } else if (std::regex_match(w, m, std::regex("P([0-9]+)"))) {
        s = qseries::p_series(std::stoll(m[1]), o.order).series;
    } else if (std::regex_match(w, m, std::regex("c([0-9]+)"))) {
        s = qseries::c_coefficients(std::stoll(m[1]), o.order);
    } else if (w == "Li") {
        s = qseries::polylog_series(o.k, o.order);
    } else {
        throw UsageError("--what: unknown series '" + w + "'");
    }
    if (o.series_format == "json") {
        out << series_json(w, s).dump() << '\n';
    } else {
        out << series_text(s) << '\n';
    }
    return kOk;
}

int cmd_km_check(const Options& o, std::ostream& out) {
    const auto beta = parse_beta(o.beta);
    const std::vector<int> genera = o.km_genera.empty() ? std::vector<int>{1, 2} : o.km_genera;
    for (int g : genera) out << km::compare_engine_vs_km(g, beta).json() << '\n';
    if (o.f56) {
        std::vector<km::IndexConvention> convs;
        if (o.convention == "both") {
            convs = {km::IndexConvention::full, km::IndexConvention::half};
        } else {
            convs = {km::parse_convention(o.convention)};
        }
        for (auto c : convs) {
            const auto rep = km::km_f56_check(beta, c);
            ordered_json j;
            j["class"] = beta.str();
            j["convention"] = std::string(km::to_string(c));
            j["genus2"] = rep.genus2.str();
            j["genus1"] = rep.genus1.str();
            j["rhs"] = rep.rhs.str();
            j["f56"] = rep.holds ? "holds" : "fails";
            out << j.dump() << '\n';
        }
    }
    return kOk;
}

int cmd_local(const Options& o, std::ostream& out) {
    if (o.s2n) {
        const auto s = local::s2n_numerics(*o.s2n);
        out << ordered_json{{"n", s.n}, {"K2", s.K2}, {"g_K", s.g_K}, {"chi", s.chi}, {"sign", s.sign}}.dump() << '\n';
        return kOk;
    }
    const auto alphas = parse_ints(o.alphas, "--alphas");
    if (o.check_dimension) {
        local::DescendentSpec spec{alphas, o.m, o.domain_genus, o.local_degree, o.gc, o.sign};
        local::validate(spec);
        out << (local::dimension_check(spec, parse_ints(o.alphas_tilde, "--alphas-tilde")) ? "true" : "false") << '\n';
        return kOk;
    }
    Rational value;
    if (o.local_degree == 1) {
        value = local::local_degree1(alphas, o.sign);
    } else if (o.local_degree == 2) {
        value = local::local_degree2(alphas, o.gc, o.sign);
    } else {
        throw UsageError("--degree: local values are conjectured for degree 1 and 2 only");
    }
    if (!o.pairings.empty()) {
        const auto ks = parse_list<Rational>(o.pairings, "--pairings", [](const std::string& s) { return Rational::parse(s); });
        value = local::universality_map(ks, o.local_degree, value);
    }
    out << value.str() << '\n';
    return kOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
    const std::set<int> only(o.criteria.begin(), o.criteria.end());
    const auto results = run_acceptance(out, only, o.verbose);
    const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed(); });
    out << (ok ? "selfcheck passed" : "selfcheck FAILED") << " (" << results.size() << " criteria)\n";
    return ok ? kOk : kSelfcheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gromov-Witten invariants of the Enriques surface and the Enriques Calabi-Yau threefold"};
    app.name("enriques");
    app.require_subcommand(1);
    Options o;

    auto* inv = app.add_subcommand("invariant", "N_{g,(beta,d)} for one class");
    inv->add_option("--genus", o.genus, "genus 0, 1 or 2")->required();
    inv->add_option("--beta", o.beta, "class b1,...,b10")->required();
    inv->add_option("--degree", o.degree, "fiber degree d")->capture_default_str();
    inv->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto* table = app.add_subcommand("table", "invariants over a box of positive classes");
    table->add_option("--genus", o.genus)->required();
    table->add_option("--max-b1", o.max_b1)->capture_default_str();
    table->add_option("--max-b2", o.max_b2)->capture_default_str();
    table->add_option("--max-e8-norm", o.max_e8_norm)->capture_default_str();
    table->add_option("--max-degree", o.max_degree)->capture_default_str();
    table->add_option("--max-classes", o.max_classes, "refuse boxes with more positive classes")->capture_default_str();
    table->add_option("--threads", o.threads)->check(CLI::Range(1u, 256u))->capture_default_str();
    table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto* series = app.add_subcommand("series", "q-expansions");
    series->add_option("--what", o.what, "E<2k>, eta, P<g>, P<g>-subst, c<g> (from q^-1), Li, S<g>, P2-report")
        ->required();
    series->add_option("--order", o.order, "highest exponent")->capture_default_str();
    series->add_option("--k", o.k, "polylogarithm index")->capture_default_str();
    series->add_option("--format", o.series_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    auto* km = app.add_subcommand("km-check", "engine fiber invariants against the heterotic prediction");
    km->add_option("--beta", o.beta)->required();
    km->add_option("--genus", o.km_genera, "1 and/or 2 (default both)")->check(CLI::IsMember({1, 2}));
    km->add_option("--convention", o.convention, "index convention for --f56")
        ->check(CLI::IsMember({"full", "half", "both"}))
        ->capture_default_str();
    km->add_flag("--f56", o.f56, "also test the genus 1 / genus 2 relation of the prediction");

    auto* loc = app.add_subcommand("local", "local theory of a Taubes curve");
    loc->add_option("--degree", o.local_degree, "curve degree")->capture_default_str();
    loc->add_option("--alphas", o.alphas, "descendent exponents, comma separated");
    loc->add_option("--gc", o.gc, "genus of the Taubes curve")->capture_default_str();
    loc->add_option("--sign", o.sign)->check(CLI::IsMember({1, -1}))->capture_default_str();
    loc->add_option("--pairings", o.pairings, "K_S.D_i values; applies the universality map");
    loc->add_flag("--check-dimension", o.check_dimension);
    loc->add_option("--g", o.domain_genus, "domain genus for --check-dimension");
    loc->add_option("--m", o.m, "number of tau(1)-type insertions for --check-dimension");
    loc->add_option("--alphas-tilde", o.alphas_tilde);
    loc->add_option("--s2n", o.s2n, "numerics of the double plane branched in degree 2n");

    auto* self = app.add_subcommand("selfcheck", "run the acceptance suite");
    self->add_option("--criterion", o.criteria, "restrict to these criteria");
    self->add_flag("--verbose", o.verbose);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(inv)) return cmd_invariant(o, out);
        if (app.got_subcommand(table)) return cmd_table(o, out);
        if (app.got_subcommand(series)) return cmd_series(o, out);
        if (app.got_subcommand(km)) return cmd_km_check(o, out);
        if (app.got_subcommand(loc)) return cmd_local(o, out);
        if (app.got_subcommand(self)) return cmd_selfcheck(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }
    return kUsage;
}

}  // namespace enriques::tools
