#include "nakwide/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nakwide/approximation.hpp"
#include "nakwide/calculus.hpp"
#include "nakwide/error.hpp"
#include "nakwide/model.hpp"
#include "nakwide/reduction.hpp"
#include "nakwide/rep.hpp"
#include "nakwide/version.hpp"
#include "nakwide/wide.hpp"

namespace nakwide::cli {

using nlohmann::json;

namespace {

std::string_view format_name(Format f)
{
    switch (f) {
    case Format::Json: return "json";
    case Format::Text: return "text";
    case Format::Dot: return "dot";
    }
    return "json";
}

int exit_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonIntegralRatio:
    case ErrorKind::ParityViolation:
    case ErrorKind::RangeError:
    case ErrorKind::InvalidConfig:
        return kExitInvalid;
    case ErrorKind::NotPeriodic:
        return kExitNotPeriodic;
    default:
        return kExitOracle;
    }
}

Outcome guarded(const std::function<Outcome()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {exit_for(e.kind()), {}, e.what()};
    }
}

AlgebraParams prepare(const RunConfig& cfg, bool allow_dot = false)
{
    if (cfg.enum_bound < 1 || cfg.enum_bound > 30)
        throw Error(ErrorKind::InvalidConfig, "enum-bound must lie in 1..30");
    if (cfg.workers < 1)
        throw Error(ErrorKind::InvalidConfig, "workers must be positive");
    if (cfg.format == Format::Dot && !allow_dot)
        throw Error(ErrorKind::InvalidConfig, "dot output is only available for quiver");
    linalg::PrimeField field(cfg.prime); // validates the prime
    (void)field;
    return validate_params(cfg.m, cfg.ell, cfg.d);
}

json header(const RunConfig& cfg, std::string_view command)
{
    json doc;
    doc["schema"] = 1;
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["config"] = {{"m", cfg.m},
                     {"ell", cfg.ell},
                     {"d", cfg.d},
                     {"prime", cfg.prime},
                     {"enum_bound", cfg.enum_bound},
                     {"format", format_name(cfg.format)}};
    return doc;
}

// Flat "key: value" rendering for --format text.
void render_text(const json& node, const std::string& prefix, std::ostringstream& os)
{
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            const std::string path = prefix.empty() ? key : prefix + "." + key;
            if (value.is_structured() && !(value.is_array() && std::none_of(value.begin(), value.end(), [](const json& v) { return v.is_structured(); })))
                render_text(value, path, os);
            else
                os << path << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    } else if (node.is_array()) {
        for (std::size_t k = 0; k < node.size(); ++k)
            render_text(node[k], prefix + "[" + std::to_string(k) + "]", os);
    } else {
        os << prefix << ": " << node.dump() << '\n';
    }
}

std::string emit(const RunConfig& cfg, const json& doc)
{
    if (cfg.format == Format::Text) {
        std::ostringstream os;
        render_text(doc, "", os);
        return os.str();
    }
    return doc.dump(2) + "\n";
}

std::vector<int> values(const std::vector<IndecIndex>& v)
{
    std::vector<int> out;
    for (auto i : v)
        out.push_back(i.value);
    return out;
}

json verdict_json(const wide::WideVerdict& v)
{
    json j;
    j["wide"] = v.is_wide;
    j["kind"] = wide::to_string(v.kind);
    if (v.witness) {
        j["witness"] = {{"clause", wide::to_string(v.witness->clause)},
                        {"source", v.witness->source.value},
                        {"target", v.witness->target.value},
                        {"missing", values(v.witness->missing)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::vector<std::vector<int>> member_lists(const std::vector<wide::Subcat>& ws)
{
    std::vector<std::vector<int>> out;
    for (const auto& w : ws)
        out.push_back(w.members());
    std::sort(out.begin(), out.end());
    return out;
}

rep::ComplexOfReps realize(const AlgebraParams& params, const rep::Algebra& a, const std::vector<IndecIndex>& terms,
                           bool closed_left = true, bool closed_right = true)
{
    rep::ComplexOfReps c;
    c.closed_left = closed_left;
    c.closed_right = closed_right;
    for (auto t : terms)
        c.terms.push_back(rep::f_module(a, params, t));
    for (std::size_t k = 0; k + 1 < terms.size(); ++k)
        c.maps.push_back(rep::interval_map(a, interval_of(params, terms[k]), interval_of(params, terms[k + 1])));
    return c;
}

struct Suite {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure{};

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checks;
        if (!ok) {
            if (failures == 0)
                first_failure = what();
            ++failures;
        }
    }
    // Runs `fn`; a library error inside counts as a failed check.
    void guard(const std::function<void()>& fn, const std::string& where)
    {
        try {
            fn();
        } catch (const Error& e) {
            expect(false, [&] { return where + ": " + e.what(); });
        }
    }
    json to_json() const
    {
        json j = {{"name", name}, {"passed", failures == 0}, {"checks", checks}, {"failures", failures}};
        j["first_failure"] = failures ? json(first_failure) : json(nullptr);
        return j;
    }
};

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<Suite> run_suites(const AlgebraParams& params, const RunConfig& cfg)
{
    const int n = params.n(), m = params.m(), ell = params.ell(), d = params.d();
    const std::uint32_t other = cfg.prime == 101 ? 2 : 101;
    const auto a = rep::algebra_for(params, cfg.prime);
    std::vector<Suite> suites;

    const auto tables = rep::hom_ext_tables(params, cfg.prime);
    const auto tables_other = rep::hom_ext_tables(params, other);
    auto at = [](const std::vector<std::vector<int>>& t, int i, int j) { return t[std::size_t(i - 1)][std::size_t(j - 1)]; };

    Suite hom{"hom_formula"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int want = calc::hom_dim(params, {i}, {j});
            hom.expect(at(tables.hom, i, j) == want, [&] { return "hom " + pair_label(i, j); });
            hom.expect(at(tables_other.hom, i, j) == want, [&] { return "hom over second prime " + pair_label(i, j); });
        }
    hom.expect(tables.ext == tables_other.ext, [] { return "Ext tables differ between primes"; });
    suites.push_back(hom);

    Suite ext{"ext_formula"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ext.expect(at(tables.ext_d, i, j) == calc::ext_d_dim(params, {i}, {j}), [&] { return "Ext^d " + pair_label(i, j); });
            for (int k = 1; k <= d - 1; ++k)
                ext.expect(tables.ext[std::size_t(k)][std::size_t(i - 1)][std::size_t(j - 1)] == 0,
                           [&] { return "Ext^" + std::to_string(k) + " " + pair_label(i, j); });
        }
    suites.push_back(ext);

    Suite ar{"ar_duality"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= ell - 1; ++j)
            ar.guard(
                [&] {
                    const int stable = rep::stable_hom_dim(rep::f_module(a, params, calc::tau_d_inverse(params, {j})),
                                                           rep::f_module(a, params, {i}));
                    ar.expect(at(tables.ext_d, i, j) == stable, [&] { return "duality " + pair_label(i, j); });
                },
                "duality " + pair_label(i, j));
    suites.push_back(ar);

    Suite win{"window_exactness"};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (calc::hom_dim(params, {i}, {j}) == 0)
                continue;
            win.guard(
                [&] {
                    const auto w = calc::e_complex(params, {i}, {j});
                    const auto label = [&] { return "window " + pair_label(i, j); };
                    win.expect(w.nonzero_count() == d + 2, label);
                    win.expect(rep::is_exact(realize(params, a, w.nonzero())), label);
                    const auto ker = calc::minimal_d_kernel(params, {i}, {j});
                    const auto cok = calc::minimal_d_cokernel(params, {i}, {j});
                    const bool ker_zero = std::none_of(ker.begin(), ker.end(), [](Slot s) { return s.has_value(); });
                    const bool cok_zero = std::none_of(cok.begin(), cok.end(), [](Slot s) { return s.has_value(); });
                    win.expect(ker_zero == (j <= ell), label);
                    win.expect(cok_zero == (i >= m), label);
                    std::vector<IndecIndex> left, right{IndecIndex{i}, IndecIndex{j}};
                    for (auto s : ker)
                        if (s)
                            left.push_back(*s);
                    left.push_back({i});
                    left.push_back({j});
                    for (auto s : cok)
                        if (s)
                            right.push_back(*s);
                    win.expect(rep::is_exact(realize(params, a, left, true, false)), label);
                    win.expect(rep::is_exact(realize(params, a, right, false, true)), label);
                },
                "window " + pair_label(i, j));
        }
    suites.push_back(win);

    Suite canon{"canonical_extensions"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (calc::ext_d_dim(params, {i}, {j}) == 0)
                continue;
            canon.guard(
                [&] {
                    const auto c = realize(params, a, calc::canonical_ext_representative(params, {i}, {j}));
                    canon.expect(rep::is_exact(c) && !rep::is_split_mono(c.maps.front()),
                                 [&] { return "representative " + pair_label(i, j); });
                },
                "representative " + pair_label(i, j));
        }
    suites.push_back(canon);

    Suite ct{"cluster_tilting"};
    ct.expect(rep::verify_cluster_tilting(params, cfg.prime), [] { return "F is not d-cluster tilting"; });
    auto perturbed = rep::f_supports(params);
    perturbed.erase(interval_of(params, {2}));
    ct.expect(!rep::verify_cluster_tilting(params, cfg.prime, perturbed), [] { return "perturbed F accepted"; });
    suites.push_back(ct);

    Suite fres{"f_resolutions"};
    for (const auto& s : rep::all_intervals(a)) {
        const std::string where = "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
        fres.guard(
            [&] {
                const auto r = rep::f_resolution(params, rep::build_interval(a, s));
                fres.expect(r.length() <= d - 1 && rep::is_exact(r.augmented), [&] { return "F-resolution of " + where; });
            },
            "F-resolution of " + where);
    }
    suites.push_back(fres);

    wide::EnumerationOptions opts{cfg.enum_bound, cfg.workers};
    const auto census = wide::enumerate_wide(params, opts);
    Suite agree{"classifier_agreement"};
    agree.expect(census.agreement(), [&] { return std::to_string(census.disagreements) + " disagreements"; });
    agree.expect(census.nonsemisimple_count() == wide::count_nonsemisimple_formula(params),
                 [&] { return "non-semisimple count " + std::to_string(census.nonsemisimple_count()); });
    agree.expect(census.closed_but_not_periodic == 0, [] { return "closed non-periodic subcategory found"; });
    suites.push_back(agree);

    Suite thm{"periodic_reduction"};
    for (const auto& w : census.nonsemisimple) {
        std::ostringstream label;
        label << "W = {";
        const auto members = w.members();
        for (std::size_t k = 0; k < members.size(); ++k)
            label << (k ? "," : "") << members[k];
        label << "}";
        thm.guard(
            [&] {
                const auto prof = reduction::periodic_profile(params, w);
                thm.expect(reduction::verify_gamma_iso(params, prof, cfg.prime), [&] { return "gamma iso " + label.str(); });
                thm.expect(reduction::thmB_conditions(params, prof, cfg.prime).all_passed(),
                           [&] { return "conditions " + label.str(); });
                const auto rows = reduction::hom_image_table(params, prof, cfg.prime);
                thm.expect(std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.matches; }),
                           [&] { return "hom image " + label.str(); });
            },
            label.str());
    }
    suites.push_back(thm);
    return suites;
}

struct Node {
    IntervalSupport s;
    std::optional<IndecIndex> f;
    bool highlighted = false;
};

std::string node_id(IntervalSupport s) { return "n" + std::to_string(s.a) + "_" + std::to_string(s.b); }
std::string interval_label(IntervalSupport s) { return "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]"; }

} // namespace

std::vector<int> parse_subcat(std::string_view text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '{'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '}'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return out;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto piece = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        int v = 0;
        const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size())
            throw Error(ErrorKind::InvalidConfig, "bad subcategory list '" + std::string(text) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Format> parse_format(std::string_view text)
{
    if (text == "json")
        return Format::Json;
    if (text == "text")
        return Format::Text;
    if (text == "dot")
        return Format::Dot;
    return std::nullopt;
}

Outcome cmd_classify(const RunConfig& cfg, const std::vector<int>& subcat)
{
    return guarded([&] {
        const auto params = prepare(cfg);
        const auto w = wide::Subcat::from_indices(params, subcat);
        const wide::ClosureTables tables(params);
        const auto fast = wide::wide_fast(tables, w);
        const auto brute = wide::wide_bruteforce(tables, w);
        json doc = header(cfg, "classify");
        doc["subcat"] = w.members();
        doc["semisimple"] = wide::is_semisimple(params, w);
        doc["l_periodic"] = wide::is_l_periodic(params, w);
        doc["fast"] = verdict_json(fast);
        doc["bruteforce"] = verdict_json(brute);
        doc["agreement"] = fast.is_wide == brute.is_wide;
        return Outcome{kExitOk, emit(cfg, doc), {}};
    });
}

Outcome cmd_enumerate(const RunConfig& cfg)
{
    return guarded([&] {
        const auto params = prepare(cfg);
        const auto r = wide::enumerate_wide(params, {cfg.enum_bound, cfg.workers});
        const auto formula = wide::count_nonsemisimple_formula(params);
        json doc = header(cfg, "enumerate");
        doc["params"] = {{"m", params.m()}, {"ell", params.ell()}, {"d", params.d()}, {"n", params.n()}};
        doc["counts"] = {{"total", r.wide.size()},
                         {"semisimple", r.semisimple.size()},
                         {"nonsemisimple", r.nonsemisimple_count()},
                         {"formula", formula}};
        doc["formula_match"] = r.nonsemisimple_count() == formula;
        doc["agreement"] = r.agreement();
        doc["subsets_checked"] = r.subsets_checked;
        doc["closed_but_not_periodic"] = r.closed_but_not_periodic;
        doc["nonsemisimple"] = member_lists(r.nonsemisimple);
        doc["semisimple"] = member_lists(r.semisimple);
        return Outcome{kExitOk, emit(cfg, doc), {}};
    });
}

Outcome cmd_reduce(const RunConfig& cfg, const std::vector<int>& subcat)
{
    return guarded([&] {
        const auto params = prepare(cfg);
        const auto w = wide::Subcat::from_indices(params, subcat);
        const auto prof = reduction::periodic_profile(params, w);
        const auto rp = prof.reduced_params(params);
        const bool gamma = reduction::verify_gamma_iso(params, prof, cfg.prime);
        const auto report = reduction::thmB_conditions(params, prof, cfg.prime);
        const auto rows = reduction::hom_image_table(params, prof, cfg.prime);

        json doc = header(cfg, "reduce");
        doc["subcat"] = w.members();
        doc["profile"] = {{"ell_prime", prof.ell_prime},
                          {"m_prime", prof.m_prime},
                          {"iota", values(prof.iota)},
                          {"s_indices", values(prof.s_indices)},
                          {"reduced", {{"m", rp.m()}, {"ell", rp.ell()}, {"d", rp.d()}}}};
        doc["gamma_iso"] = gamma;
        static constexpr const char* names[] = {"i", "ii", "iii", "iv"};
        json conds = json::array();
        for (std::size_t k = 0; k < report.conditions.size(); ++k) {
            const auto& c = report.conditions[k];
            conds.push_back({{"condition", names[k]},
                             {"passed", c.passed},
                             {"detail", c.detail},
                             {"offending_index", c.offending_index ? json(*c.offending_index) : json(nullptr)}});
        }
        doc["conditions"] = conds;
        json image = json::array();
        bool all_match = true;
        for (const auto& row : rows) {
            image.push_back({{"w", row.w.value}, {"reduced_index", row.reduced_index}, {"image", row.image}, {"matches", row.matches}});
            all_match = all_match && row.matches;
        }
        doc["hom_image"] = image;
        const bool ok = gamma && report.all_passed() && all_match;
        doc["passed"] = ok;
        return Outcome{ok ? kExitOk : kExitFailed, emit(cfg, doc), {}};
    });
}

Outcome cmd_verify(const RunConfig& cfg)
{
    return guarded([&] {
        const auto params = prepare(cfg);
        if (params.n() > cfg.enum_bound)
            throw Error(ErrorKind::EnumerationBoundExceeded,
                        "n = " + std::to_string(params.n()) + " exceeds enum-bound " + std::to_string(cfg.enum_bound));
        const auto suites = run_suites(params, cfg);
        json doc = header(cfg, "verify");
        json arr = json::array();
        bool ok = true;
        for (const auto& s : suites) {
            arr.push_back(s.to_json());
            ok = ok && s.failures == 0;
        }
        doc["suites"] = arr;
        doc["passed"] = ok;
        return Outcome{ok ? kExitOk : kExitFailed, emit(cfg, doc), {}};
    });
}

Outcome cmd_quiver(const RunConfig& cfg, const std::optional<std::vector<int>>& highlight)
{
    return guarded([&] {
        const auto params = prepare(cfg, true);
        wide::Subcat marked;
        if (highlight)
            marked = wide::Subcat::from_indices(params, *highlight);
        const int m = params.m(), ell = params.ell();

        std::vector<Node> nodes;
        for (int len = ell; len >= 1; --len)
            for (int a = 1; a + len - 1 <= m; ++a) {
                Node nd{{a, a + len - 1}, index_of_interval(params, {a, a + len - 1}), false};
                nd.highlighted = nd.f && marked.contains(*nd.f);
                nodes.push_back(nd);
            }
        std::vector<std::pair<IntervalSupport, IntervalSupport>> arrows;
        for (const auto& nd : nodes) {
            const auto s = nd.s;
            if (s.b + 1 <= m && s.length() + 1 <= ell)
                arrows.push_back({s, {s.a, s.b + 1}});
            if (s.a + 1 <= s.b)
                arrows.push_back({s, {s.a + 1, s.b}});
        }
        std::sort(arrows.begin(), arrows.end());
        const auto labelled = std::count_if(nodes.begin(), nodes.end(), [](const Node& nd) { return nd.f.has_value(); });

        if (cfg.format == Format::Dot) {
            std::ostringstream os;
            os << "// nakwide " << kVersion << " AR quiver m=" << m << " ell=" << ell << " d=" << params.d() << "\n";
            os << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=plaintext, fontname=\"Helvetica\"];\n";
            for (const auto& nd : nodes) {
                os << "  " << node_id(nd.s) << " [label=\"" << interval_label(nd.s);
                if (nd.f)
                    os << "\\nf_" << nd.f->value << "\", shape=box";
                else
                    os << "\"";
                if (nd.highlighted)
                    os << ", style=filled, fillcolor=lightgrey, peripheries=2";
                os << "];\n";
            }
            for (int len = ell; len >= 1; --len) {
                os << "  { rank=same;";
                for (const auto& nd : nodes)
                    if (nd.s.length() == len)
                        os << ' ' << node_id(nd.s) << ';';
                os << " }\n";
            }
            for (const auto& [from, to] : arrows)
                os << "  " << node_id(from) << " -> " << node_id(to) << ";\n";
            os << "}\n";
            return Outcome{kExitOk, os.str(), {}};
        }

        if (cfg.format == Format::Text) {
            std::ostringstream os;
            os << "AR quiver m=" << m << " ell=" << ell << " d=" << params.d() << " (" << nodes.size() << " indecomposables, "
               << labelled << " in F)\n";
            for (int len = ell; len >= 1; --len) {
                os << "length " << len << ":";
                for (const auto& nd : nodes) {
                    if (nd.s.length() != len)
                        continue;
                    os << "  " << interval_label(nd.s);
                    if (nd.f)
                        os << "=f_" << nd.f->value << (nd.highlighted ? "*" : "");
                }
                os << '\n';
            }
            return Outcome{kExitOk, os.str(), {}};
        }

        json doc = header(cfg, "quiver");
        json jn = json::array();
        for (const auto& nd : nodes)
            jn.push_back({{"a", nd.s.a}, {"b", nd.s.b}, {"f", nd.f ? json(nd.f->value) : json(nullptr)}, {"highlighted", nd.highlighted}});
        json ja = json::array();
        for (const auto& [from, to] : arrows)
            ja.push_back({{from.a, from.b}, {to.a, to.b}});
        doc["nodes"] = jn;
        doc["arrows"] = ja;
        doc["labelled"] = labelled;
        doc["highlight"] = marked.members();
        return Outcome{kExitOk, emit(cfg, doc), {}};
    });
}

Outcome cmd_tables(const RunConfig& cfg)
{
    return guarded([&] {
        const auto params = prepare(cfg);
        const auto t = rep::hom_ext_tables(params, cfg.prime);
        json doc = header(cfg, "tables");
        doc["hom"] = t.hom;
        doc["ext_d"] = t.ext_d;
        return Outcome{kExitOk, emit(cfg, doc), {}};
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wide subcategories of d-cluster tilting subcategories of Nakayama algebras", "nakwide"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    RunConfig cfg;
    std::string format = "json";
    std::string subcat;
    std::function<Outcome()> action;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--m", cfg.m, "number of vertices")->required();
        sc->add_option("--ell", cfg.ell, "Loewy length")->required();
        sc->add_option("--d", cfg.d, "cluster tilting order")->required();
        sc->add_option("--prime", cfg.prime, "field characteristic for the representation engine")->capture_default_str();
        sc->add_option("--enum-bound", cfg.enum_bound, "largest n to enumerate (<= 30)")->capture_default_str();
        sc->add_option("--workers", cfg.workers, "enumeration threads")->capture_default_str();
        sc->add_option("--format", format, "json | text | dot")->capture_default_str();
        sc->add_option("--out", cfg.output, "output file, - for stdout")->capture_default_str();
    };

    auto* classify = app.add_subcommand("classify", "classify a subcategory of F");
    common(classify);
    classify->add_option("--subcat", subcat, "indices, e.g. 2,3,6,7,10,11")->required();
    classify->callback([&] { action = [&] { return cmd_classify(cfg, parse_subcat(subcat)); }; });

    auto* enumerate = app.add_subcommand("enumerate", "census of all wide subcategories");
    common(enumerate);
    enumerate->callback([&] { action = [&] { return cmd_enumerate(cfg); }; });

    auto* reduce = app.add_subcommand("reduce", "reduce an l-periodic subcategory to a smaller algebra");
    common(reduce);
    reduce->add_option("--subcat", subcat, "indices of an l-periodic subcategory")->required();
    reduce->callback([&] { action = [&] { return cmd_reduce(cfg, parse_subcat(subcat)); }; });

    auto* verify = app.add_subcommand("verify", "run every cross-validation suite");
    common(verify);
    verify->callback([&] { action = [&] { return cmd_verify(cfg); }; });

    auto* quiver = app.add_subcommand("quiver", "AR quiver as text, json or DOT");
    common(quiver);
    auto* hl = quiver->add_option("--subcat", subcat, "indices to highlight");
    quiver->callback([&] {
        action = [&, hl] {
            std::optional<std::vector<int>> marked;
            if (hl->count() > 0)
                marked = parse_subcat(subcat);
            return cmd_quiver(cfg, marked);
        };
    });

    auto* tables = app.add_subcommand("tables", "dump Hom and Ext^d tables");
    common(tables);
    tables->callback([&] { action = [&] { return cmd_tables(cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalid;
    }

    const auto fmt = parse_format(format);
    if (!fmt) {
        err << "nakwide: unknown format '" << format << "'\n";
        return kExitInvalid;
    }
    cfg.format = *fmt;

    Outcome result;
    try {
        result = action();
    } catch (const Error& e) { // parse_subcat
        result = {exit_for(e.kind()), {}, e.what()};
    }
    if (!result.error.empty())
        err << "nakwide: " << result.error << '\n';
    if (result.document.empty())
        return result.exit_code;

    if (cfg.output == "-") {
        out << result.document;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file || !(file << result.document)) {
            err << "nakwide: cannot write " << cfg.output << '\n';
            return kExitInvalid;
        }
    }
    return result.exit_code;
}

} // namespace nakwide::cli
