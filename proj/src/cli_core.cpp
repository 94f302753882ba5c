#include "braidconc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "braidconc/acceptance.hpp"
#include "braidconc/harness.hpp"
#include "json.hpp"

using nlohmann::json;

namespace bc {
namespace {

const char* kUsage =
    "usage: braidconc <subcommand> [flags] [braid words]\n"
    "\n"
    "subcommands:\n"
    "  invariants <braid>          invariant profile of the braid's knot closure\n"
    "  psi <braid>                 knot projection of the braid, plus its profile\n"
    "  defect <braid> -- <braid>   defect element of the pair and its genus bounds\n"
    "  family                      power-family scan (--family gamma|notorious, or --base)\n"
    "  sweep                       property sweep (--kind defect|lipschitz)\n"
    "  verify-paper                run the full acceptance suite\n"
    "  normal-form <braid>         curve coordinates of the braid (word-problem form)\n"
    "\n"
    "braid words are written  Bn: i1 i2 ...  (nonzero integers, |i| < n) or with\n"
    "symbolic letters  s1 s2^-1.\n"
    "\n"
    "flags:\n"
    "  --format text|csv|json      output format (default text)\n"
    "  --paper-sign                flip the sign convention of reported signatures\n"
    "  --precision T               eigenvalue certification tolerance (default 1e-9)\n"
    "  --omega q1,q2,...           odd primes for omega-signatures\n"
    "  --config FILE               key = value defaults (flags override)\n"
    "  --out FILE                  write the main report to FILE instead of stdout\n"
    "  --svg FILE                  also write an SVG plot (family scans)\n"
    "  --cache-dir DIR             invariant cache directory (env BRAIDCONC_CACHE_DIR overrides)\n"
    "  --seed N                    RNG seed for randomized sweeps\n"
    "  --family NAME --pmin A --pmax B --base <braid> --post psi|psi-even|raw\n"
    "  --kind defect|lipschitz --n N --max-len L --samples S\n";

struct Options {
    std::string format = "text";
    bool paper_sign = false;
    double precision = 1e-9;
    std::vector<int> omega = {3, 5, 7, 11, 13, 17, 19, 23};
    std::string out_path, svg_path, cache_dir;
    std::uint64_t seed = 20260814;

    std::string family_name, base_text, post = "psi";
    int pmin = 1, pmax = 10;
    std::string kind;
    int n = 3, max_len = 3, samples = 100;
};

std::vector<int> parse_prime_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ParseError("empty omega prime list", 1, 1);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

void load_config(const std::string& path, Options& o) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path, 1, 1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("config line has no '='", lineno, 1);
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key == "precision")
            o.precision = std::stod(val);
        else if (key == "omega")
            o.omega = parse_prime_list(val);
        else if (key == "cache_dir")
            o.cache_dir = val;
        else if (key == "paper_sign")
            o.paper_sign = (val == "true" || val == "1" || val == "yes");
        else if (key == "format")
            o.format = val;
        else
            throw ParseError("unknown config key '" + key + "'", lineno, 1);
    }
}

// Flags may appear anywhere after the subcommand; everything else is braid
// text (so bare "-2" letters and the "--" pair separator survive).
Options parse_flags(const std::vector<std::string>& args, size_t from,
                    std::vector<std::string>& positional) {
    Options o;
    // config first so that explicit flags override it
    for (size_t i = from; i < args.size(); ++i)
        if (args[i] == "--config" && i + 1 < args.size()) load_config(args[i + 1], o);

    auto need_value = [&](size_t& i, const std::string& flag) -> const std::string& {
        if (i + 1 >= args.size()) throw ParseError("flag " + flag + " needs a value", 1, 1);
        return args[++i];
    };
    for (size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format")
            o.format = need_value(i, a);
        else if (a == "--paper-sign")
            o.paper_sign = true;
        else if (a == "--precision")
            o.precision = std::stod(need_value(i, a));
        else if (a == "--omega")
            o.omega = parse_prime_list(need_value(i, a));
        else if (a == "--config")
            ++i;  // handled above
        else if (a == "--out")
            o.out_path = need_value(i, a);
        else if (a == "--svg")
            o.svg_path = need_value(i, a);
        else if (a == "--cache-dir")
            o.cache_dir = need_value(i, a);
        else if (a == "--seed")
            o.seed = std::stoull(need_value(i, a));
        else if (a == "--family")
            o.family_name = need_value(i, a);
        else if (a == "--base")
            o.base_text = need_value(i, a);
        else if (a == "--post")
            o.post = need_value(i, a);
        else if (a == "--pmin")
            o.pmin = std::stoi(need_value(i, a));
        else if (a == "--pmax")
            o.pmax = std::stoi(need_value(i, a));
        else if (a == "--kind")
            o.kind = need_value(i, a);
        else if (a == "--n")
            o.n = std::stoi(need_value(i, a));
        else if (a == "--max-len")
            o.max_len = std::stoi(need_value(i, a));
        else if (a == "--samples")
            o.samples = std::stoi(need_value(i, a));
        else if (a.size() > 2 && a.rfind("--", 0) == 0)
            throw ParseError("unknown flag " + a, 1, 1);
        else
            positional.push_back(a);  // braid text, including "--" and "-2"
    }
    if (o.format != "text" && o.format != "csv" && o.format != "json")
        throw ParseError("--format must be text, csv, or json", 1, 1);
    return o;
}

std::string join(const std::vector<std::string>& parts, size_t from, size_t to) {
    std::string s;
    for (size_t i = from; i < to; ++i) {
        if (!s.empty()) s += ' ';
        s += parts[i];
    }
    return s;
}

std::vector<OmegaPoint> omega_points(const Options& o) {
    std::vector<OmegaPoint> pts;
    pts.push_back(OmegaPoint::minus_one());
    for (int q : o.omega) pts.push_back(OmegaPoint::from_prime(q));
    return pts;
}

void apply_paper_sign(InvariantProfile& p, bool flip) {
    if (!flip) return;
    p.signature = -p.signature;
    for (auto& [w, s] : p.omega_signatures)
        if (s.ok()) s.value = -s.value;
}

void render_profile(std::ostream& out, const std::string& format, const InvariantProfile& p,
                    const std::map<std::string, std::string>& extra) {
    if (format == "json") {
        json j;
        j["schema"] = kSchemaVersion;
        for (const auto& [k, v] : extra) j[k] = v;
        for (const auto& [k, v] : p.fields()) j[k] = v;
        json obstructions = json::array();
        for (const std::string& r : slice_obstructions(p).reasons()) obstructions.push_back(r);
        j["slice_obstructions"] = obstructions;
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        auto fields = p.fields();
        bool first = true;
        for (const auto& [k, v] : extra) {
            out << (first ? "" : ",") << k;
            first = false;
        }
        for (const auto& [k, v] : fields) out << (first ? "" : ",") << k, first = false;
        out << "\n";
        first = true;
        for (const auto& [k, v] : extra) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        for (const auto& [k, v] : fields) out << (first ? "" : ",") << v, first = false;
        out << "\n";
        return;
    }
    for (const auto& [k, v] : extra) out << k << ": " << v << "\n";
    out << "signature: " << p.signature << "\n";
    out << "determinant: " << p.determinant.str()
        << (is_square(p.determinant) ? " (square)" : " (not a square)") << "\n";
    out << "alexander: " << p.alexander.pretty("t") << "\n";
    for (const auto& [w, s] : p.omega_signatures)
        if (!w.is_minus_one()) out << "sig @ " << w.label() << ": " << s.render() << "\n";
    out << "g4_lower: " << p.g4_lower;
    if (p.g4_upper) out << "   g4_upper: " << *p.g4_upper;
    out << "\n";
    out << "genus3 bounds: [" << p.genus3_lower << ", " << p.genus3_upper_bound << "]\n";
    auto reasons = slice_obstructions(p).reasons();
    out << "slice obstructions: ";
    if (reasons.empty())
        out << "none found\n";
    else {
        for (size_t i = 0; i < reasons.size(); ++i) out << (i ? "; " : "") << reasons[i];
        out << "\n";
    }
}

int cmd_invariants(const Options& o, const std::string& braid_text, std::ostream& out) {
    BraidWord a = parse_braid(braid_text);
    InvariantProfile p = invariant_profile(KnotRep(a), omega_points(o), o.precision);
    apply_paper_sign(p, o.paper_sign);
    render_profile(out, o.format, p, {{"braid", print_braid(a)}});
    return EXIT_OK;
}

int cmd_psi(const Options& o, const std::string& braid_text, std::ostream& out) {
    BraidWord a = parse_braid(braid_text);
    KnotRep k = psi(a);
    InvariantProfile p = invariant_profile(k, omega_points(o), o.precision);
    apply_paper_sign(p, o.paper_sign);
    if (o.format == "text") out << print_braid(k.braid) << "\n";
    render_profile(out, o.format, p,
                   {{"input", print_braid(a)}, {"projection", print_braid(k.braid)}});
    return EXIT_OK;
}

int cmd_defect(const Options& o, const std::vector<std::string>& positional, std::ostream& out) {
    auto sep = std::find(positional.begin(), positional.end(), "--");
    if (sep == positional.end())
        throw ParseError("defect needs two braids separated by --", 1, 1);
    size_t cut = sep - positional.begin();
    BraidWord a = parse_braid(join(positional, 0, cut));
    BraidWord b = parse_braid(join(positional, cut + 1, positional.size()));
    KnotRep d = defect_element(a, b);
    InvariantProfile p = invariant_profile(d, omega_points(o), o.precision);
    apply_paper_sign(p, o.paper_sign);
    int bound = 3 * a.strands() + 1;
    std::map<std::string, std::string> extra = {
        {"defect_element", print_braid(d.braid)},
        {"bound_3n_plus_1", std::to_string(bound)},
        {"within_bound", p.g4_lower <= bound ? "yes" : "no"},
    };
    render_profile(out, o.format, p, extra);
    return p.g4_lower <= bound ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_family(const Options& o, std::ostream& out) {
    FamilySpec spec;
    if (o.family_name == "gamma")
        spec = gamma_family(o.pmin, o.pmax);
    else if (o.family_name == "notorious")
        spec = notorious_family(o.pmin, o.pmax);
    else if (!o.base_text.empty()) {
        spec.name = o.family_name.empty() ? "custom" : o.family_name;
        spec.base = parse_braid(o.base_text);
        spec.p_min = o.pmin;
        spec.p_max = o.pmax;
        if (o.post == "psi")
            spec.post_map = FamilySpec::PostMap::Psi;
        else if (o.post == "psi-even")
            spec.post_map = FamilySpec::PostMap::PsiEven;
        else if (o.post == "raw")
            spec.post_map = FamilySpec::PostMap::RawClosure;
        else
            throw ParseError("--post must be psi, psi-even, or raw", 1, 1);
    } else {
        throw ParseError("family needs --family gamma|notorious or --base <braid>", 1, 1);
    }
    spec.omega_primes = o.omega;

    ScanOptions sopt;
    sopt.tol = o.precision;
    sopt.cache.dir = o.cache_dir;
    std::vector<ScanRow> rows = family_scan(spec, sopt);
    if (o.paper_sign)
        for (ScanRow& r : rows) {
            if (r.signature) r.signature = -*r.signature;
            if (r.profile) apply_paper_sign(*r.profile, true);
        }

    if (!o.svg_path.empty()) {
        std::ofstream svg(o.svg_path, std::ios::binary);
        svg << scan_svg(spec, rows);
    }
    if (o.format == "json")
        out << scan_json(spec, rows, sopt);
    else
        out << scan_csv(spec, rows);  // text and csv share the tabular form
    bool ok = std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.pass(); });
    return ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    if (o.kind == "defect") {
        DefectSweepReport rep = defect_sweep(o.n, o.max_len);
        if (o.format == "json") {
            json j = {{"schema", kSchemaVersion},
                      {"kind", "defect_sweep"},
                      {"n", rep.n},
                      {"max_len", rep.max_len},
                      {"bound", rep.bound},
                      {"pairs", rep.pairs},
                      {"max_observed", rep.max_observed},
                      {"worst", rep.worst},
                      {"violations", rep.violations},
                      {"pass", rep.pass()}};
            out << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            out << "n,max_len,bound,pairs,max_observed,violations,pass\n"
                << rep.n << ',' << rep.max_len << ',' << rep.bound << ',' << rep.pairs << ','
                << rep.max_observed << ',' << rep.violations << ','
                << (rep.pass() ? "yes" : "no") << "\n";
        } else {
            out << "defect sweep over B" << rep.n << ", word length <= " << rep.max_len << ": "
                << rep.pairs << " pairs, max g4_lower " << rep.max_observed << " (bound "
                << rep.bound << ", worst pair " << rep.worst << "), " << rep.violations
                << " violations\n";
        }
        return rep.pass() ? EXIT_OK : EXIT_CHECK_FAILED;
    }
    if (o.kind == "lipschitz") {
        LipschitzReport rep = lipschitz_sweep(o.n, o.samples, o.max_len, o.seed);
        if (o.format == "json") {
            json j = {{"schema", kSchemaVersion}, {"kind", "lipschitz_sweep"},
                      {"n", rep.n},             {"samples", rep.samples},
                      {"max_len", rep.max_len}, {"seed", rep.seed},
                      {"max_g4", rep.max_g4},   {"violations", rep.violations},
                      {"pass", rep.pass()}};
            out << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            out << "n,samples,max_len,seed,max_g4,violations,pass\n"
                << rep.n << ',' << rep.samples << ',' << rep.max_len << ',' << rep.seed << ','
                << rep.max_g4 << ',' << rep.violations << ',' << (rep.pass() ? "yes" : "no")
                << "\n";
        } else {
            out << "lipschitz sweep over B" << rep.n << ", " << rep.samples
                << " seeded words (seed " << rep.seed << ", length <= " << rep.max_len
                << "): max g4_lower " << rep.max_g4 << ", " << rep.violations << " violations\n";
        }
        return rep.pass() ? EXIT_OK : EXIT_CHECK_FAILED;
    }
    throw ParseError("sweep needs --kind defect or --kind lipschitz", 1, 1);
}

int cmd_normal_form(const std::string& braid_text, std::ostream& out) {
    BraidWord a = parse_braid(braid_text);
    NormalCoordinates nc = normal_coordinates(a);
    out << "strands: " << nc.strands() << "\ncoordinates:";
    for (const BigInt& c : nc.coordinates()) out << ' ' << c.str();
    out << "\nidentity: " << (nc.is_base() ? "yes" : "no") << "\n";
    return EXIT_OK;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return EXIT_PARSE;
        }
        const std::string& cmd = args[0];
        std::vector<std::string> positional;
        Options o = parse_flags(args, 1, positional);

        std::ofstream file_out;
        std::ostream* sink = &out;
        if (!o.out_path.empty()) {
            file_out.open(o.out_path, std::ios::binary);
            if (!file_out) throw DomainError("cannot open output file " + o.out_path);
            sink = &file_out;
        }

        if (cmd == "invariants") return cmd_invariants(o, join(positional, 0, positional.size()), *sink);
        if (cmd == "psi") return cmd_psi(o, join(positional, 0, positional.size()), *sink);
        if (cmd == "defect") return cmd_defect(o, positional, *sink);
        if (cmd == "family") return cmd_family(o, *sink);
        if (cmd == "sweep") return cmd_sweep(o, *sink);
        if (cmd == "verify-paper")
            return run_acceptance(*sink) == 0 ? EXIT_OK : EXIT_CHECK_FAILED;
        if (cmd == "normal-form")
            return cmd_normal_form(join(positional, 0, positional.size()), *sink);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            out << kUsage;
            return EXIT_OK;
        }
        throw ParseError("unknown subcommand '" + cmd + "'", 1, 1);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::invalid_argument& e) {
        err << "error: bad numeric argument: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_CHECK_FAILED;
    }
}

}  // namespace bc
