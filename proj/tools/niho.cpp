// niho: construct, verify, classify and export Niho bent functions.
//
// Exit codes: 0 ok, 2 validation error (bad arguments or an invalid object),
// 3 reproduction mismatch.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "niho/niho.hpp"

namespace {

using namespace niho;
using io::json;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;

struct Config {
    int m = 5;
    std::string family = "hyperconic";
    std::optional<int> r;
    std::string d_hex;
    std::optional<std::uint32_t> s_index;
    std::string out;
    std::string format = "json";
    int threads = 1;
    bool allow_slow = false;
    std::string modulus_hex;
    bool check = false;
    std::string target;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field make_field(const Config& c) {
    std::optional<std::uint32_t> mod;
    if (!c.modulus_hex.empty()) mod = static_cast<std::uint32_t>(io::parse_hex(c.modulus_hex));
    return Field(c.m, mod);
}

void emit(const Config& c, const std::string& data, const std::string& suffix = "") {
    if (c.out.empty() || c.out == "-") {
        std::cout << data;
        return;
    }
    io::write_file(c.out + suffix, data);
}

GFamilySpec gspec(const Config& c) {
    GFamilySpec s{parse_gfamily(c.family), 1};
    if (s.family == GFamily::Subiaco) s.r = 0;
    if (s.family == GFamily::TranslationThird) s.r = 2;
    if (c.r) s.r = *c.r;
    return s;
}

GFunction build_g(const Field& F, const Config& c) {
    GFunction g = g_catalog(F, gspec(c));
    if (c.s_index) {
        if (*c.s_index > F.circle_size()) throw ValidationError("--s-index must be at most q+1");
        if (*c.s_index < F.circle_size()) {
            const auto label = g.label;
            g = g_shift(F, fix_zeros(F, g).first, *c.s_index);
            g.label = label + "; shift s=" + std::to_string(*c.s_index);
        }
    }
    return g;
}

void slow_gate(const Field& F, const Config& c) {
    if (F.m() >= 7 && !c.allow_slow) throw ValidationError("classification at m >= 7 needs --allow-slow");
}

int cmd_field(const Config& c) {
    const Field F = make_field(c);
    json j = io::field_params(F);
    j["q"] = F.q();
    j["circle_generator_hex"] = io::hex(F, F.unit(1));
    j["i_hex"] = io::hex(F, F.i());
    emit(c, j.dump(2) + "\n");
    return kOk;
}

int cmd_opoly(const Config& c) {
    const Field F = make_field(c);
    OPolyFamily fam;
    const std::string& f = c.family;
    bool found = false;
    for (int k = 0; k < static_cast<int>(OPolyKind::Table); ++k)
        if (to_string(static_cast<OPolyKind>(k)) == f) {
            fam.kind = static_cast<OPolyKind>(k);
            found = true;
        }
    if (!found) throw ValidationError("unknown o-polynomial family '" + f + "'");
    if (c.r) fam.r = *c.r;
    if (!c.d_hex.empty()) fam.d = io::parse_field_element(F, c.d_hex);
    const OPolyTable h = opoly_table(F, fam);
    const bool valid = is_opolynomial(F, h);
    if (c.format == "csv") emit(c, io::opoly_csv(h));
    else emit(c, io::opoly_meta(F, fam, valid).dump(2) + "\n");
    if (!valid) {
        std::cerr << "not an o-polynomial for m = " << F.m() << "\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_gfun(const Config& c) {
    const Field F = make_field(c);
    const GFunction g = build_g(F, c);
    const GValidation v = validate_g(F, g);
    if (c.format == "csv") {
        emit(c, io::g_csv(F, g));
        if (!c.out.empty() && c.out != "-") {
            json h = io::g_header(F, g);
            h["valid"] = v.valid();
            io::write_file(c.out + ".json", h.dump(2) + "\n");
        }
    } else {
        json h = io::g_header(F, g);
        h["valid"] = v.valid();
        h["bent"] = v.bent;
        h["line_oval"] = v.line_oval;
        h["oval"] = v.oval;
        json vals = json::array();
        for (auto x : g.values) vals.push_back(io::hex(x));
        h["values_hex"] = vals;
        emit(c, h.dump(2) + "\n");
    }
    return v.valid() ? kOk : kInvalid;
}

int cmd_bent(const Config& c) {
    const Field F = make_field(c);
    const GFunction g = build_g(F, c);
    const BooleanFn f = bent_from_g(F, g);
    const WalshSpectrum w = walsh_spectrum(F, f);
    const SpectrumSummary s = summarize(F, w);
    if (c.format == "bits") {
        if (c.out.empty() || c.out == "-") throw ValidationError("--format bits needs --out");
        io::write_file(c.out, io::truth_table_bits(f));
        io::write_file(c.out + ".walsh", io::spectrum_le32(w));
    } else if (c.format == "json") {
        const auto [gz, shift] = fix_zeros(F, g);
        (void)shift;
        const NihoPolynomial p = f_univariate(F, affine_oval(F, gz));
        if (!c.out.empty() && c.out != "-") io::write_file(c.out, io::poly_json(F, p).dump(2) + "\n");
    } else {
        throw ValidationError("bent: --format must be bits or json");
    }
    std::cout << io::spectrum_summary_json(s).dump() << "\n";
    if (c.check && !s.is_bent) return kInvalid;
    return kOk;
}

int cmd_classify(const Config& c) {
    const Field F = make_field(c);
    slow_gate(F, c);
    const GFunction g = build_g(F, c);
    const Classification cl = classify_bent(F, g, {c.threads, true, true});
    std::vector<std::string> refs;
    const bool to_dir = !c.out.empty() && c.out != "-";
    if (to_dir) std::filesystem::create_directories(c.out);
    for (std::size_t k = 0; k < cl.classes.size(); ++k) {
        const std::string name = "class_" + std::to_string(k) + ".csv";
        refs.push_back(name);
        if (to_dir) io::write_file((std::filesystem::path(c.out) / name).string(), io::g_csv(F, cl.classes[k].g));
    }
    const json report = io::classify_report(F, c.family, cl, refs);
    if (to_dir) io::write_file((std::filesystem::path(c.out) / "report.json").string(), report.dump(2) + "\n");
    else std::cout << report.dump(2) << "\n";
    std::cerr << c.family << " m=" << F.m() << ": |Aut| = " << cl.orbits.stabilizer_order << ", "
              << cl.classes.size() << " classes\n";
    return kOk;
}

int cmd_reproduce(const Config& c) {
    repro::Session S({c.threads, c.allow_slow});
    std::vector<std::string> which;
    if (c.target == "all") which = repro::targets();
    else which = {c.target};
    bool ok = true;
    json all = json::array();
    for (const auto& t : which) {
        const auto rep = repro::reproduce(S, t);
        ok = ok && rep.ok();
        if (c.format == "json") all.push_back(rep.to_json());
        else rep.print(std::cout);
    }
    if (c.format == "json") emit(c, all.dump(2) + "\n");
    return ok ? kOk : kMismatch;
}

void common(CLI::App* sub, Config& c, bool family = true) {
    sub->add_option("--m", c.m, "field degree m (q = 2^m)")->check(CLI::Range(1, 16));
    sub->add_option("--modulus-hex", c.modulus_hex, "irreducible modulus for F, hex bit vector");
    if (!family) return;
    sub->add_option("--family", c.family, "hyperoval family");
    sub->add_option("--r", c.r, "translation r, or the Subiaco coefficient index");
    sub->add_option("--s-index", c.s_index, "circle index of the point moved to the nucleus (q+1 = origin)");
    sub->add_option("--threads", c.threads, "worker threads for the stabilizer search")->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Niho bent functions from hyperovals"};
    app.require_subcommand(1);
    Config c;

    auto* field = app.add_subcommand("field", "field parameters");
    common(field, c, false);
    field->add_option("--out", c.out, "output file");

    auto* opoly = app.add_subcommand("opoly", "o-polynomial table and metadata");
    common(opoly, c);
    opoly->add_option("--d-hex", c.d_hex, "Subiaco parameter d");
    opoly->add_option("--out", c.out, "output file");
    opoly->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* gfun = app.add_subcommand("gfun", "g-function table");
    common(gfun, c);
    gfun->add_option("--out", c.out, "output file");
    gfun->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* bent = app.add_subcommand("bent", "truth table, spectrum and polynomial form");
    common(bent, c);
    bent->add_option("--out", c.out, "output file");
    bent->add_option("--format", c.format, "bits or json")->check(CLI::IsMember({"bits", "json"}));
    bent->add_flag("--check", c.check, "exit 2 unless the function is bent");

    auto* classify = app.add_subcommand("classify", "equivalence classes of the hyperoval's bent functions");
    common(classify, c);
    classify->add_option("--out", c.out, "output directory");
    classify->add_flag("--allow-slow", c.allow_slow, "permit m >= 7");

    auto* reproduce = app.add_subcommand("reproduce", "check the published tables and statements");
    reproduce->add_option("target", c.target, "table1 | table2 | sec4.6 | theorems | all")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "sec4.6", "theorems", "all"}));
    reproduce->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
    reproduce->add_flag("--allow-slow", c.allow_slow, "include the m = 7 classifications");
    reproduce->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    reproduce->add_option("--out", c.out, "output file for json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (reproduce->parsed() && reproduce->count("--format") == 0) c.format = "text";
        // a .csv output name selects csv unless a format was given
        for (auto* sub : {opoly, gfun})
            if (sub->parsed() && sub->count("--format") == 0 && c.out.size() > 4 && c.out.ends_with(".csv")) c.format = "csv";
        if (field->parsed()) return cmd_field(c);
        if (opoly->parsed()) return cmd_opoly(c);
        if (gfun->parsed()) return cmd_gfun(c);
        if (bent->parsed()) return cmd_bent(c);
        if (classify->parsed()) return cmd_classify(c);
        if (reproduce->parsed()) return cmd_reproduce(c);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kInvalid;
}
