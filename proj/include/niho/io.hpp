// io.hpp
//
// Serialization.  Field elements are lowercase hex of their bit vectors
// (ExtElement: the packed value a + b*2^m).  JSON through nlohmann::json.
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "niho/bent.hpp"
#include "niho/equiv.hpp"
#include "niho/geometry.hpp"
#include "niho/gf2m.hpp"
#include "niho/gfun.hpp"
#include "niho/opoly.hpp"

namespace niho::io {

using json = nlohmann::ordered_json;

inline std::string hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::uint64_t parse_hex(const std::string& s) {
    std::string t = s;
    if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) t = t.substr(2);
    if (t.empty() || t.size() > 16) throw std::invalid_argument("bad hex value '" + s + "'");
    std::uint64_t v = 0;
    for (char c : t) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("bad hex value '" + s + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

inline std::string hex(FieldElement x) { return hex(x.bits); }
inline std::string hex(const Field& F, ExtElement x) { return hex(F.pack(x)); }

inline FieldElement parse_field_element(const Field& F, const std::string& s) {
    const std::uint64_t v = parse_hex(s);
    if (v >= F.q()) throw std::invalid_argument("element '" + s + "' is not in GF(2^" + std::to_string(F.m()) + ")");
    return FieldElement{static_cast<std::uint32_t>(v)};
}

inline ExtElement parse_ext_element(const Field& F, const std::string& s) {
    const std::uint64_t v = parse_hex(s);
    if (v >= std::uint64_t{F.q()} * F.q()) throw std::invalid_argument("element '" + s + "' is not in K");
    return F.unpack(static_cast<std::uint32_t>(v));
}

inline json field_params(const Field& F) {
    return {{"m", F.m()}, {"modulus_bits", hex(F.modulus())}, {"delta_bits", hex(F.delta())}};
}

inline Field field_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    Field F(m, static_cast<std::uint32_t>(parse_hex(j.at("modulus_bits").get<std::string>())));
    if (j.contains("delta_bits") && hex(F.delta()) != j.at("delta_bits").get<std::string>())
        throw std::invalid_argument("delta_bits does not match the field");
    return F;
}

// ---- point sets --------------------------------------------------------------

inline json points_json(const Field& F, const std::vector<ProjPointH>& pts) {
    json arr = json::array();
    for (const auto& p : pts) {
        const auto n = normalize(F, p);
        arr.push_back(json::array({hex(n.x), hex(n.y), hex(n.z)}));
    }
    return {{"model", "H"}, {"field", field_params(F)}, {"points", arr}};
}

inline json points_json(const Field& F, const std::vector<ProjPointK>& pts) {
    json arr = json::array();
    for (const auto& p : pts) {
        const auto n = normalize(F, p);
        arr.push_back(json::array({hex(F, n.x), hex(n.z)}));
    }
    return {{"model", "K"}, {"field", field_params(F)}, {"points", arr}};
}

/// Points of either model, returned in the homogeneous model.
inline std::vector<ProjPointH> points_from_json(const Field& F, const json& j) {
    std::vector<ProjPointH> out;
    const std::string model = j.at("model").get<std::string>();
    for (const auto& p : j.at("points")) {
        if (model == "H") {
            out.push_back(normalize(F, ProjPointH{parse_field_element(F, p.at(0)), parse_field_element(F, p.at(1)),
                                                  parse_field_element(F, p.at(2))}));
        } else if (model == "K") {
            out.push_back(to_h(F, ProjPointK{parse_ext_element(F, p.at(0)), parse_field_element(F, p.at(1))}));
        } else {
            throw std::invalid_argument("unknown point model '" + model + "'");
        }
    }
    return out;
}

// ---- g tables ------------------------------------------------------------------

inline json g_header(const Field& F, const GFunction& g) {
    return {{"field", field_params(F)}, {"label", g.label}, {"size", g.size()}};
}

inline std::string g_csv(const Field& F, const GFunction& g) {
    std::ostringstream os;
    os << "u_index,u_hex,g_hex\n";
    for (std::uint32_t k = 0; k < g.size(); ++k) os << k << ',' << hex(F, F.unit(k)) << ',' << hex(g[k]) << '\n';
    return os.str();
}

inline GFunction g_from_csv(const Field& F, const std::string& text, std::string label = "csv") {
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    if (line.rfind("u_index,u_hex,g_hex", 0) != 0) throw std::invalid_argument("g csv: missing header");
    GFunction g;
    g.label = std::move(label);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("g csv: bad row");
        const auto k = static_cast<std::uint32_t>(std::stoul(line.substr(0, c1)));
        if (k != g.values.size()) throw std::invalid_argument("g csv: rows out of order");
        if (parse_ext_element(F, line.substr(c1 + 1, c2 - c1 - 1)) != F.unit(k))
            throw std::invalid_argument("g csv: u_hex does not match the circle generator");
        g.values.push_back(parse_field_element(F, line.substr(c2 + 1)));
    }
    if (g.size() != F.circle_size()) throw std::invalid_argument("g csv: wrong number of rows");
    return g;
}

// ---- o-polynomials -----------------------------------------------------------

inline std::string opoly_csv(const OPolyTable& h) {
    std::ostringstream os;
    os << "t_hex,h_hex\n";
    for (std::uint32_t t = 0; t < h.size(); ++t) os << hex(t) << ',' << hex(h.values[t]) << '\n';
    return os.str();
}

inline json opoly_meta(const Field& F, const OPolyFamily& fam, bool valid) {
    json j = {{"field", field_params(F)}, {"family", to_string(fam.kind)}};
    if (fam.kind == OPolyKind::Translation) j["r"] = fam.r;
    if (fam.d) j["d_hex"] = hex(*fam.d);
    if (fam.b) j["b_hex"] = hex(F, *fam.b);
    if (fam.kind == OPolyKind::Adelaide) j["k_sign"] = fam.k_sign;
    j["is_opolynomial"] = valid;
    return j;
}

// ---- Boolean functions and spectra -------------------------------------------

/// 2^n bits, bit v of the file = f(x) for packed x = v, least significant bit first.
inline std::string truth_table_bits(const BooleanFn& f) {
    std::string out((f.size() + 7) / 8, '\0');
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f.bits[v]) out[v / 8] = static_cast<char>(out[v / 8] | (1 << (v % 8)));
    return out;
}

inline BooleanFn truth_table_from_bits(int m, const std::string& raw) {
    BooleanFn f{m, std::vector<std::uint8_t>(std::size_t{1} << (2 * m))};
    if (raw.size() != (f.size() + 7) / 8) throw std::invalid_argument("truth table: wrong size");
    for (std::size_t v = 0; v < f.size(); ++v) f.bits[v] = (static_cast<unsigned char>(raw[v / 8]) >> (v % 8)) & 1;
    return f;
}

inline std::string spectrum_le32(const WalshSpectrum& w) {
    std::string out;
    out.reserve(w.size() * 4);
    for (std::int32_t x : w) {
        const auto u = static_cast<std::uint32_t>(x);
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((u >> (8 * b)) & 255));
    }
    return out;
}

inline json spectrum_summary_json(const SpectrumSummary& s) {
    return {{"min", s.min}, {"max", s.max}, {"is_bent", s.is_bent}};
}

inline json poly_json(const Field& F, const NihoPolynomial& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms) arr.push_back({{"exp", e}, {"coeff_hex", hex(F, c)}});
    return arr;
}

inline NihoPolynomial poly_from_json(const Field& F, const json& j) {
    NihoPolynomial p;
    for (const auto& t : j) p.add(F, t.at("exp").get<std::uint64_t>(), parse_ext_element(F, t.at("coeff_hex")));
    return p;
}

// ---- classification report -------------------------------------------------------

/// g_csv_ref(k) names the CSV file written for class k.
inline json classify_report(const Field& F, const std::string& family, const Classification& cl,
                            const std::vector<std::string>& g_csv_refs) {
    json classes = json::array();
    for (std::size_t k = 0; k < cl.classes.size(); ++k) {
        const auto& c = cl.classes[k];
        json e;
        if (c.s) e["rep_s"] = *c.s;
        else e["rep_s"] = "origin";
        e["orbit_size"] = c.orbit_size;
        e["g_csv_ref"] = k < g_csv_refs.size() ? g_csv_refs[k] : "";
        e["niho_poly"] = poly_json(F, c.f);
        e["bent_check"] = c.bent;
        classes.push_back(std::move(e));
    }
    json j = {{"family", family},
              {"m", F.m()},
              {"field", field_params(F)},
              {"stabilizer_order", cl.orbits.stabilizer_order},
              {"orbit_sizes", cl.orbits.orbit_sizes()},
              {"classes", classes}};
    if (cl.pairwise_inequivalent) j["pairwise_inequivalent"] = *cl.pairwise_inequivalent;
    return j;
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

inline std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace niho::io
