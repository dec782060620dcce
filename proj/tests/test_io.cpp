#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "niho/niho.hpp"

using namespace niho;

namespace {

const std::string kGolden = NIHO_GOLDEN_DIR;

// NIHO_UPDATE_GOLDEN=1 rewrites the files instead of comparing
void check_golden(const std::string& name, const std::string& content) {
    const std::string path = kGolden + "/" + name;
    if (std::getenv("NIHO_UPDATE_GOLDEN")) {
        std::filesystem::create_directories(kGolden);
        io::write_file(path, content);
        return;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(io::read_file(path), content) << path;
}

struct Case {
    int m;
    GFamilySpec spec;
    std::string file;
};

// hyperovals of the small-dimension survey
std::vector<Case> survey() {
    std::vector<Case> out;
    for (int m = 1; m <= 6; ++m) out.push_back({m, {GFamily::Hyperconic, 1}, "hyperconic_m" + std::to_string(m)});
    out.push_back({4, {GFamily::LunelliSce, 1}, "lunelli-sce_m4"});
    out.push_back({5, {GFamily::Translation, 2}, "translation_m5_r2"});
    out.push_back({5, {GFamily::Segre, 1}, "segre_m5"});
    out.push_back({5, {GFamily::Payne, 1}, "payne_m5"});
    out.push_back({5, {GFamily::Cherowitzo, 1}, "cherowitzo_m5"});
    out.push_back({5, {GFamily::OKeefePenttila, 1}, "okeefe-penttila_m5"});
    out.push_back({6, {GFamily::Subiaco, 0}, "subiaco_m6_j0"});
    out.push_back({6, {GFamily::Subiaco, 1}, "subiaco_m6_j1"});
    out.push_back({6, {GFamily::Adelaide, 1}, "adelaide_m6"});
    return out;
}

}  // namespace

TEST(Hex, ParseAndFormat) {
    EXPECT_EQ(io::hex(std::uint64_t{255}), "ff");
    EXPECT_EQ(io::hex(std::uint64_t{0}), "0");
    EXPECT_EQ(io::parse_hex("0x1F"), 31u);
    EXPECT_EQ(io::parse_hex("abc"), 0xabcu);
    EXPECT_THROW(io::parse_hex(""), std::invalid_argument);
    EXPECT_THROW(io::parse_hex("12g"), std::invalid_argument);
    EXPECT_THROW(io::parse_hex("11111111111111111"), std::invalid_argument);
    const Field F(3);
    EXPECT_THROW(io::parse_field_element(F, "8"), std::invalid_argument);
    EXPECT_THROW(io::parse_ext_element(F, "40"), std::invalid_argument);
    for (std::uint32_t v = 0; v < 64; ++v) EXPECT_EQ(F.pack(io::parse_ext_element(F, io::hex(F, F.unpack(v)))), v);
}

TEST(FieldParams, RoundTrip) {
    for (int m = 1; m <= 8; ++m) {
        const Field F(m);
        const auto j = io::field_params(F);
        const Field G = io::field_from_json(j);
        EXPECT_EQ(G.modulus(), F.modulus());
        EXPECT_EQ(G.delta(), F.delta());
    }
    auto j = io::field_params(Field(4));
    j["delta_bits"] = "7";
    EXPECT_THROW(io::field_from_json(j), std::invalid_argument);
    EXPECT_EQ(io::field_params(Field(5)).dump(), R"({"m":5,"modulus_bits":"25","delta_bits":"1"})");
}

TEST(Points, RoundTripBothModels) {
    const Field F(4);
    const auto H = hyperoval_points(F, g_catalog(F, {GFamily::Adelaide, 1}));
    EXPECT_EQ(canonical(F, io::points_from_json(F, io::points_json(F, H))), canonical(F, H));
    std::vector<ProjPointK> K;
    for (const auto& p : H) K.push_back(to_k(F, p));
    const auto j = io::points_json(F, K);
    EXPECT_EQ(j.at("model"), "K");
    EXPECT_EQ(canonical(F, io::points_from_json(F, j)), canonical(F, H));
    auto bad = j;
    bad["model"] = "Q";
    EXPECT_THROW(io::points_from_json(F, bad), std::invalid_argument);
}

TEST(GCsv, RoundTripAndValidation) {
    const Field F(5);
    const GFunction g = g_catalog(F, {GFamily::Cherowitzo, 1});
    const std::string csv = io::g_csv(F, g);
    EXPECT_TRUE(io::g_from_csv(F, csv).same_table(g));
    EXPECT_THROW(io::g_from_csv(F, "x,y,z\n"), std::invalid_argument);
    std::string truncated = csv.substr(0, csv.rfind('\n', csv.size() - 2) + 1);
    EXPECT_THROW(io::g_from_csv(F, truncated), std::invalid_argument);
    std::string wrong_u = csv;
    wrong_u.replace(wrong_u.find("\n0,") + 3, 1, "2");
    EXPECT_THROW(io::g_from_csv(F, wrong_u), std::invalid_argument);
}

TEST(TruthTable, BitsAndSpectrum) {
    const Field F(3);
    const BooleanFn f = bent_from_g(F, g_catalog(F, {GFamily::Hyperconic, 1}));
    const std::string raw = io::truth_table_bits(f);
    EXPECT_EQ(raw.size(), 8u);
    EXPECT_EQ(io::truth_table_from_bits(3, raw), f);
    EXPECT_THROW(io::truth_table_from_bits(3, raw + "x"), std::invalid_argument);
    const std::string w = io::spectrum_le32(walsh_spectrum(F, f));
    ASSERT_EQ(w.size(), 64u * 4);
    // W(0) = +-8, little-endian
    const auto b0 = static_cast<unsigned char>(w[0]);
    EXPECT_TRUE(b0 == 8 || b0 == 0xf8);
}

TEST(Polynomial, JsonRoundTrip) {
    const Field F(3);
    const auto p = f_univariate(F, affine_oval(F, constant_g(F, F.one())));
    const auto back = io::poly_from_json(F, io::poly_json(F, p));
    EXPECT_EQ(back.terms, p.terms);
}

TEST(Golden, HyperovalPointSets) {
    for (const auto& c : survey()) {
        const Field F(c.m);
        const auto H = canonical(F, hyperoval_points(F, fix_zeros(F, g_catalog(F, c.spec)).first));
        ASSERT_TRUE(is_hyperoval(F, H)) << c.file;
        check_golden("points_" + c.file + ".json", io::points_json(F, H).dump(1) + "\n");
    }
}

TEST(Golden, StoredPointSetsAreHyperovals) {
    if (std::getenv("NIHO_UPDATE_GOLDEN")) GTEST_SKIP();
    for (const auto& c : survey()) {
        const auto j = io::json::parse(io::read_file(kGolden + "/points_" + c.file + ".json"));
        const Field F = io::field_from_json(j.at("field"));
        const auto H = io::points_from_json(F, j);
        EXPECT_TRUE(no_three_collinear_triples(F, H)) << c.file;
        EXPECT_EQ(H.size(), F.q() + 2u);
    }
}

TEST(Golden, PublishedGTables) {
    const Field F5(5), F6(6);
    for (const auto& l : repro::ref::table_q32(F5)) {
        std::string name = l.name.substr(0, l.name.find(' '));
        check_golden("g_q32_" + name + ".csv", io::g_csv(F5, l.g));
    }
    int j = 0;
    for (const auto& l : repro::ref::table_q64(F6))
        check_golden("g_q64_" + std::to_string(j++) + "_" + l.name.substr(0, l.name.find(' ')) + ".csv", io::g_csv(F6, l.g));
}

TEST(Golden, StoredGTablesValidate) {
    if (std::getenv("NIHO_UPDATE_GOLDEN")) GTEST_SKIP();
    for (const auto& e : std::filesystem::directory_iterator(kGolden)) {
        const std::string n = e.path().filename().string();
        if (n.rfind("g_q", 0) != 0) continue;
        const Field F(n.rfind("g_q32", 0) == 0 ? 5 : 6);
        const GFunction g = io::g_from_csv(F, io::read_file(e.path().string()));
        EXPECT_TRUE(validate_g(F, g).valid()) << n;
    }
}

TEST(Golden, ClassificationReports) {
    {
        const Field F(3);
        const auto cl = classify_bent(F, constant_g(F, F.one()));
        check_golden("classify_hyperconic_m3.json", io::classify_report(F, "hyperconic", cl, {"class_0.csv", "class_1.csv"}).dump(1) + "\n");
    }
    {
        const Field F(4);
        const auto cl = classify_bent(F, g_catalog(F, {GFamily::LunelliSce, 1}));
        check_golden("classify_lunelli-sce_m4.json", io::classify_report(F, "lunelli-sce", cl, {"class_0.csv"}).dump(1) + "\n");
    }
}

TEST(Golden, WalshSpectrum) {
    const Field F(2);
    const BooleanFn f = bent_from_g(F, constant_g(F, F.one()));
    check_golden("bent_hyperconic_m2.bits", io::truth_table_bits(f));
    check_golden("bent_hyperconic_m2.walsh", io::spectrum_le32(walsh_spectrum(F, f)));
}
