#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "linfty/cli.hpp"

using namespace linf;
namespace fs = std::filesystem;

TEST_CASE("corpus documents round-trip byte for byte") {
    const auto files = corpus::documents();
    REQUIRE(files.size() >= 12);
    for (const fs::path& p : files) {
        CAPTURE(p.filename().string());
        const std::string text = corpus::read(p);
        const cli::Document doc = cli::load_document(p);
        CHECK(cli::serialize(doc) == text);
        const cli::Document again = cli::parse_document(cli::serialize(doc), p.parent_path());
        CHECK(cli::serialize(again) == text);
    }
}

TEST_CASE("non-canonical input is normalized") {
    const std::string text = R"j({"maps": {"2": {"(y,x)": "z"}}, "kind": "algebra", "basis": {"x": 1, "y": 1, "z": 2}, "cap": 4})j";
    const cli::Document doc = cli::parse_document(text, corpus::dir());
    CHECK(cli::serialize(doc) == corpus::read(corpus::dir() / "heisenberg.alg"));
}

TEST_CASE("malformed documents are rejected") {
    const auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(cli::parse_document(text, corpus::dir()), InputError);
    };
    bad("not json");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"x": 1}, "maps": {}, "extra": 1})j");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"x": 1}})j");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"x": 1}, "maps": {"3": {}}})j");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"x y": 1}, "maps": {}})j");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"w": 0}, "maps": {"2": {"(w,w)": "1*w"}}})j");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"x": 1, "y": 1}, "maps": {"2": {"(x,y)": "0.5*y"}}})j");
    bad(R"j({"kind": "algebra", "cap": 2, "basis": {"x": 1, "y": 1, "z": 2}, "maps": {"2": {"(x,y)": "z", "(y,x)": "z"}}})j");
    bad(R"j({"kind": "algebra", "cap": "2", "basis": {"x": 1}, "maps": {}})j");
    bad(R"j({"kind": "group"})j");
    bad(R"j({"kind": "mc-element", "cap": 4, "algebra": "heisenberg.alg", "element": "1*z"})j");
    bad(R"j({"kind": "morphism", "cap": 4, "source": "heisenberg.mc", "target": "heisenberg.alg", "components": {}})j");
}

TEST_CASE("cap override reaches referenced documents") {
    const cli::Document doc = cli::load_document(corpus::dir() / "id_heisenberg.mor", 2);
    const auto& m = std::get<cli::MorphismDoc>(doc).morphism;
    CHECK(m.cap() == 2);
    CHECK(m.source().cap() == 2);
    CHECK(m.target().map(2).values().size() == 1);
}

TEST_CASE("command examples") {
    const fs::path d = corpus::dir();
    auto r = corpus::invoke({"check-linfty", (d / "abelian.alg").string()});
    CHECK(r.code == 0);
    CHECK(r.out == "relations hold up to weight cap 4\n");

    r = corpus::invoke({"mc-check", (d / "heisenberg.alg").string(), "--pi", "1*x + 1*y"});
    CHECK(r.code == 1);
    CHECK(r.out.find("weight 2: 1*z") != std::string::npos);
    CHECK(r.out.find("weight cap 4") != std::string::npos);

    r = corpus::invoke({"--cap", "2", "check-linfty", (d / "heisenberg.alg").string()});
    CHECK(r.code == 0);
    CHECK(r.out == "relations hold up to weight cap 2\n");

    r = corpus::invoke({"gauge-flow", (d / "gauge_x.mc").string(), "--xi", "w"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi_t = t^0: 1*x; t^1: -1*y") != std::string::npos);

    r = corpus::invoke({"gauge-flow", (d / "non_nilpotent.alg").string(), "--pi", "v", "--xi", "w"});
    CHECK(r.code == 1);
    CHECK(r.out.find("non-termination") != std::string::npos);

    r = corpus::invoke({"check-linfty", (d / "invalid" / "unknown_field.alg").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown field 'colour'") != std::string::npos);
    CHECK(corpus::invoke({"check-linfty"}).code == 2);
    CHECK(corpus::invoke({"mc-check", (d / "heisenberg.alg").string()}).code == 2);
    CHECK(corpus::invoke({"--format", "yaml", "check-linfty", (d / "abelian.alg").string()}).code == 2);
}

TEST_CASE("lemma1 writes documents that check") {
    const fs::path d = corpus::dir();
    const fs::path tmp = fs::temp_directory_path() / "linfty_cli_test";
    fs::create_directories(tmp);
    const fs::path out = tmp / "perturbed.mor";
    const fs::path hom = tmp / "perturbed.hom";
    auto r = corpus::invoke({"lemma1", (d / "id_two_term.mor").string(), "--n", "2", "--H", (d / "h_bb.map").string(),
                             "--out", out.string(), "--homotopy-out", hom.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("F~_2(a,b) = -1*a") != std::string::npos);
    CHECK(corpus::invoke({"check-morphism", out.string()}).code == 0);
    CHECK(corpus::invoke({"homotopy-check", hom.string()}).code == 0);
    CHECK(corpus::invoke({"quasi-iso", out.string()}).code == 0);
    const auto golden = std::get<cli::MorphismDoc>(cli::load_document(d / "perturbed_two_term.mor")).morphism;
    CHECK(std::get<cli::MorphismDoc>(cli::load_document(out)).morphism == golden);
    fs::remove_all(tmp);
}

TEST_CASE("json reports are deterministic") {
    const fs::path d = corpus::dir();
    for (const char* cmd : {"check-linfty", "cohomology"}) {
        const auto a = corpus::invoke({"--format", "json", cmd, (d / "heisenberg.alg").string()});
        const auto b = corpus::invoke({"--format", "json", cmd, (d / "heisenberg.alg").string()});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("\"cap\": 4") != std::string::npos);
    }
}
