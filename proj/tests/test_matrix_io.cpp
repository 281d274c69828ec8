#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "blockcs/compose.hpp"
#include "blockcs/devore.hpp"
#include "blockcs/matrix_io.hpp"
#include "blockcs/planner.hpp"
#include "blockcs/ternary.hpp"
#include "test_support.hpp"

using namespace bcs;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path = testsup::make_temp_dir("blockcs-io-");
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

io::MatrixFile devore_file(std::uint32_t p, std::uint32_t r) {
    const auto m = devore_matrix({p, r});
    return {m, io::make_metadata(io::Kind::devore, {{"p", p}, {"r", r}}, m)};
}

} // namespace

TEST_CASE("sidecar path replaces the extension") {
    CHECK(io::sidecar_path("a/b/matrix.mtx") == fs::path("a/b/matrix.meta.json"));
    CHECK(io::sidecar_path("matrix") == fs::path("matrix.meta.json"));
}

TEST_CASE("payload format") {
    const auto file = devore_file(2, 1);
    const std::string payload = io::payload_string(file);
    CHECK(payload.rfind("%%MatrixMarket matrix coordinate integer general\n4 4 8\n", 0) == 0);
    CHECK(payload.find("\r") == std::string::npos);
    CHECK(payload.back() == '\n');
}

TEST_CASE("write/read round trip for every construction kind") {
    TempDir tmp;

    const auto check_binary_roundtrip = [&](const io::MatrixFile& file, const char* name) {
        const fs::path p = tmp.path / name;
        io::write_matrix_file(p, file);
        const io::MatrixFile back = io::read_matrix_file(p);
        REQUIRE(back.meta == file.meta);
        REQUIRE(std::get<BlockBinaryMatrix>(back.matrix) ==
                std::get<BlockBinaryMatrix>(file.matrix));
        // rewrite must be byte-identical
        const fs::path p2 = tmp.path / (std::string("re-") + name);
        io::write_matrix_file(p2, back);
        CHECK(testsup::read_bytes(p2) == testsup::read_bytes(p));
        CHECK(testsup::read_bytes(io::sidecar_path(p2)) ==
              testsup::read_bytes(io::sidecar_path(p)));
    };

    check_binary_roundtrip(devore_file(3, 1), "devore.mtx");

    const auto composed = compose(devore_matrix({2, 1}), devore_matrix({3, 1}), {2});
    check_binary_roundtrip({composed, io::make_metadata(io::Kind::compose, {{"k", 2}}, composed,
                                                        {{"devore", "0123456789abcdef"}})},
                           "composed.mtx");

    const auto planned = execute_plan(plan_row_size(60));
    check_binary_roundtrip(
        {planned, io::make_metadata(io::Kind::plan, {{"m", 60}, {"k", 2}}, planned)},
        "planned.mtx");

    const auto check_ternary_roundtrip = [&](const io::MatrixFile& file, const char* name) {
        const fs::path p = tmp.path / name;
        io::write_matrix_file(p, file);
        const io::MatrixFile back = io::read_matrix_file(p);
        REQUIRE(back.meta == file.meta);
        REQUIRE(std::get<TernaryMatrix>(back.matrix) == std::get<TernaryMatrix>(file.matrix));
        const fs::path p2 = tmp.path / (std::string("re-") + name);
        io::write_matrix_file(p2, back);
        CHECK(testsup::read_bytes(p2) == testsup::read_bytes(p));
    };

    const auto flipped = sign_flip(composed);
    check_ternary_roundtrip({flipped, io::make_metadata(io::Kind::signflip, {}, flipped)},
                            "flipped.mtx");
    const auto expanded = hadamard_expand(devore_matrix({2, 1}), 0);
    check_ternary_roundtrip(
        {expanded, io::make_metadata(io::Kind::hadamard, {{"r_prime", 0}}, expanded)},
        "expanded.mtx");
}

TEST_CASE("digests are stable and input-sensitive") {
    const auto a = devore_file(2, 1);
    const auto b = devore_file(3, 1);
    CHECK(io::metadata_digest(a.meta) == io::metadata_digest(a.meta));
    CHECK(io::metadata_digest(a.meta) != io::metadata_digest(b.meta));
    CHECK(io::fnv1a64("").size() == 16);
    CHECK(io::fnv1a64("a") != io::fnv1a64("b"));
}

TEST_CASE("reader rejects a wrong banner") {
    TempDir tmp;
    const fs::path p = tmp.path / "m.mtx";
    io::write_matrix_file(p, devore_file(2, 1));
    {
        std::ofstream out(p, std::ios::trunc);
        out << "%%MatrixMarket matrix coordinate real general\n4 4 8\n";
    }
    CHECK_THROWS_AS((void)io::read_matrix_file(p), ParseError);
}

TEST_CASE("reader rejects values outside {-1, 1}") {
    TempDir tmp;
    const fs::path p = tmp.path / "m.mtx";
    io::write_matrix_file(p, devore_file(2, 1));
    std::string payload = testsup::read_bytes(p);
    payload.replace(payload.find("1 1 1"), 5, "1 1 2");
    {
        std::ofstream out(p, std::ios::trunc | std::ios::binary);
        out << payload;
    }
    CHECK_THROWS_AS((void)io::read_matrix_file(p), ParseError);
}

TEST_CASE("reader rejects a shape mismatch with the sidecar") {
    TempDir tmp;
    const fs::path p = tmp.path / "m.mtx";
    io::write_matrix_file(p, devore_file(2, 1));
    std::string meta = testsup::read_bytes(io::sidecar_path(p));
    const auto pos = meta.find("\"shape\"");
    REQUIRE(pos != std::string::npos);
    meta.replace(meta.find('4', pos), 1, "5");
    {
        std::ofstream out(io::sidecar_path(p), std::ios::trunc | std::ios::binary);
        out << meta;
    }
    CHECK_THROWS_AS((void)io::read_matrix_file(p), ParseError);
}

TEST_CASE("reader rejects a missing sidecar") {
    TempDir tmp;
    const fs::path p = tmp.path / "m.mtx";
    io::write_matrix_file(p, devore_file(2, 1));
    fs::remove(io::sidecar_path(p));
    CHECK_THROWS_AS((void)io::read_matrix_file(p), ParseError);
}

TEST_CASE("reader rejects a column that breaks the block structure") {
    TempDir tmp;
    const fs::path p = tmp.path / "m.mtx";
    io::write_matrix_file(p, devore_file(2, 1));
    std::string payload = testsup::read_bytes(p);
    // move the one at (3,1) to (2,1): two ones in block 1, none in block 2
    payload.replace(payload.find("3 1 1"), 5, "2 1 1");
    {
        std::ofstream out(p, std::ios::trunc | std::ios::binary);
        out << payload;
    }
    CHECK_THROWS_AS((void)io::read_matrix_file(p), ParseError);
}
