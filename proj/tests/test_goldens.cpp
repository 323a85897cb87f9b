#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "kmv/io.hpp"

using namespace kmv;

TEST_CASE("manifest covers exactly the data files") {
    auto dir = data_dir();
    auto manifest = load_manifest(dir);
    CHECK_FALSE(manifest.empty());
    size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name == "MANIFEST") continue;
        ++files;
        INFO(name);
        REQUIRE(manifest.count(name) == 1);
        CHECK(manifest.at(name) == fnv1a64(read_file(entry.path())));
    }
    CHECK(files == manifest.size());
}

TEST_CASE("golden loader verifies the checksum") {
    auto dir = data_dir();
    GoldenFile g = load_golden(dir, "zhu_p0_sl4.txt");
    CHECK_FALSE(g.content.empty());
    CHECK_THROWS_AS(load_golden(dir, "no_such_file.txt"), DataError);
}

TEST_CASE("checksum reacts to any single-byte change") {
    std::string base = read_file(data_dir() / "zhu_p0_sl4.txt");
    std::uint64_t ref = fnv1a64(base);
    for (size_t pos : {size_t(0), base.size() / 2, base.size() - 1}) {
        std::string mutated = base;
        mutated[pos] = mutated[pos] == 'x' ? 'y' : 'x';
        CHECK(fnv1a64(mutated) != ref);
    }
    CHECK(fnv1a64("") == 14695981039346656037ull);
}

TEST_CASE("comment and blank stripping") {
    auto lines = data_lines("# header\n\na b # trailing\n  \nlast\n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "a b "); // comment stripped, padding left to the parsers
    CHECK(lines[1] == "last");
}
