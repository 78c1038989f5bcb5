#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

// Access discipline: adversary code operates on public states only. The
// attack implementation must never name the sealed-string type or Alice's
// private accessors.

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("attack code never touches Alice's private records") {
    for (const char* rel : {"/src/adversary.cpp", "/include/qseal/adversary.hpp"}) {
        const std::string source = slurp(std::string(QSEAL_SOURCE_DIR) + rel);
        CHECK(source.find("SealedString") == std::string::npos);
        CHECK(source.find("alice_bits") == std::string::npos);
        CHECK(source.find("alice_thetas") == std::string::npos);
        CHECK(source.find("protocol.hpp") == std::string::npos);
    }
}
