#include "doctest.h"

#include "oracle/crosscheck.hpp"
#include "oracle/oracle.hpp"

#include <sstream>

namespace {

std::string describe(const crosscheck::Result& r) {
    std::ostringstream os;
    os << r.samples << " samples, " << r.nonzero << " nonzero, " << r.mismatches.size() << " mismatches";
    for (std::size_t k = 0; k < r.mismatches.size() && k < 5; ++k) {
        const auto& m = r.mismatches[k];
        os << "\n  " << m.system << " " << m.set << " " << m.identity << " (";
        for (std::size_t i = 0; i < m.tuple.size(); ++i) os << (i ? "," : "") << m.tuple[i];
        os << "): engine " << m.engine << " oracle " << m.oracle;
    }
    return os.str();
}

} // namespace

TEST_CASE("oracle arithmetic sanity") {
    using namespace oracle;
    auto m = malcev4({2, 3, 5});
    Vec r = m.p.at("bracket")(basis(4, 1), basis(4, 2));
    CHECK(r == Vec{0, 0, 0, 2});
    Mat a = alpha4({2, 3, 5});
    CHECK(a(basis(4, 0)) == Vec{1, 0, 0, 2});
    CHECK((a * Mat::identity(4)).a == a.a);
    auto oct = octonions();
    Vec sq = oct.p.at("star")(basis(8, 3), basis(8, 3));
    CHECK(sq == Vec{-1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("engine residuals agree with the oracle on 100 random pairs") {
    auto r = crosscheck::random_pairs(100, 20261019u);
    INFO(describe(r));
    CHECK(r.samples == 100);
    CHECK(r.mismatches.empty());
    CHECK(r.nonzero >= 10);
}

TEST_CASE("other seeds") {
    for (unsigned seed : {1u, 2u, 3u}) {
        auto r = crosscheck::random_pairs(100, seed);
        INFO(describe(r));
        CHECK(r.mismatches.empty());
    }
}

TEST_CASE("engine residuals agree with the oracle on every tuple") {
    for (const auto& name : crosscheck::system_names()) {
        auto r = crosscheck::exhaustive(name);
        INFO(name << ": " << describe(r));
        CHECK(r.samples > 0);
        CHECK(r.mismatches.empty());
    }
}
