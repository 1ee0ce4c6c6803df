#include <stdexcept>

#include "doctest.h"
#include "specseq/serialization.hpp"

using namespace specseq;

TEST_CASE("serialize-parse-serialize is byte identical") {
    for (auto make : {+[] { return universal_example(2, 1, 1, 4); },
                      +[] { return universal_example(3, 1, 2, 5); },
                      +[] { return universal_example(kInfRank, 1, 1, 4); }}) {
        ComplexDoc doc{make(), std::nullopt, std::nullopt};
        std::string once = dump_complex(doc);
        ComplexDoc round = parse_complex(json::parse(once));
        round.cx.validate();
        CHECK(dump_complex(round) == once);
        // dimensions survive
        for (int p = 0; p <= doc.cx.cap; ++p)
            for (auto& [q, labels] : doc.cx.level[p].basis)
                CHECK(round.cx.level[p].dim(q) == (int)labels.size());
    }
}

TEST_CASE("extra payloads ride along canonically") {
    ComplexDoc doc{universal_example(2, 1, 1, 3), std::nullopt, std::nullopt};
    doc.involution = json::parse(R"([[2, 1, 0, 0], [1, 1, 0, 0]])");
    doc.structure_map = json::parse(R"({"wcap": 3, "blocks": [[1, 1, 0, 0]]})");
    std::string once = dump_complex(doc);
    ComplexDoc round = parse_complex(json::parse(once));
    REQUIRE(round.involution.has_value());
    REQUIRE(round.structure_map.has_value());
    CHECK(dump_complex(round) == once);
    // canonical form sorts array-of-array payloads
    ComplexDoc sorted = doc;
    sorted.involution = json::parse(R"([[1, 1, 0, 0], [2, 1, 0, 0]])");
    CHECK(dump_complex(sorted) == once);
}

TEST_CASE("malformed documents are rejected") {
    ComplexDoc doc{universal_example(2, 1, 1, 3), std::nullopt, std::nullopt};
    json good = to_json(doc);

    json bad = good;
    bad["kind"] = "simplicial";
    CHECK_THROWS(parse_complex(bad));

    bad = good;
    bad.erase("levels");
    CHECK_THROWS(parse_complex(bad));

    bad = good;
    // out-of-range row index in a differential triplet
    bad["levels"][1]["diff"].push_back(json::array({1, 999, 0}));
    CHECK_THROWS(parse_complex(bad));

    bad = good;
    // coface triplet pointing past the level cap
    bad["cofaces"].push_back(json::array({99, 0, 1, 0, 0}));
    CHECK_THROWS(parse_complex(bad));
}

TEST_CASE("file round trip") {
    ComplexDoc doc{universal_example(2, 0, 1, 3), std::nullopt, std::nullopt};
    std::string path = "serialization_roundtrip.json";
    save_complex_file(doc, path);
    ComplexDoc loaded = load_complex_file(path);
    CHECK(dump_complex(loaded) == dump_complex(doc));
    CHECK_THROWS(load_complex_file("no_such_file_anywhere.json"));
}
