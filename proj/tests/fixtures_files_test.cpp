// Copyright 2026 The qres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The shipped data files and the embedded copies must never drift apart.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qres/errors.hpp"
#include "qres/fixtures.hpp"
#include "test_support.hpp"

using namespace qres;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(in), "missing data file ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string data_dir() {
    const char* dir = std::getenv("QRES_DATA_DIR");
    REQUIRE_MESSAGE(dir != nullptr, "QRES_DATA_DIR not set");
    return dir;
}

}  // namespace

TEST_CASE("data/appendix.json is byte-identical to the embedded fixture") {
    const std::string file = slurp(data_dir() + "/appendix.json");
    CHECK(file == std::string(appendix_fixture_text()));
    const AppendixFixture fx = load_appendix_file(data_dir() + "/appendix.json");
    CHECK(fx.h_res(0, 0) == cdouble{89.55105672, 29.96865528});
}

TEST_CASE("data/tables.json is byte-identical to the embedded fixture") {
    CHECK(slurp(data_dir() + "/tables.json") == std::string(tables_fixture_text()));
}

TEST_CASE("a corrupted fixture file is refused") {
    const std::string tmp = "corrupted_appendix.json";
    {
        std::string text(appendix_fixture_text());
        text[text.find("89.55105672")] = '7';  // flip one digit
        std::ofstream out(tmp, std::ios::binary);
        out << text;
    }
    CHECK_THROWS_AS(load_appendix_file(tmp), numeric_error);
    std::remove(tmp.c_str());
    CHECK_THROWS_AS(load_appendix_file("does-not-exist.json"), validation_error);
}
