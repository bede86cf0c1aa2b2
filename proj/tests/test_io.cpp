#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"
#include "gusvd/io.hpp"
#include "support.hpp"

using namespace gusvd;
using gusvd::testing::mat;
using gusvd::testing::part;

TEST_CASE("canonical strings") {
  const auto f4 = make_field(2, 1);
  CHECK(canonical_invariant_string(orbit_invariant(Matrix(f4, 2, 2))) == "m=2;n=2;inv=[];R=[];Rp=[1,1];J=[]");
  CHECK(canonical_invariant_string(orbit_invariant(Matrix::identity(f4, 2))) ==
        "m=2;n=2;inv=[[1,1],[1,1]];R=[];Rp=[];J=[]");
  CHECK(canonical_invariant_string(orbit_invariant(mat(f4, 1, 2, {1, 2}))) == "m=1;n=2;inv=[];R=[1];Rp=[];J=[]");
}

TEST_CASE("matrix documents round-trip") {
  std::mt19937_64 rng(3);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 10; ++i) {
      const Matrix a = random_matrix(f, 1 + i % 3, i % 4, rng);
      const Json doc = matrix_to_json(a);
      CHECK(matrix_from_json(doc) == a);
      CHECK(matrix_from_json(Json::parse(doc.dump())) == a);
    }
  }
}

TEST_CASE("invariant documents round-trip") {
  std::mt19937_64 rng(4);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 10; ++i) {
      const auto inv = orbit_invariant(random_matrix(f, 1 + i % 4, 1 + (i * 7) % 4, rng));
      const Json doc = invariant_to_json(inv, *f);
      auto [back, field] = invariant_from_json(Json::parse(doc.dump()));
      CHECK(back == inv);
      CHECK(*field == *f);
      CHECK(invariant_to_json(back, *field).dump() == doc.dump());
    }
  }
}

TEST_CASE("realize, invariant and string are stable across runs") {
  const auto f9 = make_field(3, 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto inv = orbit_invariant(random_matrix(f9, 3, 3, rng));
    const std::string s1 = canonical_invariant_string(orbit_invariant(realize(inv, f9)));
    const std::string s2 = canonical_invariant_string(orbit_invariant(realize(inv, f9)));
    CHECK(s1 == s2);
    CHECK(s1 == canonical_invariant_string(inv));
    CHECK(matrix_to_json(realize(inv, f9)).dump() == matrix_to_json(realize(inv, f9)).dump());
  }
}

TEST_CASE("malformed documents name the field") {
  auto message = [](const Json& doc) {
    try {
      matrix_from_json(doc);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(Json::parse(R"({"p":2,"e":1,"m":1,"n":1})")).find("entries") != std::string::npos);
  CHECK(message(Json::parse(R"({"p":2,"e":1,"m":1,"n":2,"entries":[1]})")).find("entries") != std::string::npos);
  CHECK(message(Json::parse(R"({"p":2,"e":1,"m":1,"n":1,"entries":[4]})")).find("entries") != std::string::npos);
  CHECK(message(Json::parse(R"({"e":1,"m":1,"n":1,"entries":[0]})")).find("'p'") != std::string::npos);
  CHECK(message(Json::parse(R"({"p":4,"e":1,"m":1,"n":1,"entries":[0]})")) != "");
  CHECK(message(Json::parse(R"({"schema":"x","p":2,"e":1,"m":1,"n":1,"entries":[0]})")).find("schema") !=
        std::string::npos);
  CHECK_THROWS_AS(invariant_from_json(Json::parse(R"({"p":2,"e":1,"m":2,"n":2,"inv":[],"R":[],"Rp":[1],"J":[]})")),
                  ValidationError);
  CHECK_THROWS_AS(invariant_from_json(Json::parse(R"({"p":2,"e":1,"m":1,"n":1,"inv":[[1,0]],"R":[],"Rp":[],"J":[]})")),
                  ValidationError);
}

TEST_CASE("partition arguments") {
  CHECK(parse_partition("3,2,2", "--alpha") == part({3, 2, 2}));
  CHECK(parse_partition("", "--alpha").empty());
  CHECK(parse_partition("0", "--alpha").empty());
  CHECK_THROWS_AS(parse_partition("1,2", "--alpha"), ValidationError);
  CHECK_THROWS_AS(parse_partition("a", "--beta"), ValidationError);
  CHECK_THROWS_AS(parse_partition("2,,1", "--beta"), ValidationError);
}
