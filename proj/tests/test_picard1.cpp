#include <doctest.h>

#include <algorithm>

#include "horo/errors.hpp"
#include "horo/fans.hpp"
#include "horo/picard1.hpp"
#include "testutil.hpp"

using namespace horo;
using namespace horotest;

namespace {

bool has_triple(const std::vector<Picard1Triple>& ts, char fam, int rank, std::size_t y,
                std::size_t z) {
  return std::any_of(ts.begin(), ts.end(), [&](const Picard1Triple& t) {
    return t.dynkin.family == fam && t.dynkin.rank == rank && t.y_node == y && t.z_node == z;
  });
}

std::vector<std::string> admitted(const Picard1Triple& t) {
  std::vector<std::string> out;
  for (const auto& r : classify_triple(t)) out.push_back(r.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("triples per rank") {
  auto t2 = triples(2);
  CHECK(t2.size() == 2);
  CHECK(has_triple(t2, 'C', 2, 1, 0));
  CHECK(has_triple(t2, 'G', 2, 0, 1));

  auto t3 = triples(3);
  CHECK(has_triple(t3, 'B', 3, 1, 2));
  CHECK(has_triple(t3, 'B', 3, 0, 2));
  CHECK(has_triple(t3, 'C', 3, 1, 0));
  CHECK(has_triple(t3, 'C', 3, 2, 1));
  CHECK(t3.size() == 6);

  auto t4 = triples(4);
  CHECK(has_triple(t4, 'F', 4, 1, 2));

  CHECK_THROWS_AS(triples(1), InvalidType);
}

TEST_CASE("datum of a triple") {
  Picard1Triple c2{make_type('C', 2), 1, 0};
  auto d = datum_of_triple(c2);
  CHECK(d.I.empty());
  CHECK(d.M.basis == mat({{-1, 1}}));  // lambda_2 - lambda_1

  Picard1Triple b3{make_type('B', 3), 0, 2};
  auto d2 = datum_of_triple(b3);
  CHECK(d2.I == std::set<std::size_t>{1});
  CHECK(d2.M.basis == mat({{1, 0, -1}}));

  for (const auto& t : triples(8)) CHECK_NOTHROW(validate_datum(datum_of_triple(t)));
}

TEST_CASE("classification of the five families") {
  // family 2: (B3, w1, w3)
  CHECK(admitted({make_type('B', 3), 0, 2}) ==
        std::vector<std::string>{"Spin(4,3)", "Spin(7)"});

  // family 3: only the split symplectic group
  for (int n = 2; n <= 8; ++n)
    for (int m = 2; m <= n; ++m) {
      Picard1Triple t{make_type('C', n), static_cast<std::size_t>(m - 1),
                      static_cast<std::size_t>(m - 2)};
      CHECK(admitted(t) == std::vector<std::string>{"Sp(" + std::to_string(2 * n) + ",R)"});
    }

  // family 4 and 5: every real form
  CHECK(admitted({make_type('F', 4), 1, 2}) ==
        std::vector<std::string>{"F4(-20)", "F4(-52)", "F4(4)"});
  CHECK(admitted({make_type('G', 2), 0, 1}) == std::vector<std::string>{"G2(-14)", "G2(2)"});

  // family 1: Spin(n+4t, n+1-4t)
  for (int n = 3; n <= 8; ++n) {
    Picard1Triple t{make_type('B', n), static_cast<std::size_t>(n - 2),
                    static_cast<std::size_t>(n - 1)};
    std::vector<std::string> expect;
    for (int tt = -n; tt <= n; ++tt) {
      int p = n + 4 * tt, q = n + 1 - 4 * tt;
      if (p < 0 || q < 0) continue;
      if (p < q) std::swap(p, q);
      expect.push_back(q == 0 ? "Spin(" + std::to_string(p) + ")"
                              : "Spin(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(admitted(t) == expect);
  }

  // uniqueness: every admitted form has exactly one class
  for (const auto& t : triples(8))
    for (const auto& r : classify_triple(t)) CHECK(r.num_classes == 1);
}

TEST_CASE("triple varieties: trivial Gamma-action on N, extension automatic") {
  for (const auto& t : triples(8)) {
    auto d = datum_of_triple(t);
    for (const auto& rec : catalog(t.dynkin)) {
      auto s = make_structure(d.group, {0}, {{0, rec.label}});
      CHECK(is_identity(gamma_on_N(s, d)));
    }
  }
}
