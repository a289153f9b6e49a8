#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "unrep/engine.hpp"

using namespace unrep;

namespace {

using Phis = std::vector<std::vector<index_t>>;

Phis phis(const std::vector<UnrepMap>& maps) {
  Phis out;
  for (const auto& m : maps) out.emplace_back(m.phi().begin(), m.phi().end());
  return out;
}

Phis phis(const std::vector<Unrepresentation>& us) {
  Phis out;
  for (const auto& u : us) out.emplace_back(u.map.phi().begin(), u.map.phi().end());
  return out;
}

std::vector<oracle::Map> raw_elements(const TransSemigroup& s) {
  std::vector<oracle::Map> out;
  for (const auto& t : s.elements()) out.emplace_back(t.images().begin(), t.images().end());
  return out;
}

EnumerateOptions with(Strategy st, unsigned jobs = 1) {
  EnumerateOptions o;
  o.strategy = st;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST_CASE("existence_precheck") {
  CHECK(existence_precheck(corpus::cyc4()));
  std::vector<Transformation> id3{Transformation::identity(3)};
  CHECK_FALSE(existence_precheck(closure(id3)));
  CHECK(existence_precheck(corpus::lz4()));
}

TEST_CASE("verify_action_hom") {
  CHECK(verify_action_hom(corpus::cyc4(), std::vector<index_t>{0, 1, 2, 3}));
  auto lz = corpus::lz4();
  std::vector<index_t> phi{0, 1, 2, 3};
  do {
    CHECK_FALSE(verify_action_hom(lz, phi));
  } while (std::next_permutation(phi.begin(), phi.end()));
  std::vector<Transformation> one{Transformation{0}};
  CHECK(verify_action_hom(closure(one), std::vector<index_t>{0}));
  // Not a bijection.
  CHECK_FALSE(verify_action_hom(corpus::cyc4(), std::vector<index_t>{0, 0, 2, 3}));
  CHECK_FALSE(verify_action_hom(corpus::cyc4(), std::vector<index_t>{0, 1, 2}));
}

TEST_CASE("UnrepMap validation") {
  auto c = corpus::cyc4();
  CHECK_THROWS_AS(UnrepMap(c, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(UnrepMap(c, {0, 1, 2, 4}), InputError);
  UnrepMap m(c, {1, 2, 3, 0});
  CHECK(m.inverse() == std::vector<point_t>{3, 0, 1, 2});
  CHECK(m.semigroup_fingerprint() == c.fingerprint());
}

TEST_CASE("induced_table examples") {
  auto c = corpus::cyc4();
  auto u = induced_table(c, UnrepMap(c, {0, 1, 2, 3}));
  CHECK(u.induced == validate_table(corpus::cyclic_group_table(4)));

  auto k = corpus::const3();
  auto lz = induced_table(k, UnrepMap(k, {0, 1, 2}));
  CHECK(lz.induced == validate_table(corpus::left_zero_table(3)));

  std::vector<Transformation> one{Transformation{0}};
  auto single = closure(one);
  CHECK(induced_table(single, UnrepMap(single, {0})).induced.order() == 1);

  CHECK_THROWS_AS(induced_table(c, UnrepMap(c, {0, 0, 2, 3})), InputError);
  auto other = corpus::cliff4();
  CHECK_THROWS_AS(induced_table(other, UnrepMap(c, {0, 1, 2, 3})), InputError);
}

TEST_CASE("enumerate_unreps on named instances") {
  CHECK(enumerate_unreps(corpus::lz4()).empty());
  CHECK(phis(enumerate_unreps(corpus::cyc4()))
        == Phis{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  CHECK(phis(enumerate_unreps(corpus::const3())) == Phis{{0, 1, 2}});
  CHECK(phis(enumerate_unreps(corpus::cliff4())) == Phis{{0, 1, 2, 3}, {1, 0, 3, 2}});
  CHECK(phis(enumerate_unreps(corpus::reg_s3()))
        == Phis{{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}, {2, 4, 0, 5, 1, 3},
                {3, 5, 1, 4, 0, 2}, {4, 2, 5, 0, 3, 1}, {5, 3, 4, 1, 2, 0}});
  CHECK(phis(enumerate_unreps(corpus::cliff6()))
        == Phis{{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4}});
  CHECK(enumerate_unreps(corpus::semilattice3()).empty());
  CHECK(enumerate_unreps(corpus::v4_with_zero()).empty());
}

TEST_CASE("brute force") {
  CHECK(enumerate_unreps_bruteforce(corpus::lz4()).empty());
  CHECK(phis(enumerate_unreps_bruteforce(corpus::cliff4()))
        == phis(enumerate_unreps(corpus::cliff4())));
  CHECK(enumerate_unreps_bruteforce(corpus::cyc4()).size() == 4);
  CHECK_THROWS_AS(enumerate_unreps_bruteforce(corpus::cyclic(5), 4), CapacityError);
}

TEST_CASE("monoid path") {
  CHECK(monoid_unreps(corpus::cyc4()).size() == 4);
  CHECK(phis(monoid_unreps(corpus::cliff4())) == Phis{{0, 1, 2, 3}, {1, 0, 3, 2}});
  CHECK(monoid_unreps(corpus::reg_s3()).size() == 6);
  CHECK_THROWS_AS(monoid_unreps(corpus::lz4()), InputError);
  CHECK(resolve_strategy(corpus::cliff4(), {}) == Strategy::monoid);
}

TEST_CASE("idempotent forcing path") {
  auto c = corpus::cliff4();
  CHECK(phis(idempotent_forced_unreps(c)) == phis(enumerate_unreps(c)));
  CHECK_THROWS_AS(idempotent_forced_unreps(corpus::lz4()), InputError);
  auto f = TransSemigroup::from_elements({{2, 3, 2, 3}, {3, 2, 3, 2}});
  CHECK(resolve_strategy(f, {}) == Strategy::backtrack);  // size mismatch
  for (const auto& m : enumerate_unrep_maps(c)) {
    auto r = idempotent_forcing_check(c, m);
    CHECK(r.consistent());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("cyclic_unrep") {
  Transformation p{1, 2, 3, 0};
  auto m = cyclic_unrep(p, 0);
  auto s = closure(std::vector<Transformation>{p});
  // phi by point: id, p, p^2, p^3.
  CHECK(s.element(m[0]) == Transformation::identity(4));
  CHECK(s.element(m[1]) == p);
  CHECK(s.element(m[2]) == compose(p, p));
  CHECK(s.element(m[3]) == compose(p, compose(p, p)));

  Transformation q{1, 0};
  auto m2 = cyclic_unrep(q, 1);
  auto s2 = closure(std::vector<Transformation>{q});
  CHECK(s2.element(m2[1]) == Transformation::identity(2));
  CHECK(s2.element(m2[0]) == q);

  auto m3 = cyclic_unrep(p, 2);
  CHECK(s.element(m3[2]) == Transformation::identity(4));
  CHECK(s.element(m3[3]) == p);
  CHECK(s.element(m3[0]) == compose(p, p));

  CHECK_THROWS_AS(cyclic_unrep(Transformation{1, 0, 3, 2}, 0), InputError);
  CHECK_THROWS_AS(cyclic_unrep(p, 4), InputError);
}

TEST_CASE("parallel enumeration keeps the output order") {
  for (const char* name : {"REG_S3", "CLIFF6", "REG_C6", "CYCLIC7", "LZ4"}) {
    for (const auto& inst : corpus::instances()) {
      if (inst.name != name) continue;
      auto one = enumerate_unrep_maps(inst.semigroup, with(Strategy::backtrack, 1));
      auto four = enumerate_unrep_maps(inst.semigroup, with(Strategy::backtrack, 4));
      CHECK(one == four);
    }
  }
}

TEST_CASE("property: every strategy agrees with the naive oracle") {
  for (const auto& inst : corpus::instances()) {
    const auto& s = inst.semigroup;
    if (s.degree() > 6) continue;
    INFO(inst.name);
    auto expected = oracle::unreps(raw_elements(s));
    auto got = phis(enumerate_unrep_maps(s));
    CHECK(got == expected);
    CHECK(phis(enumerate_unrep_maps(s, with(Strategy::backtrack))) == expected);
    CHECK(phis(enumerate_unreps_bruteforce(s)) == expected);
    auto c = classify(s);
    if (c.is_monoid) CHECK(phis(monoid_unreps(s)) == expected);
    if (c.is_inverse) CHECK(phis(idempotent_forced_unreps(s)) == expected);
  }
}

TEST_CASE("property: induced tables represent back") {
  for (const auto& inst : corpus::instances()) {
    const auto& s = inst.semigroup;
    for (const auto& u : enumerate_unreps(s)) {
      auto r = represent(u.induced);
      CHECK(r.semigroup == s);
      CHECK(std::equal(r.rep_map.begin(), r.rep_map.end(), u.map.phi().begin()));
      CHECK(oracle::associative(u.induced.rows()));
    }
  }
}

TEST_CASE("property: cyclic_unrep is always enumerated") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<point_t> im(n);
    for (std::size_t x = 0; x < n; ++x) im[x] = static_cast<point_t>((x + 1) % n);
    Transformation p(im);
    auto s = closure(std::vector<Transformation>{p});
    auto maps = enumerate_unrep_maps(s);
    CHECK(maps.size() == n);
    for (point_t z = 0; z < n; ++z) {
      auto m = cyclic_unrep(p, z);
      CHECK(verify_action_hom(s, m.phi()));
      CHECK(std::binary_search(maps.begin(), maps.end(), m));
    }
  }
}

TEST_CASE("property: left-zero law") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& band : corpus::left_zero_bands(n)) {
      auto us = enumerate_unreps(band);
      bool constants = band == corpus::constants(n);
      CHECK(us.empty() != constants);
      if (constants) {
        REQUIRE(us.size() == 1);
        CHECK(us.front().induced == validate_table(corpus::left_zero_table(n)));
      }
    }
  }
}
