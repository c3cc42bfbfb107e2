#include <gtest/gtest.h>

#include "generators.hpp"
#include "striptopo/document.hpp"
#include "striptopo/error.hpp"
#include "striptopo/rational.hpp"
#include "striptopo/strip.hpp"

using namespace striptopo;
using striptopo::testkit::fixture;
using striptopo::testkit::single_strip;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Rational, NormalizesAndOrders) {
  EXPECT_EQ(ExtRational(2, 4), ExtRational(1, 2));
  EXPECT_EQ(ExtRational(3, -6), ExtRational(-1, 2));
  EXPECT_LT(ExtRational::neg_inf(), ExtRational(-1000000));
  EXPECT_LT(ExtRational(1000000), ExtRational::pos_inf());
  EXPECT_LT(ExtRational(1, 3), ExtRational(1, 2));
  EXPECT_EQ(-ExtRational::neg_inf(), ExtRational::pos_inf());
}

TEST(Rational, ParsesTextForms) {
  EXPECT_EQ(ExtRational::parse("7"), ExtRational(7));
  EXPECT_EQ(ExtRational::parse("-3/9"), ExtRational(-1, 3));
  EXPECT_EQ(ExtRational::parse("-2.75"), ExtRational(-11, 4));
  EXPECT_EQ(ExtRational::parse("+inf"), ExtRational::pos_inf());
  EXPECT_EQ(ExtRational::parse("-inf"), ExtRational::neg_inf());
  EXPECT_EQ(ExtRational(5, 10).to_string(), "1/2");
  EXPECT_EQ(ExtRational(-4).to_string(), "-4");
  EXPECT_THROW(ExtRational::parse("abc"), Error);
  EXPECT_THROW(ExtRational(1, 0), Error);
}

TEST(BuildSurface, Kaplan5IsValid) {
  const StripedSurface s = load_surface(fixture("kaplan5"));
  EXPECT_EQ(s.strip_count(), 5u);
  EXPECT_EQ(s.gluings().size(), 4u);
  EXPECT_EQ(s.interval_count(), 8u);
  const ValidationReport r = validate_class_f(s);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.glued_leaves.size(), 4u);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(BuildSurface, EmptyStripIsValid) {
  const StripedSurface s = build_surface({ModelStripSpec::make("A", {}, {})}, {});
  EXPECT_EQ(s.strip_count(), 1u);
  EXPECT_TRUE(validate_class_f(s).ok);
}

TEST(BuildSurface, SameSideGluingRejected) {
  try {
    single_strip(0, 2, {{"A.u0", "A.u1"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameSideGluing);
    EXPECT_EQ(e.rule(), "SameSideGluing");
    EXPECT_EQ(e.ids(), (std::vector<std::string>{"A.u0", "A.u1"}));
  }
}

TEST(BuildSurface, ReportsEachRule) {
  auto strip = [](std::string id, std::vector<std::string> lo, std::vector<std::string> up) {
    return ModelStripSpec::make(std::move(id), lo, up);
  };
  EXPECT_EQ(code_of([&] { build_surface({strip("A", {}, {}), strip("A", {}, {})}, {}); }), ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([&] { build_surface({strip("A", {"x"}, {"x"})}, {}); }), ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([&] { build_surface({strip("A", {"x"}, {})}, {{"", "x", "y", Orientation::Preserving}}); }),
            ErrorCode::UnknownIntervalRef);
  EXPECT_EQ(code_of([&] {
              build_surface({strip("A", {"x"}, {"y", "z"})},
                            {{"", "x", "y", Orientation::Preserving}, {"", "x", "z", Orientation::Preserving}});
            }),
            ErrorCode::DoubleGluing);
  EXPECT_EQ(code_of([&] { build_surface({strip("A", {"x"}, {})}, {{"", "x", "x", Orientation::Preserving}}); }),
            ErrorCode::SelfGluing);

  ModelStripSpec bad = strip("A", {"x", "y"}, {});
  bad.lower[0].endpoints = Endpoints{ExtRational(2), ExtRational(1)};
  bad.lower[1].endpoints = Endpoints{ExtRational(3), ExtRational(4)};
  EXPECT_EQ(code_of([&] { build_surface({bad}, {}); }), ErrorCode::BadEndpoints);

  ModelStripSpec mixed = strip("A", {"x", "y"}, {});
  mixed.lower[0].endpoints = Endpoints{ExtRational(0), ExtRational(1)};
  EXPECT_EQ(code_of([&] { build_surface({mixed}, {}); }), ErrorCode::BadEndpoints);

  ModelStripSpec overlap = strip("A", {"x", "y"}, {});
  overlap.lower[0].endpoints = Endpoints{ExtRational(0), ExtRational(2)};
  overlap.lower[1].endpoints = Endpoints{ExtRational(1), ExtRational(3)};
  EXPECT_EQ(code_of([&] { build_surface({overlap}, {}); }), ErrorCode::BadEndpoints);

  ModelStripSpec misindexed = strip("A", {"x"}, {});
  misindexed.lower[0].index = 3;
  EXPECT_EQ(code_of([&] { build_surface({misindexed}, {}); }), ErrorCode::BadIntervalIndex);
}

TEST(BuildSurface, DefaultGluingId) {
  const StripedSurface s = single_strip(1, 1, {{"A.l0", "A.u0"}});
  EXPECT_EQ(s.gluings()[0].id, "A.l0~A.u0");
}

TEST(BuildSurface, LookupsAndPartners) {
  const StripedSurface s = load_surface(fixture("kaplan5"));
  const IntervalRef b1 = s.locate("B.u1");
  EXPECT_EQ(b1.strip, 1u);
  EXPECT_EQ(b1.side, Side::Upper);
  EXPECT_EQ(b1.index, 1u);
  EXPECT_EQ(s.interval(*s.partner(b1)).id, "C.u0");
  EXPECT_EQ(s.gluings()[*s.gluing_of("B.u1")].id, "beta");
  EXPECT_EQ(s.resolved_endpoints(b1), (std::pair<double, double>{2.0, 3.0}));
  EXPECT_THROW(s.locate("nope"), Error);
}

TEST(ValidateClassF, CylinderCandidate) {
  const ValidationReport r = validate_class_f(testkit::standard_band(Orientation::Preserving));
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_EQ(r.notes[0], "CylinderCandidate:S");
}

TEST(ValidateClassF, DisjointStripsWarn) {
  const StripedSurface s = build_surface({ModelStripSpec::make("A", {}, {}), ModelStripSpec::make("B", {}, {})}, {});
  const ValidationReport r = validate_class_f(s);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.warnings, std::vector<std::string>{"Disconnected"});
}

TEST(Components, ConnectedSurfaceIsItself) {
  const StripedSurface s = load_surface(fixture("kaplan5"));
  const auto parts = components(s);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], s);
}

TEST(Components, DisjointStripsSplit) {
  const StripedSurface s = build_surface({ModelStripSpec::make("A", {}, {}), ModelStripSpec::make("B", {}, {})}, {});
  const auto parts = components(s);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].strip(0).id, "A");
  EXPECT_EQ(parts[1].strip(0).id, "B");
}

TEST(Components, RemovingBetaSplitsKaplan5) {
  const StripedSurface k = load_surface(fixture("kaplan5"));
  std::vector<GluingSpec> gs;
  for (const auto& g : k.gluings()) {
    if (g.id != "beta") gs.push_back(g);
  }
  const auto parts = components(build_surface(k.strips(), gs));
  ASSERT_EQ(parts.size(), 2u);
  std::vector<std::string> first, second;
  for (const auto& st : parts[0].strips()) first.push_back(st.id);
  for (const auto& st : parts[1].strips()) second.push_back(st.id);
  EXPECT_EQ(first, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(second, (std::vector<std::string>{"C", "D", "E"}));
}

TEST(Components, AgreesWithUnionFindOnRandomSurfaces) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const StripedSurface s = testkit::random_surface(rng, {});
    std::vector<std::size_t> parent(s.strip_count());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& g : s.gluings()) parent[find(s.locate(g.first).strip)] = find(s.locate(g.second).strip);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    EXPECT_EQ(components(s).size(), roots.size());
    EXPECT_EQ(is_connected(s), roots.size() == 1);
  }
}
