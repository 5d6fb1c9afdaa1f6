// Copyright 2026 The pdftables Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pdftables/error.hpp"
#include "pdftables/geometry.hpp"
#include "pdftables/model.hpp"

namespace pdftables {
namespace {

TEST(PageRectTest, Measures) {
  PageRect r{10, 20, 40, 100};
  EXPECT_DOUBLE_EQ(r.width(), 80);
  EXPECT_DOUBLE_EQ(r.height(), 30);
  EXPECT_DOUBLE_EQ(r.mid_x(), 60);
  EXPECT_DOUBLE_EQ(r.mid_y(), 25);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.contains(20, 10));
  EXPECT_TRUE(r.contains(100, 40));
  EXPECT_FALSE(r.contains(100.01, 40));
}

TEST(PageRectTest, Validity) {
  EXPECT_FALSE((PageRect{10, 0, 5, 10}).valid());
  EXPECT_FALSE((PageRect{0, 10, 5, 0}).valid());
  EXPECT_FALSE((PageRect{-1, 0, 5, 10}).valid());
  EXPECT_FALSE((PageRect{0, 0, std::nan(""), 10}).valid());
  EXPECT_TRUE((PageRect{0, 0, 0, 0}).valid());
}

TEST(PageRectTest, IntersectAndUnion) {
  PageRect a{0, 0, 10, 10}, b{5, 5, 20, 20}, c{11, 11, 12, 12};
  EXPECT_TRUE(rect_intersects(a, b));
  EXPECT_FALSE(rect_intersects(a, c));
  EXPECT_EQ(rect_union(a, c), (PageRect{0, 0, 12, 12}));
}

TEST(PageRectTest, UnionContainsBothProperty) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0, 500);
  for (int i = 0; i < 200; ++i) {
    double t1 = u(rng), l1 = u(rng), t2 = u(rng), l2 = u(rng);
    PageRect a{t1, l1, t1 + u(rng), l1 + u(rng)}, b{t2, l2, t2 + u(rng), l2 + u(rng)};
    PageRect m = rect_union(a, b);
    EXPECT_EQ(m, rect_union(b, a));
    EXPECT_TRUE(m.contains(a.left, a.top) && m.contains(a.right, a.bottom));
    EXPECT_TRUE(m.contains(b.left, b.top) && m.contains(b.right, b.bottom));
    EXPECT_EQ(rect_intersects(a, b), rect_intersects(b, a));
  }
}

TEST(MethodTest, NamesRoundTrip) {
  for (Method m : {Method::kLattice, Method::kStream, Method::kDecide}) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_THROW(parse_method("auto"), InvalidArgument);
}

TEST(GeometryTest, VerticalOverlap) {
  EXPECT_DOUBLE_EQ(vertical_overlap_ratio(PageRect{0, 0, 10, 1}, PageRect{5, 0, 15, 1}), 0.5);
  EXPECT_DOUBLE_EQ(vertical_overlap_ratio(PageRect{0, 0, 10, 1}, PageRect{10, 0, 15, 1}), 0);
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2);
  EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
}

TEST(ExtractionOptionsTest, Validate) {
  ExtractionOptions o;
  EXPECT_NO_THROW(o.validate());

  o.pages = std::vector<int>{0};
  EXPECT_THROW(o.validate(), PageRangeError);

  o = {};
  o.area = std::vector<PageRect>{{0, 0, 10, 10}};
  EXPECT_THROW(o.validate(), InvalidArgument) << "area needs guess off";
  o.guess = false;
  EXPECT_NO_THROW(o.validate());
  o.pages = std::vector<int>{1, 2};
  EXPECT_THROW(o.validate(), InvalidArgument) << "area and pages must pair up";
  o.area->push_back({0, 0, 5, 5});
  EXPECT_NO_THROW(o.validate());
  o.area->back() = {5, 5, 0, 0};
  EXPECT_THROW(o.validate(), InvalidArgument);

  o = {};
  o.columns = std::vector<double>{100, 200};
  EXPECT_THROW(o.validate(), InvalidArgument) << "columns need the stream method";
  o.method = Method::kStream;
  EXPECT_NO_THROW(o.validate());
  o.columns = std::vector<double>{200, 100};
  EXPECT_THROW(o.validate(), InvalidArgument);
}

}  // namespace
}  // namespace pdftables
