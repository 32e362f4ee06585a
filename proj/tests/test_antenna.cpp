// SPDX-License-Identifier: Apache-2.0
//
// beamopt - received-power-optimal antenna beamwidths for clustered mmWave links
// Copyright (C) 2026 the beamopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beamopt/antenna.hpp"
#include "beamopt/errors.hpp"

#include <cmath>

using namespace beamopt;
using antenna::BeamSpec;
using antenna::Shape;
using antenna::ULAGeometry;

namespace {
// sin(53 deg), pinned from extended-precision evaluation.
constexpr double sin53 = 0.7986355100472928;
} // namespace

TEST_CASE("beamwidth_from_elements reproduces hand-computed widths")
{
    // Broadside: 101.5 / 16.
    CHECK(std::abs(antenna::beamwidth_from_elements(ULAGeometry(16), 90.0) - 6.34375) <= 1e-12);
    // Scanned: 101.5 / (23 * sin(53 deg)).
    CHECK(std::abs(antenna::beamwidth_from_elements(ULAGeometry(23), 53.0) -
                   101.5 / (23.0 * sin53)) <= 1e-12);
    CHECK(antenna::beamwidth_from_elements(ULAGeometry(23), 53.0) ==
          doctest::Approx(5.5257291).epsilon(1e-7));
    // Endfire: 152.53 / sqrt(16).
    CHECK(std::abs(antenna::beamwidth_from_elements(ULAGeometry(16), 0.0) - 38.1325) <= 1e-12);
    CHECK(std::abs(antenna::beamwidth_from_elements(ULAGeometry(16), 180.0) - 38.1325) <= 1e-12);
    // Scan angles symmetric about broadside give the same width.
    CHECK(antenna::beamwidth_from_elements(ULAGeometry(8), 60.0) ==
          doctest::Approx(antenna::beamwidth_from_elements(ULAGeometry(8), 120.0))
              .epsilon(1e-15));
}

TEST_CASE("gain equals the element count and inverts the beamwidth laws")
{
    CHECK(antenna::gain_from_elements(ULAGeometry(2)) == 2.0);
    CHECK(antenna::gain_from_elements(ULAGeometry(16)) == 16.0);

    // A 101.5 degree beam at broadside is the single-element-law width of n = 1.
    CHECK(std::abs(antenna::gain_from_beamwidth(101.5, 90.0) - 1.0) <= 1e-12);
    CHECK(std::abs(antenna::gain_from_beamwidth(6.34375, 90.0) - 16.0) <= 1e-12);
    // Endfire gain follows the squared law: (152.53 / bw)^2.
    CHECK(std::abs(antenna::gain_from_beamwidth(38.1325, 0.0) - 16.0) <= 1e-12);
    // Narrower beams always mean more gain.
    CHECK(antenna::gain_from_beamwidth(2.0, 53.0) > antenna::gain_from_beamwidth(4.0, 53.0));
}

TEST_CASE("elements_from_beamwidth rounds up and clamps at the 2-element floor")
{
    CHECK(antenna::elements_from_beamwidth(5.6, 53.0) == 23);
    CHECK(antenna::elements_from_beamwidth(32.3, 53.0) == 4);
    // Wider than any 2-element beam: clamps instead of returning 1 or 0.
    CHECK(antenna::elements_from_beamwidth(101.5, 90.0) == 2);
    CHECK(antenna::elements_from_beamwidth(1000.0, 90.0) == 2);
    // Just past an exact integer width still needs the next element.
    const double bw10 = antenna::beamwidth_from_elements(ULAGeometry(10), 90.0);
    CHECK(antenna::elements_from_beamwidth(bw10 * 0.999, 90.0) == 11);
}

TEST_CASE("element count and gain round-trip through the beamwidth")
{
    const double scans[] = {10.0, 30.0, 53.0, 90.0, 120.0, 170.0, 0.0, 180.0};
    for (int n = 2; n <= 512; ++n) {
        for (const double scan : scans) {
            const double bw = antenna::beamwidth_from_elements(ULAGeometry(n), scan);
            CHECK(antenna::elements_from_beamwidth(bw, scan) == n);
            CHECK(std::abs(antenna::gain_from_beamwidth(bw, scan) - n) <= 1e-9);
        }
    }
}

TEST_CASE("window_value covers centers, edges, and the outside")
{
    const BeamSpec rect(Shape::rect, 10.0, 90.0);
    CHECK(antenna::window_value(rect, 90.0) == 1.0);
    CHECK(antenna::window_value(rect, 85.0) == 1.0); // closed edge
    CHECK(antenna::window_value(rect, 95.0) == 1.0);
    CHECK(antenna::window_value(rect, 84.999) == 0.0);
    CHECK(antenna::window_value(rect, 95.001) == 0.0);

    const BeamSpec tri(Shape::tri, 10.0, 90.0);
    CHECK(antenna::window_value(tri, 90.0) == 1.0);
    CHECK(antenna::window_value(tri, 85.0) == 0.5); // taper reaches half power
    CHECK(antenna::window_value(tri, 95.0) == 0.5);
    CHECK(std::abs(antenna::window_value(tri, 87.5) - 0.75) <= 1e-15);
    CHECK(antenna::window_value(tri, 84.999) == 0.0);

    // Degenerate beam captures nothing, even at its own center.
    const BeamSpec zero(Shape::rect, 0.0, 90.0);
    CHECK(antenna::window_value(zero, 90.0) == 0.0);

    // Offset form agrees with the absolute form.
    CHECK(antenna::window_shape(Shape::tri, -2.5, 10.0) == antenna::window_value(tri, 87.5));
}

TEST_CASE("is_endfire flags only the exact axis directions")
{
    CHECK(antenna::is_endfire(0.0));
    CHECK(antenna::is_endfire(180.0));
    CHECK_FALSE(antenna::is_endfire(1e-9));
    CHECK_FALSE(antenna::is_endfire(179.9999999));
    CHECK_FALSE(antenna::is_endfire(90.0));
    CHECK_THROWS_AS(antenna::is_endfire(-1.0), DomainError);
    CHECK_THROWS_AS(antenna::is_endfire(180.5), DomainError);
}

TEST_CASE("constructors reject invalid geometry and beams")
{
    CHECK_THROWS_AS(ULAGeometry(1), DomainError);
    CHECK_THROWS_AS(ULAGeometry(0), DomainError);
    CHECK_THROWS_AS(ULAGeometry(-3), DomainError);
    CHECK_THROWS_AS(ULAGeometry(4, 0.6), DomainError);
    CHECK_NOTHROW(ULAGeometry(2));

    CHECK_THROWS_AS(BeamSpec(Shape::rect, -1.0, 90.0), DomainError);
    CHECK_THROWS_AS(BeamSpec(Shape::rect, 10.0, 190.0), DomainError);
    CHECK_THROWS_AS(BeamSpec(Shape::rect, 10.0, -0.1), DomainError);
    CHECK_NOTHROW(BeamSpec(Shape::tri, 0.0, 90.0));

    CHECK_THROWS_AS(antenna::gain_from_beamwidth(0.0, 90.0), DomainError);
    CHECK_THROWS_AS(antenna::elements_from_beamwidth(-2.0, 90.0), DomainError);
    CHECK_THROWS_AS(antenna::beamwidth_from_elements(ULAGeometry(8), 200.0), DomainError);
}
